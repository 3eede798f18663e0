//! Gauss norms and counting functions in log-radius coordinates `r = p^rho`.

mod piecewise;

use std::collections::BTreeMap;

use num_traits::Zero;

pub use piecewise::{Line, PiecewiseLinear};

use crate::coeffs::{LogValue, Rational};
use crate::error::{Error, Result};
use crate::mvpoly::MvPoly;
use crate::radicals::trunc_gcd;

/// `log_p |f|_{p^rho} = max_gamma (log_p |a_gamma| + rho |gamma|)`.
pub fn log_gauss_norm(f: &MvPoly, rho: &Rational) -> LogValue {
    let field = f.field();
    f.terms()
        .map(|(m, c)| {
            field
                .log_abs(c)
                .plus_rational(&(rho * Rational::from_integer(m.total_degree().into())))
        })
        .max()
        .unwrap_or(LogValue::NegInfinity)
}

/// `rho -> log_p |f|_{p^rho}` as the upper envelope of one line per degree.
pub fn norm_profile(f: &MvPoly) -> Result<PiecewiseLinear> {
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let field = f.field();
    let mut best: BTreeMap<u32, Rational> = BTreeMap::new();
    for (m, c) in f.terms() {
        let v = field
            .log_abs(c)
            .finite()
            .expect("nonzero coefficient")
            .clone();
        best.entry(m.total_degree())
            .and_modify(|b| {
                if v > *b {
                    *b = v.clone();
                }
            })
            .or_insert(v);
    }
    let lines = best
        .into_iter()
        .map(|(d, b)| Line::new(d as i64, b))
        .collect();
    Ok(PiecewiseLinear::upper_envelope(lines))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingData {
    /// `n_f(0, 0)`, the lowest total degree in the support.
    pub n_at_zero: u32,
    /// `(rho, n)`: from `rho` on (inclusive), `n_f(0, p^rho) = n`.
    pub steps: Vec<(Rational, u32)>,
    /// `rho -> N_f(0, p^rho)`.
    pub integrated: PiecewiseLinear,
}

impl CountingData {
    /// `n_f(0, p^rho)`, right-continuous at jumps.
    pub fn n_at(&self, rho: &Rational) -> u32 {
        self.steps
            .iter()
            .take_while(|(b, _)| b <= rho)
            .last()
            .map_or(self.n_at_zero, |(_, n)| *n)
    }

    pub fn big_n_at(&self, rho: &Rational) -> Rational {
        self.integrated.eval(rho)
    }

    /// Degree of the counted divisor (slope of `N` for large `rho`).
    pub fn final_slope(&self) -> i64 {
        self.integrated.final_slope()
    }
}

fn counting_from_profile(profile: &PiecewiseLinear) -> CountingData {
    let lines = profile.lines();
    let n0 = lines[0].slope;
    let mut out_lines = vec![Line::new(n0, Rational::zero())];
    let mut steps = Vec::new();
    for (i, b) in profile.breakpoints().iter().enumerate() {
        let prev = out_lines.last().expect("nonempty");
        let value = prev.eval(b);
        let slope = lines[i + 1].slope;
        let intercept = value - b * Rational::from_integer(slope.into());
        out_lines.push(Line::new(slope, intercept));
        steps.push((b.clone(), slope as u32));
    }
    CountingData {
        n_at_zero: n0 as u32,
        steps,
        integrated: PiecewiseLinear::from_pieces(profile.breakpoints().to_vec(), out_lines),
    }
}

/// Unintegrated and integrated counting functions of the zeros of `f`.
pub fn counting(f: &MvPoly) -> Result<CountingData> {
    Ok(counting_from_profile(&norm_profile(f)?))
}

/// `C_f` with `N_f(0, r) = log |f|_r + C_f`, checked at every breakpoint and
/// on both tails.
pub fn poisson_constant(f: &MvPoly) -> Result<Rational> {
    let profile = norm_profile(f)?;
    let data = counting_from_profile(&profile);
    let diff = data.integrated.sub(&profile);
    let c = -profile.first_line().intercept.clone();
    let constant = diff
        .lines()
        .iter()
        .all(|l| l.slope == 0 && l.intercept == c);
    let at_breaks = profile
        .breakpoints()
        .iter()
        .all(|b| data.integrated.eval(b) - profile.eval(b) == c);
    if !constant || !at_breaks {
        return Err(Error::NotConstant);
    }
    Ok(c)
}

/// Counting data of `gcd(f, S(f)^ell)`: multiplicities capped at `ell`.
pub fn truncated_counting(f: &MvPoly, ell: u64) -> Result<CountingData> {
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    counting(&trunc_gcd(f, ell)?)
}

/// Norm profile of an entire function known only through its terms of total
/// degree below `order`.
///
/// The returned bound is the last breakpoint of the truncated profile: past
/// it the highest retained degree dominates, so unseen higher-degree terms may
/// change the answer. Below it the truncation is exact only if the discarded
/// tail stays below the profile there, which the caller must know.
pub fn truncated_series_profile(
    f: &MvPoly,
    order: u32,
) -> Result<(PiecewiseLinear, Option<Rational>)> {
    let kept = MvPoly::from_terms(
        f.field(),
        f.nvars(),
        f.terms()
            .filter(|(m, _)| m.total_degree() < order)
            .map(|(m, c)| (m.clone(), c.clone())),
    )?;
    let profile = norm_profile(&kept)?;
    let bound = profile.breakpoints().last().cloned();
    Ok((profile, bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{int, FieldSpec};

    fn p(field: FieldSpec, s: &str) -> MvPoly {
        MvPoly::parse(field, &["z".to_string()], s).unwrap()
    }

    #[test]
    fn gauss_norm_examples() {
        let q5 = FieldSpec::rational(5).unwrap();
        assert_eq!(
            log_gauss_norm(&p(q5, "z^3+1"), &int(2)),
            LogValue::Finite(int(6))
        );
        assert_eq!(
            log_gauss_norm(&p(q5, "1"), &int(-7)),
            LogValue::Finite(int(0))
        );
        assert_eq!(
            log_gauss_norm(&p(q5, "z-5"), &int(-2)),
            LogValue::Finite(int(-1))
        );
        assert_eq!(
            log_gauss_norm(&MvPoly::zero(q5, 1), &int(1)),
            LogValue::NegInfinity
        );
    }

    #[test]
    fn profile_examples() {
        let q5 = FieldSpec::rational(5).unwrap();
        let z = norm_profile(&p(q5, "z")).unwrap();
        assert_eq!(z.lines(), &[Line::new(1, int(0))]);
        let zp = norm_profile(&p(q5, "z-5")).unwrap();
        assert_eq!(zp.breakpoints(), &[int(-1)]);
        assert_eq!(zp.lines()[0].slope, 0);
        assert_eq!(zp.lines()[1].slope, 1);
        let mono = norm_profile(&p(q5, "25*z^4")).unwrap();
        assert_eq!(mono.lines(), &[Line::new(4, int(-2))]);
        assert_eq!(norm_profile(&MvPoly::zero(q5, 1)), Err(Error::ZeroPoly));
    }

    #[test]
    fn counting_examples() {
        let q5 = FieldSpec::rational(5).unwrap();
        let z = counting(&p(q5, "z")).unwrap();
        assert_eq!(z.n_at_zero, 1);
        assert_eq!(z.big_n_at(&int(3)), int(3));

        let zp = counting(&p(q5, "z-5")).unwrap();
        assert_eq!(zp.n_at(&int(-2)), 0);
        assert_eq!(zp.n_at(&int(-1)), 1);
        assert_eq!(zp.big_n_at(&int(-4)), int(0));
        assert_eq!(zp.big_n_at(&int(2)), int(3));

        let q3 = FieldSpec::rational(3).unwrap();
        let z2 = counting(&p(q3, "z^2")).unwrap();
        assert_eq!(z2.n_at_zero, 2);
        assert_eq!(z2.big_n_at(&int(-3)), int(-6));
    }

    #[test]
    fn poisson_examples() {
        let q5 = FieldSpec::rational(5).unwrap();
        assert_eq!(poisson_constant(&p(q5, "z")).unwrap(), int(0));
        assert_eq!(poisson_constant(&p(q5, "z-5")).unwrap(), int(1));
        assert_eq!(poisson_constant(&p(q5, "1/25")).unwrap(), int(-2));
    }

    #[test]
    fn truncated_examples() {
        let q = FieldSpec::rational(3).unwrap();
        let t = truncated_counting(&p(q, "z^3"), 1).unwrap();
        assert_eq!(t.n_at_zero, 1);
        let sf = p(q, "z^2+z+1");
        assert_eq!(truncated_counting(&sf, 4).unwrap(), counting(&sf).unwrap());
        let f5 = FieldSpec::prime_field(5).unwrap();
        let t = truncated_counting(&p(f5, "z^5"), 2).unwrap();
        assert_eq!(t.n_at_zero, 2);
        assert_eq!(t.final_slope(), 2);
    }
}
