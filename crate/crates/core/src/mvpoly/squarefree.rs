//! Desk-scale factorization oracle used to cross-check radicals.
//!
//! The algorithm is the classical Musser iteration on `gcd(f, grad f)` with a
//! Frobenius root for the part whose multiplicities are divisible by `p`,
//! followed by splitting each square-free layer along its contents in every
//! variable. Factors are pairwise coprime and carry exact multiplicities; they
//! are irreducible whenever the layers do not hide several primitive factors
//! of the same multiplicity.

use super::{gcd_all, MvPoly};
use crate::error::{Error, Result};
use crate::hasse::poly_pth_root;

pub const DEFAULT_ORACLE_DEGREE_CAP: u32 = 8;

/// Pairwise-coprime factors of `f` with multiplicities, sorted by multiplicity
/// then by canonical text. Units are dropped.
pub fn squarefree_factor_oracle(f: &MvPoly, cap: u32) -> Result<Vec<(MvPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let degree = f.total_degree();
    if degree > cap {
        return Err(Error::DegreeTooLarge { degree, cap });
    }
    let mut out = Vec::new();
    layers(&f.monic(), 1, &mut out)?;
    let mut split = Vec::new();
    for (g, e) in out {
        for h in split_contents(&g) {
            split.push((h, e));
        }
    }
    split.sort_by(|a, b| {
        a.1.cmp(&b.1)
            .then_with(|| a.0.to_string().cmp(&b.0.to_string()))
    });
    Ok(split)
}

fn layers(f: &MvPoly, scale: u32, out: &mut Vec<(MvPoly, u32)>) -> Result<()> {
    if f.is_constant() {
        return Ok(());
    }
    let derivs: Vec<MvPoly> = (0..f.nvars()).map(|j| f.derivative(j)).collect();
    if derivs.iter().all(MvPoly::is_zero) {
        let root = poly_pth_root(f, 1).map_err(|_| Error::Inseparable)?;
        return layers(&root, scale * f.field().p() as u32, out);
    }
    let mut c = gcd_all(std::iter::once(f).chain(derivs.iter()))?;
    let mut w = f.exact_div(&c)?;
    let mut i = 1;
    while !w.is_constant() {
        let y = crate::mvpoly::gcd(&w, &c)?;
        let z = w.exact_div(&y)?;
        if !z.is_constant() {
            out.push((z.monic(), i * scale));
        }
        c = c.exact_div(&y)?;
        w = y;
        i += 1;
    }
    if !c.is_constant() {
        let root = poly_pth_root(&c, 1).map_err(|_| Error::Inseparable)?;
        layers(&root, scale * f.field().p() as u32, out)?;
    }
    Ok(())
}

/// Splits a square-free polynomial along its contents with respect to each
/// variable in turn.
fn split_contents(g: &MvPoly) -> Vec<MvPoly> {
    for v in 0..g.nvars() {
        if g.degree_in(v) == 0 {
            continue;
        }
        let coeffs = g.to_univariate(v);
        let nonzero: Vec<&MvPoly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
        let cont = gcd_all(nonzero).expect("nonzero coefficients");
        if !cont.is_constant() {
            let prim = g.exact_div(&cont).expect("content divides");
            let mut out = split_contents(&cont);
            out.extend(split_contents(&prim));
            return out;
        }
    }
    vec![g.monic()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::FieldSpec;

    fn p(field: FieldSpec, vars: &[&str], s: &str) -> MvPoly {
        let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        MvPoly::parse(field, &names, s).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let q = FieldSpec::rational(3).unwrap();
        let z = ["z"];
        let got = squarefree_factor_oracle(&p(q, &z, "z^2*(z+1)"), 8).unwrap();
        assert_eq!(got, vec![(p(q, &z, "z+1"), 1), (p(q, &z, "z"), 2)]);
        let irr = p(q, &z, "z^2+1");
        assert_eq!(squarefree_factor_oracle(&irr, 8).unwrap(), vec![(irr, 1)]);

        let f3 = FieldSpec::prime_field(3).unwrap();
        let v = ["x", "y"];
        let got = squarefree_factor_oracle(&p(f3, &v, "x^3*y^6"), 9).unwrap();
        assert_eq!(got, vec![(p(f3, &v, "x"), 3), (p(f3, &v, "y"), 6)]);
        assert_eq!(
            squarefree_factor_oracle(&p(f3, &v, "x^3*y^6"), 8),
            Err(Error::DegreeTooLarge { degree: 9, cap: 8 })
        );
    }

    #[test]
    fn inseparable_over_ratfunc() {
        let ft = FieldSpec::ratfunc(3).unwrap();
        let f = p(ft, &["x"], "x^3 - t");
        assert_eq!(squarefree_factor_oracle(&f, 8), Err(Error::Inseparable));
    }
}
