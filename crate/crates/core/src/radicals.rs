//! Radicals, higher `p^s`-radicals, square-free parts and truncation gcds.

use crate::error::{Error, Result};
use crate::hasse::{hasse_partial, poly_pth_root};
use crate::mvpoly::{gcd, lcm_all, MvPoly};

/// `gcd(f, r^k)` for square-free `r`, computed by peeling one copy of `r`
/// at a time so that `r^k` is never expanded.
pub fn gcd_with_squarefree_power(f: &MvPoly, r: &MvPoly, k: u64) -> Result<MvPoly> {
    let mut acc = MvPoly::one(f.field(), f.nvars());
    let mut rest = f.clone();
    for _ in 0..k {
        let d = gcd(&rest, r)?;
        if d.is_constant() {
            break;
        }
        rest = rest.exact_div(&d)?;
        acc = &acc * &d;
    }
    Ok(acc.monic())
}

/// `R(f) = lcm_j f / gcd(f, df/dz_j)`.
///
/// In characteristic 0 this equals `f / gcd(f, df/dz_1, ..., df/dz_m)`,
/// which needs one shrinking gcd chain instead of `m` gcds and an lcm.
pub fn radical(f: &MvPoly) -> Result<MvPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    if !f.field().is_char_p() {
        let mut g = f.clone();
        for j in 0..f.nvars() {
            if g.is_constant() {
                break;
            }
            let d = f.derivative(j);
            if !d.is_zero() {
                g = gcd(&g, &d)?;
            }
        }
        return Ok(f.exact_div(&g)?.monic());
    }
    let mut hs = Vec::new();
    for j in 0..f.nvars() {
        let d = f.derivative(j);
        if d.is_zero() {
            continue;
        }
        hs.push(f.exact_div(&gcd(f, &d)?)?);
    }
    if hs.is_empty() {
        return Ok(MvPoly::one(f.field(), f.nvars()));
    }
    lcm_all(&hs)
}

/// The radicals `R_{p^0}(f), ..., R_{p^s}(f)` together with the first level at
/// which the chain is known to be stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalChain {
    pub f: MvPoly,
    pub entries: Vec<(u32, MvPoly)>,
    pub terminal_s: u32,
}

/// First `s` with `p^{s+1} > deg f`.
pub fn terminal_level(p: u64, degree: u32) -> u32 {
    let mut s = 0;
    let mut q = p;
    while q <= degree as u64 {
        q *= p;
        s += 1;
    }
    s
}

fn check_char_p(f: &MvPoly) -> Result<u64> {
    if !f.field().is_char_p() {
        return Err(Error::WrongCharacteristic);
    }
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    Ok(f.field().p())
}

/// One inductive step: `R_{p^s}(f)` from `R_{p^{s-1}}(f)`.
fn next_radical(f: &MvPoly, prev: &MvPoly, s: u32) -> Result<MvPoly> {
    let p = f.field().p();
    let q = p.pow(s);
    let bar = f.exact_div(&gcd_with_squarefree_power(f, prev, q)?)?;
    let mut hs = Vec::new();
    for i in 0..f.nvars() {
        let d = hasse_partial(&bar, i, q as u32)?;
        let g = gcd(&bar, &d)?;
        hs.push(bar.exact_div(&g)?);
    }
    let h = lcm_all(&hs)?;
    let prev_h = higher_radical(&h, s - 1)?;
    let g = h.exact_div(&gcd_with_squarefree_power(&h, &prev_h, q - 1)?)?;
    let root = poly_pth_root(&g.monic(), s)
        .map_err(|_| Error::Internal(format!("level-{s} radical input is not a p^{s}-th power")))?;
    lcm_all([prev, &root])
}

/// `R_{p^s}(f)`; `s = 0` gives the radical.
pub fn higher_radical(f: &MvPoly, s: u32) -> Result<MvPoly> {
    check_char_p(f)?;
    let mut r = radical(f)?;
    for level in 1..=s {
        if f.is_constant() {
            break;
        }
        r = next_radical(f, &r, level)?;
    }
    Ok(r)
}

/// Every radical up to the terminal level.
pub fn radical_chain(f: &MvPoly) -> Result<RadicalChain> {
    let p = check_char_p(f)?;
    let terminal_s = terminal_level(p, f.total_degree());
    let mut r = radical(f)?;
    let mut entries = vec![(0, r.clone())];
    for level in 1..=terminal_s {
        r = next_radical(f, &r, level)?;
        entries.push((level, r.clone()));
    }
    Ok(RadicalChain {
        f: f.clone(),
        entries,
        terminal_s,
    })
}

/// `S(f)`: the square-free polynomial with exactly the irreducible factors
/// of `f`.
pub fn square_free_part(f: &MvPoly) -> Result<MvPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    if !f.field().is_char_p() {
        return radical(f);
    }
    let s = terminal_level(f.field().p(), f.total_degree());
    higher_radical(f, s)
}

/// `gcd(f, S(f)^ell)`: every irreducible factor with multiplicity capped at
/// `ell`.
pub fn trunc_gcd(f: &MvPoly, ell: u64) -> Result<MvPoly> {
    let s = square_free_part(f)?;
    gcd_with_squarefree_power(f, &s, ell)
}

/// `gcd(f, R_{p^sigma}(f)^a)`.
pub fn sigma_radical_gcd(f: &MvPoly, a: u64, sigma: u32) -> Result<MvPoly> {
    let r = higher_radical(f, sigma)?;
    gcd_with_squarefree_power(f, &r, a)
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
    fn radical_examples() {
        let q = FieldSpec::rational(3).unwrap();
        let z = ["z"];
        assert_eq!(
            radical(&p(q, &z, "z^2*(z+1)")).unwrap(),
            p(q, &z, "z*(z+1)")
        );
        let f5 = FieldSpec::prime_field(5).unwrap();
        assert!(radical(&p(f5, &z, "z^5")).unwrap().is_one());
        let sf = p(q, &["x", "y"], "x^2 + 3*y + 1");
        assert_eq!(radical(&sf).unwrap(), sf);
        assert_eq!(radical(&MvPoly::zero(q, 1)), Err(Error::ZeroPoly));
    }

    #[test]
    fn higher_radical_examples() {
        let f3 = FieldSpec::prime_field(3).unwrap();
        let v = ["x", "y"];
        assert_eq!(
            higher_radical(&p(f3, &v, "x^3"), 1).unwrap(),
            p(f3, &v, "x")
        );
        let f = p(f3, &v, "x^3*y^9");
        assert_eq!(higher_radical(&f, 1).unwrap(), p(f3, &v, "x"));
        assert_eq!(higher_radical(&f, 2).unwrap(), p(f3, &v, "x*y"));
        let sf = p(f3, &v, "x*y + 1");
        assert_eq!(higher_radical(&sf, 2).unwrap(), sf);
        let q = FieldSpec::rational(3).unwrap();
        assert_eq!(
            higher_radical(&p(q, &v, "x"), 1),
            Err(Error::WrongCharacteristic)
        );
    }

    #[test]
    fn square_free_examples() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        let z = ["z"];
        assert_eq!(square_free_part(&p(f5, &z, "z^5")).unwrap(), p(f5, &z, "z"));
        let q = FieldSpec::rational(3).unwrap();
        assert_eq!(
            square_free_part(&p(q, &z, "z^2*(z+1)^3")).unwrap(),
            p(q, &z, "z*(z+1)")
        );
        assert!(square_free_part(&p(q, &z, "5")).unwrap().is_one());
    }

    #[test]
    fn truncation_examples() {
        let q = FieldSpec::rational(3).unwrap();
        let z = ["z"];
        assert_eq!(trunc_gcd(&p(q, &z, "z^3"), 2).unwrap(), p(q, &z, "z^2"));
        let f = p(q, &z, "2*z^2*(z+1)");
        assert_eq!(trunc_gcd(&f, 5).unwrap(), f.monic());
        let f3 = FieldSpec::prime_field(3).unwrap();
        let v = ["x", "y"];
        assert_eq!(
            trunc_gcd(&p(f3, &v, "x^2*y^3"), 1).unwrap(),
            p(f3, &v, "x*y")
        );
    }

    #[test]
    fn sigma_examples() {
        let f3 = FieldSpec::prime_field(3).unwrap();
        let z = ["z"];
        assert!(sigma_radical_gcd(&p(f3, &z, "z^9"), 1, 0).unwrap().is_one());
        assert_eq!(
            sigma_radical_gcd(&p(f3, &z, "z^3"), 1, 1).unwrap(),
            p(f3, &z, "z")
        );
        let sf = p(f3, &z, "z^2+1");
        assert_eq!(sigma_radical_gcd(&sf, 1, 0).unwrap(), sf);
    }

    #[test]
    fn chain_terminates() {
        let f2 = FieldSpec::prime_field(2).unwrap();
        let f = p(f2, &["z"], "z^4*(z+1)^2*(z^2+z+1)");
        let chain = radical_chain(&f).unwrap();
        assert_eq!(chain.terminal_s, 3);
        let last = &chain.entries.last().unwrap().1;
        assert_eq!(last, &p(f2, &["z"], "z*(z+1)*(z^2+z+1)"));
    }
}
