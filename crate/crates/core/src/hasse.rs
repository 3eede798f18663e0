//! Hasse derivatives and the subrings of `p^s`-th powers.

use num_bigint::BigInt;
use num_traits::One;

use crate::coeffs::{Coeff, FieldSpec};
use crate::error::{Error, Result};
use crate::mvpoly::{Monomial, MvPoly};

fn binomial_big(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `binom(n, k) mod p` by Lucas' theorem.
pub fn binomial_mod_p(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        // digits are below p, so the small binomial fits comfortably
        let small = binomial_big(nd, kd) % BigInt::from(p);
        let small: u64 = small.try_into().expect("residue fits");
        acc = acc * small % p;
        n /= p;
        k /= p;
    }
    acc
}

/// `binom(alpha, beta) = prod_i binom(alpha_i, beta_i)` as a field element.
pub fn multinomial(alpha: &Monomial, beta: &Monomial, field: FieldSpec) -> Result<Coeff> {
    if alpha.nvars() != beta.nvars() {
        return Err(Error::DimensionMismatch(
            "multi-index lengths differ".into(),
        ));
    }
    if !alpha.dominates(beta) {
        return Err(Error::IndexNotDominating);
    }
    let pairs = alpha.exps().iter().zip(beta.exps());
    if field.is_char_p() {
        let p = field.p();
        let r = pairs.fold(1u64, |acc, (&a, &b)| {
            acc * binomial_mod_p(a as u64, b as u64, p) % p
        });
        Ok(field.from_i64(r as i64))
    } else {
        let n = pairs.fold(BigInt::one(), |acc, (&a, &b)| {
            acc * binomial_big(a as u64, b as u64)
        });
        Ok(field.from_bigint(&n))
    }
}

/// `D^gamma f = sum_{alpha >= gamma} binom(alpha, gamma) a_alpha z^{alpha - gamma}`.
pub fn hasse_derivative(f: &MvPoly, gamma: &Monomial) -> Result<MvPoly> {
    if gamma.nvars() != f.nvars() {
        return Err(Error::DimensionMismatch(format!(
            "multi-index of length {} for {} variables",
            gamma.nvars(),
            f.nvars()
        )));
    }
    if gamma.is_zero() {
        return Ok(f.clone());
    }
    let field = f.field();
    let mut terms = Vec::new();
    for (m, c) in f.terms() {
        if let Some(rest) = m.checked_div(gamma) {
            let b = multinomial(m, gamma, field)?;
            if !field.is_zero(&b) {
                terms.push((rest, field.mul(c, &b)));
            }
        }
    }
    MvPoly::from_terms(field, f.nvars(), terms)
}

/// `D_i^k f`, the Hasse derivative of order `k` in the single variable `z_i`.
pub fn hasse_partial(f: &MvPoly, var: usize, k: u32) -> Result<MvPoly> {
    hasse_derivative(f, &Monomial::unit(f.nvars(), var, k))
}

fn check_char_p(field: FieldSpec) -> Result<u64> {
    if !field.is_char_p() {
        return Err(Error::WrongCharacteristic);
    }
    Ok(field.p())
}

/// Whether `f = g^{p^s}` for some `g` with coefficients in the represented
/// field.
pub fn is_in_e_ps(f: &MvPoly, s: u32) -> Result<bool> {
    check_char_p(f.field())?;
    Ok(poly_pth_root(f, s).is_ok())
}

/// `g` with `g^{p^s} = f`.
pub fn poly_pth_root(f: &MvPoly, s: u32) -> Result<MvPoly> {
    let p = check_char_p(f.field())?;
    let q = p.checked_pow(s).ok_or(Error::NotAPower)?;
    let field = f.field();
    let mut terms = Vec::with_capacity(f.num_terms());
    for (m, c) in f.terms() {
        if m.exps().iter().any(|&e| !(e as u64).is_multiple_of(q)) {
            return Err(Error::NotAPower);
        }
        let root = field.pth_root(c, s).map_err(|_| Error::NotAPower)?;
        terms.push((
            Monomial::new(m.exps().iter().map(|&e| (e as u64 / q) as u32)),
            root,
        ));
    }
    MvPoly::from_terms(field, f.nvars(), terms)
}
