//! Coefficient fields with an exact non-Archimedean absolute value.
//!
//! Three exact fields are supported:
//!
//! * `Q` with the `p`-adic absolute value (characteristic 0),
//! * `F_p` with the trivial absolute value,
//! * `F_p(t)` with the `t`-adic absolute value.
//!
//! Absolute values are only ever handled on the logarithmic scale
//! `log_p |a|`, which is an integer on every nonzero element of these fields,
//! so every comparison is an exact rational comparison.

mod fp_poly;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
pub use fp_poly::FpPoly;
pub(crate) use fp_poly::{inv_mod, mul_mod};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    /// `Q` valued by `|a| = p^{-v_p(a)}`.
    RationalPAdic,
    /// `F_p` with the trivial absolute value.
    PrimeField,
    /// `F_p(t)` valued by `|a| = p^{-ord_t(a)}`.
    RatFuncTAdic,
}

impl FieldKind {
    pub fn name(self) -> &'static str {
        match self {
            FieldKind::RationalPAdic => "RATIONAL_P_ADIC",
            FieldKind::PrimeField => "PRIME_FIELD",
            FieldKind::RatFuncTAdic => "RATFUNC_T_ADIC",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "RATIONAL_P_ADIC" => Some(FieldKind::RationalPAdic),
            "PRIME_FIELD" => Some(FieldKind::PrimeField),
            "RATFUNC_T_ADIC" => Some(FieldKind::RatFuncTAdic),
            _ => None,
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field together with the prime that fixes its absolute value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    kind: FieldKind,
    p: u64,
}

/// Element of `F_p(t)` in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: FpPoly,
    den: FpPoly,
}

impl RatFunc {
    pub fn numerator(&self) -> &FpPoly {
        &self.num
    }

    pub fn denominator(&self) -> &FpPoly {
        &self.den
    }
}

/// An exact field element. Which variant is legal is decided by the
/// [`FieldSpec`] it is used with.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(Rational),
    Residue(u64),
    RatFunc(RatFunc),
}

/// `log_p |a|`, or `NegInfinity` for `a = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LogValue {
    NegInfinity,
    Finite(Rational),
}

impl LogValue {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            LogValue::NegInfinity => None,
            LogValue::Finite(q) => Some(q),
        }
    }

    pub fn is_neg_infinity(&self) -> bool {
        matches!(self, LogValue::NegInfinity)
    }

    /// `log |ab| = log |a| + log |b|`, absorbing at `-inf`.
    pub fn plus(&self, other: &LogValue) -> LogValue {
        match (self, other) {
            (LogValue::Finite(a), LogValue::Finite(b)) => LogValue::Finite(a + b),
            _ => LogValue::NegInfinity,
        }
    }

    pub fn plus_rational(&self, q: &Rational) -> LogValue {
        match self {
            LogValue::Finite(a) => LogValue::Finite(a + q),
            LogValue::NegInfinity => LogValue::NegInfinity,
        }
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogValue::NegInfinity => write!(f, "-inf"),
            LogValue::Finite(q) => write!(f, "{q}"),
        }
    }
}

fn padic_valuation(n: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut v = 0;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

impl FieldSpec {
    pub fn new(kind: FieldKind, p: u64) -> Result<Self> {
        // p below 2^31 keeps every residue product inside u64 before reduction
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::InvalidPrime(p));
        }
        Ok(FieldSpec { kind, p })
    }

    pub fn rational(p: u64) -> Result<Self> {
        FieldSpec::new(FieldKind::RationalPAdic, p)
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        FieldSpec::new(FieldKind::PrimeField, p)
    }

    pub fn ratfunc(p: u64) -> Result<Self> {
        FieldSpec::new(FieldKind::RatFuncTAdic, p)
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn characteristic(&self) -> u64 {
        match self.kind {
            FieldKind::RationalPAdic => 0,
            _ => self.p,
        }
    }

    pub fn is_char_p(&self) -> bool {
        self.characteristic() != 0
    }

    pub fn zero(&self) -> Coeff {
        match self.kind {
            FieldKind::RationalPAdic => Coeff::Rational(Rational::zero()),
            FieldKind::PrimeField => Coeff::Residue(0),
            FieldKind::RatFuncTAdic => Coeff::RatFunc(RatFunc {
                num: FpPoly::zero(),
                den: FpPoly::one(),
            }),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self.kind {
            FieldKind::RationalPAdic => Coeff::Rational(Rational::from_integer(n.clone())),
            FieldKind::PrimeField => Coeff::Residue(self.reduce(n)),
            FieldKind::RatFuncTAdic => Coeff::RatFunc(RatFunc {
                num: FpPoly::constant(self.reduce(n), self.p),
                den: FpPoly::one(),
            }),
        }
    }

    /// Builds a rational number; in characteristic `p` the denominator must be
    /// invertible.
    pub fn from_rational(&self, q: &Rational) -> Result<Coeff> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        self.div(&num, &den)
    }

    /// The generator `t` of `F_p(t)`.
    pub fn t(&self) -> Option<Coeff> {
        (self.kind == FieldKind::RatFuncTAdic).then(|| {
            Coeff::RatFunc(RatFunc {
                num: FpPoly::t(),
                den: FpPoly::one(),
            })
        })
    }

    /// Builds `num / den` in `F_p(t)`.
    pub fn ratfunc_from(&self, num: FpPoly, den: FpPoly) -> Result<Coeff> {
        if self.kind != FieldKind::RatFuncTAdic {
            return Err(Error::SpecMismatch);
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Coeff::RatFunc(self.canonical_ratfunc(num, den)))
    }

    fn reduce(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        n.mod_floor(&p).to_u64().expect("residue fits in u64")
    }

    fn canonical_ratfunc(&self, num: FpPoly, den: FpPoly) -> RatFunc {
        let p = self.p;
        if num.is_zero() {
            return RatFunc {
                num,
                den: FpPoly::one(),
            };
        }
        let g = num.gcd(&den, p);
        let (mut num, _) = num.div_rem(&g, p);
        let (mut den, _) = den.div_rem(&g, p);
        let lead = den.leading();
        if lead != 1 {
            let inv = inv_mod(lead, p);
            num = num.scale(inv, p);
            den = den.scale(inv, p);
        }
        RatFunc { num, den }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Residue(r) => *r == 0,
            Coeff::RatFunc(f) => f.num.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Residue(r) => *r == 1,
            Coeff::RatFunc(f) => f.num.is_one() && f.den.is_one(),
        }
    }

    /// Whether `a` is a legal canonical element of this field.
    pub fn owns(&self, a: &Coeff) -> bool {
        match (self.kind, a) {
            (FieldKind::RationalPAdic, Coeff::Rational(_)) => true,
            (FieldKind::PrimeField, Coeff::Residue(r)) => *r < self.p,
            (FieldKind::RatFuncTAdic, Coeff::RatFunc(f)) => {
                let p = self.p;
                f.num.coeffs().iter().chain(f.den.coeffs()).all(|&c| c < p)
                    && f.den.leading() == 1
                    && f.num.gcd(&f.den, p).is_one()
            }
            _ => false,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        let p = self.p;
        match (a, b) {
            (Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x + y),
            (Coeff::Residue(x), Coeff::Residue(y)) => Coeff::Residue((x + y) % p),
            (Coeff::RatFunc(x), Coeff::RatFunc(y)) => {
                if x.den == y.den {
                    return Coeff::RatFunc(
                        self.canonical_ratfunc(x.num.add(&y.num, p), x.den.clone()),
                    );
                }
                let num = x.num.mul(&y.den, p).add(&y.num.mul(&x.den, p), p);
                let den = x.den.mul(&y.den, p);
                Coeff::RatFunc(self.canonical_ratfunc(num, den))
            }
            _ => panic!("mixed coefficient kinds"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        let p = self.p;
        match a {
            Coeff::Rational(x) => Coeff::Rational(-x),
            Coeff::Residue(x) => Coeff::Residue((p - x) % p),
            Coeff::RatFunc(x) => Coeff::RatFunc(RatFunc {
                num: x.num.neg(p),
                den: x.den.clone(),
            }),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        let p = self.p;
        match (a, b) {
            (Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x * y),
            (Coeff::Residue(x), Coeff::Residue(y)) => Coeff::Residue(mul_mod(*x, *y, p)),
            (Coeff::RatFunc(x), Coeff::RatFunc(y)) => {
                if x.den.is_one() && y.den.is_one() {
                    return Coeff::RatFunc(RatFunc {
                        num: x.num.mul(&y.num, p),
                        den: FpPoly::one(),
                    });
                }
                let num = x.num.mul(&y.num, p);
                let den = x.den.mul(&y.den, p);
                Coeff::RatFunc(self.canonical_ratfunc(num, den))
            }
            _ => panic!("mixed coefficient kinds"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        let p = self.p;
        Ok(match a {
            Coeff::Rational(x) => Coeff::Rational(x.recip()),
            Coeff::Residue(x) => Coeff::Residue(inv_mod(*x, p)),
            Coeff::RatFunc(x) => {
                Coeff::RatFunc(self.canonical_ratfunc(x.den.clone(), x.num.clone()))
            }
        })
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Coeff, mut e: u64) -> Coeff {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `log_p |a|`.
    pub fn log_abs(&self, a: &Coeff) -> LogValue {
        if self.is_zero(a) {
            return LogValue::NegInfinity;
        }
        match a {
            Coeff::Rational(q) => {
                let v = padic_valuation(q.numer(), self.p) - padic_valuation(q.denom(), self.p);
                LogValue::Finite(int(-v))
            }
            Coeff::Residue(_) => LogValue::Finite(Rational::zero()),
            Coeff::RatFunc(f) => {
                let on = f.num.ord_t().expect("nonzero") as i64;
                let od = f.den.ord_t().expect("nonzero") as i64;
                LogValue::Finite(int(od - on))
            }
        }
    }

    /// `b` with `b^(p^s) = a`.
    pub fn pth_root(&self, a: &Coeff, s: u32) -> Result<Coeff> {
        if !self.is_char_p() {
            return Err(Error::WrongCharacteristic);
        }
        match a {
            Coeff::Residue(_) => Ok(a.clone()),
            Coeff::RatFunc(f) => {
                let num = f.num.frobenius_root(s, self.p).ok_or(Error::NotAPthPower)?;
                let den = f.den.frobenius_root(s, self.p).ok_or(Error::NotAPthPower)?;
                Ok(Coeff::RatFunc(RatFunc { num, den }))
            }
            Coeff::Rational(_) => Err(Error::WrongCharacteristic),
        }
    }

    /// Parses the coefficient grammar: `n`, `n/d`, `k`, `P(t)`, `P(t)/Q(t)`.
    pub fn parse_coeff(&self, text: &str) -> Result<Coeff> {
        crate::parse::parse_constant(*self, text)
    }

    /// Sign used when printing polynomials over `Q`; `None` elsewhere.
    pub(crate) fn is_negative(&self, a: &Coeff) -> bool {
        matches!(a, Coeff::Rational(q) if q.is_negative())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::RationalPAdic => write!(f, "Q ({}-adic)", self.p),
            FieldKind::PrimeField => write!(f, "F_{}", self.p),
            FieldKind::RatFuncTAdic => write!(f, "F_{}(t)", self.p),
        }
    }
}

impl Coeff {
    /// True when the printed form needs parentheses inside a product.
    pub(crate) fn is_compound(&self) -> bool {
        match self {
            Coeff::RatFunc(f) => !(f.den.is_one() && f.num.degree().unwrap_or(0) == 0),
            _ => false,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) => write!(f, "{q}"),
            Coeff::Residue(r) => write!(f, "{r}"),
            Coeff::RatFunc(x) => {
                if x.den.is_one() {
                    write!(f, "{}", x.num.to_text())
                } else {
                    let num = x.num.to_text();
                    let num = if x.num.coeffs().iter().filter(|&&c| c != 0).count() > 1 {
                        format!("({num})")
                    } else {
                        num
                    };
                    write!(f, "{}/({})", num, x.den.to_text())
                }
            }
        }
    }
}
