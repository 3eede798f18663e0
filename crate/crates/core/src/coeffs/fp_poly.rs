//! Dense univariate polynomials over a prime field, used as numerators and
//! denominators of `F_p(t)` elements. The modulus is passed to every
//! operation; the struct itself only stores residues `0..p`, low degree first.

use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FpPoly {
    coeffs: Vec<u64>,
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

impl FpPoly {
    pub fn zero() -> Self {
        FpPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: u64, p: u64) -> Self {
        FpPoly::from_coeffs(vec![c % p], p)
    }

    pub fn one() -> Self {
        FpPoly { coeffs: vec![1] }
    }

    /// `t`
    pub fn t() -> Self {
        FpPoly { coeffs: vec![0, 1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>, p: u64) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Order of vanishing at `t = 0`; `None` for zero.
    pub fn ord_t(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    pub fn add(&self, other: &Self, p: u64) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % p
            })
            .collect();
        FpPoly { coeffs }.trim()
    }

    pub fn neg(&self, p: u64) -> Self {
        FpPoly {
            coeffs: self.coeffs.iter().map(|&c| (p - c) % p).collect(),
        }
    }

    pub fn sub(&self, other: &Self, p: u64) -> Self {
        self.add(&other.neg(p), p)
    }

    pub fn scale(&self, c: u64, p: u64) -> Self {
        FpPoly {
            coeffs: self.coeffs.iter().map(|&a| mul_mod(a, c, p)).collect(),
        }
        .trim()
    }

    pub fn mul(&self, other: &Self, p: u64) -> Self {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        FpPoly { coeffs: out }.trim()
    }

    pub fn pow(&self, mut e: u64, p: u64) -> Self {
        let mut base = self.clone();
        let mut acc = FpPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, p);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, p);
            }
        }
        acc
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self, p: u64) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv_lead = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (FpPoly::zero(), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = mul_mod(rem[i], inv_lead, p);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = (rem[idx] + p - mul_mod(c, d, p)) % p;
            }
        }
        (
            FpPoly { coeffs: quot }.trim(),
            FpPoly { coeffs: rem }.trim(),
        )
    }

    pub fn monic(&self, p: u64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), p), p)
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self, p: u64) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b, p);
            a = b;
            b = r;
        }
        a.monic(p)
    }

    /// `q` with `q^(p^s) = self` if every exponent is divisible by `p^s`
    /// (Frobenius is the identity on `F_p`).
    pub fn frobenius_root(&self, s: u32, p: u64) -> Option<Self> {
        let q = p.checked_pow(s)? as usize;
        if self
            .coeffs
            .iter()
            .enumerate()
            .any(|(i, &c)| c != 0 && i % q != 0)
        {
            return None;
        }
        let coeffs = self.coeffs.iter().step_by(q).copied().collect();
        Some(FpPoly { coeffs }.trim())
    }

    /// Total order used only for deterministic output.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Renders as a polynomial in `t`, e.g. `t^2+2*t+1`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            parts.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}*{mono}"),
            });
        }
        parts.join("+")
    }
}
