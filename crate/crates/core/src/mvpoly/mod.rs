//! Sparse multivariate polynomials over a [`FieldSpec`].
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is the
//! graded lexicographical order, so iterating in reverse yields the canonical
//! descending term order and the last key is the leading monomial.

mod gcd;
mod squarefree;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::coeffs::{Coeff, FieldSpec};
use crate::error::{Error, Result};

pub use gcd::{gcd, gcd_all, lcm, lcm_all};
pub use squarefree::{squarefree_factor_oracle, DEFAULT_ORACLE_DEGREE_CAP};

/// Exponent vector `gamma` of `z^gamma`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        Monomial(exps.into_iter().collect())
    }

    pub fn zero(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    /// `e_i * k`.
    pub fn unit(nvars: usize, i: usize, k: u32) -> Self {
        let mut m = Monomial::zero(nvars);
        m.0[i] = k;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self - other` when `self` dominates `other`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.dominates(other).then(|| {
            Monomial(
                self.0
                    .iter()
                    .zip(other.0.iter())
                    .map(|(a, b)| a - b)
                    .collect(),
            )
        })
    }

    pub fn scale(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    pub fn max_component(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// All monomials in `nvars` variables of total degree exactly `deg`,
    /// ascending in graded-lex order.
    pub fn of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == nvars {
                prefix.push(deg);
                out.push(Monomial::new(prefix.iter().copied()));
                prefix.pop();
                return;
            }
            for e in 0..=deg {
                prefix.push(e);
                rec(nvars, deg - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if deg == 0 {
                out.push(Monomial::zero(0));
            }
            return out;
        }
        rec(nvars, deg, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All monomials of total degree `<= deg`, ascending in graded-lex order.
    pub fn up_to_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
        (0..=deg)
            .flat_map(|d| Monomial::of_degree(nvars, d))
            .collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvPoly {
    field: FieldSpec,
    nvars: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked `f op g`.
pub fn poly_arith(f: &MvPoly, g: &MvPoly, op: ArithOp) -> Result<MvPoly> {
    f.check_compatible(g)?;
    Ok(match op {
        ArithOp::Add => f + g,
        ArithOp::Sub => f - g,
        ArithOp::Mul => f * g,
    })
}

impl MvPoly {
    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        MvPoly {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: FieldSpec, nvars: usize) -> Self {
        MvPoly::constant(field, nvars, field.one())
    }

    pub fn constant(field: FieldSpec, nvars: usize, c: Coeff) -> Self {
        MvPoly::monomial(field, nvars, Monomial::zero(nvars), c)
    }

    pub fn from_i64(field: FieldSpec, nvars: usize, c: i64) -> Self {
        MvPoly::constant(field, nvars, field.from_i64(c))
    }

    /// The variable `z_i`.
    pub fn var(field: FieldSpec, nvars: usize, i: usize) -> Self {
        MvPoly::monomial(field, nvars, Monomial::unit(nvars, i, 1), field.one())
    }

    pub fn monomial(field: FieldSpec, nvars: usize, mono: Monomial, c: Coeff) -> Self {
        assert_eq!(mono.nvars(), nvars);
        let mut terms = BTreeMap::new();
        if !field.is_zero(&c) {
            terms.insert(mono, c);
        }
        MvPoly {
            field,
            nvars,
            terms,
        }
    }

    /// Sums the given terms; zero coefficients are dropped.
    pub fn from_terms(
        field: FieldSpec,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, Coeff)>,
    ) -> Result<Self> {
        let mut out = MvPoly::zero(field, nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch(format!(
                    "exponent vector of length {} in {} variables",
                    m.nvars(),
                    nvars
                )));
            }
            if !field.owns(&c) {
                return Err(Error::SpecMismatch);
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, m: Monomial, c: Coeff) {
        let field = self.field;
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !field.is_zero(&c) {
                    e.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = field.add(e.get(), &c);
                if field.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.is_constant()
            && self
                .terms
                .values()
                .next()
                .is_some_and(|c| self.field.is_one(c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms.get(m)
    }

    pub fn constant_term(&self) -> Coeff {
        self.terms
            .get(&Monomial::zero(self.nvars))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.leading_term().map_or(0, |(m, _)| m.total_degree())
    }

    /// Smallest total degree among the support (`n_f(0,0)`).
    pub fn min_degree(&self) -> u32 {
        self.terms.keys().next().map_or(0, Monomial::total_degree)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn check_compatible(&self, other: &MvPoly) -> Result<()> {
        if self.field != other.field || self.nvars != other.nvars {
            return Err(Error::SpecMismatch);
        }
        Ok(())
    }

    pub fn scale(&self, c: &Coeff) -> MvPoly {
        if self.field.is_zero(c) {
            return MvPoly::zero(self.field, self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), self.field.mul(a, c)))
            .collect();
        MvPoly {
            field: self.field,
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &Coeff) -> MvPoly {
        if self.field.is_zero(c) {
            return MvPoly::zero(self.field, self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.mul(mono), self.field.mul(a, c)))
            .collect();
        MvPoly {
            field: self.field,
            nvars: self.nvars,
            terms,
        }
    }

    /// Divides by the graded-lex leading coefficient; zero stays zero.
    pub fn monic(&self) -> MvPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if self.field.is_one(lc) => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, mut e: u64) -> MvPoly {
        let mut base = self.clone();
        let mut acc = MvPoly::one(self.field, self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative in `z_var`.
    pub fn derivative(&self, var: usize) -> MvPoly {
        let mut out = MvPoly::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[var] -= 1;
            out.add_term(dm, self.field.mul(c, &self.field.from_i64(e as i64)));
        }
        out
    }

    /// `q` with `self = divisor * q`.
    pub fn exact_div(&self, divisor: &MvPoly) -> Result<MvPoly> {
        self.check_compatible(divisor)?;
        let (lm, lc) = divisor.leading_term().ok_or(Error::DivisionByZeroPoly)?;
        let field = self.field;
        let lc_inv = field.inv(lc)?;
        if divisor.num_terms() == 1 {
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                let q = m.checked_div(lm).ok_or(Error::NotDivisible)?;
                terms.insert(q, field.mul(c, &lc_inv));
            }
            return Ok(MvPoly {
                field,
                nvars: self.nvars,
                terms,
            });
        }
        let mut rem = self.clone();
        let mut quot = MvPoly::zero(field, self.nvars);
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.checked_div(lm).ok_or(Error::NotDivisible)?;
            let qc = field.mul(rc, &lc_inv);
            for (m, c) in &divisor.terms {
                rem.add_term(m.mul(&qm), field.neg(&field.mul(c, &qc)));
            }
            quot.terms.insert(qm, qc);
        }
        Ok(quot)
    }

    pub fn divides(&self, other: &MvPoly) -> bool {
        !self.is_zero() && other.exact_div(self).is_ok()
    }

    /// Sum of the given polynomials (zero for an empty iterator).
    pub fn sum<'a>(
        field: FieldSpec,
        nvars: usize,
        it: impl IntoIterator<Item = &'a MvPoly>,
    ) -> MvPoly {
        let mut out = MvPoly::zero(field, nvars);
        for f in it {
            for (m, c) in &f.terms {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn product<'a>(
        field: FieldSpec,
        nvars: usize,
        it: impl IntoIterator<Item = &'a MvPoly>,
    ) -> MvPoly {
        it.into_iter()
            .fold(MvPoly::one(field, nvars), |acc, f| &acc * f)
    }

    /// Coefficients of `self` as a polynomial in `z_var`; entry `k` holds
    /// the coefficient of `z_var^k`, free of `z_var`.
    pub(crate) fn to_univariate(&self, var: usize) -> Vec<MvPoly> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![MvPoly::zero(self.field, self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut rest = m.clone();
            rest.0[var] = 0;
            out[k].terms.insert(rest, c.clone());
        }
        out
    }

    pub(crate) fn from_univariate(
        coeffs: &[MvPoly],
        var: usize,
        field: FieldSpec,
        nvars: usize,
    ) -> MvPoly {
        let mut out = MvPoly::zero(field, nvars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut mm = m.clone();
                mm.0[var] += k as u32;
                out.terms.insert(mm, a.clone());
            }
        }
        out
    }

    /// Vector of coefficients indexed by the given monomial list.
    pub fn coefficient_vector(&self, basis: &[Monomial]) -> Vec<Coeff> {
        basis
            .iter()
            .map(|m| self.coeff(m).cloned().unwrap_or_else(|| self.field.zero()))
            .collect()
    }

    /// Substitutes `z_i -> z_i^k` in every variable.
    pub fn inflate(&self, k: u32) -> MvPoly {
        MvPoly {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.scale(k), c.clone()))
                .collect(),
        }
    }

    /// Renders with the given variable names; `z1, z2, ...` when `None`.
    pub fn to_text(&self, names: Option<&[String]>) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let default: Vec<String>;
        let names = match names {
            Some(n) => n,
            None => {
                default = (1..=self.nvars).map(|i| format!("z{i}")).collect();
                &default
            }
        };
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = self.field.is_negative(c);
            let abs = if negative {
                self.field.neg(c)
            } else {
                c.clone()
            };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono: Vec<String> = m
                .exps()
                .iter()
                .zip(names)
                .filter(|(e, _)| **e > 0)
                .map(|(e, n)| {
                    if *e == 1 {
                        n.clone()
                    } else {
                        format!("{n}^{e}")
                    }
                })
                .collect();
            let coeff_text = if abs.is_compound() {
                format!("({abs})")
            } else {
                abs.to_string()
            };
            if mono.is_empty() {
                out.push_str(&coeff_text);
            } else if self.field.is_one(&abs) {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&coeff_text);
                out.push('*');
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    /// Parses the polynomial text grammar over the given variable names.
    pub fn parse(field: FieldSpec, names: &[String], text: &str) -> Result<MvPoly> {
        crate::parse::parse_poly(field, names, text)
    }
}

impl fmt::Display for MvPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(None))
    }
}

impl Add for &MvPoly {
    type Output = MvPoly;

    fn add(self, rhs: &MvPoly) -> MvPoly {
        assert!(self.check_compatible(rhs).is_ok(), "spec mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MvPoly {
    type Output = MvPoly;

    fn sub(self, rhs: &MvPoly) -> MvPoly {
        assert!(self.check_compatible(rhs).is_ok(), "spec mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), self.field.neg(c));
        }
        out
    }
}

impl Neg for &MvPoly {
    type Output = MvPoly;

    fn neg(self) -> MvPoly {
        self.scale(&self.field.from_i64(-1))
    }
}

impl Mul for &MvPoly {
    type Output = MvPoly;

    fn mul(self, rhs: &MvPoly) -> MvPoly {
        assert!(self.check_compatible(rhs).is_ok(), "spec mismatch");
        let field = self.field;
        let mut out = MvPoly::zero(field, self.nvars);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), field.mul(c1, c2));
            }
        }
        out
    }
}

/// Largest `e` with `divisor^e | f`.
pub fn multiplicity(f: &MvPoly, divisor: &MvPoly) -> Result<u32> {
    f.check_compatible(divisor)?;
    if f.is_zero() {
        return Err(Error::ZeroPoly);
    }
    if divisor.is_constant() {
        return Err(Error::ConstantDivisor);
    }
    let mut e = 0;
    let mut rest = f.clone();
    while let Ok(q) = rest.exact_div(divisor) {
        rest = q;
        e += 1;
    }
    Ok(e)
}
