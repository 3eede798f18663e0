#![allow(dead_code)]

use abc_core::linalg::span_rank;
use abc_core::mvpoly::gcd;
use abc_core::{Coeff, FieldSpec, Monomial, MvPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Q with p in {2,3,5}; F_2, F_3, F_5; F_3(t).
pub fn all_fields() -> Vec<FieldSpec> {
    vec![
        FieldSpec::rational(2).unwrap(),
        FieldSpec::rational(3).unwrap(),
        FieldSpec::rational(5).unwrap(),
        FieldSpec::prime_field(2).unwrap(),
        FieldSpec::prime_field(3).unwrap(),
        FieldSpec::prime_field(5).unwrap(),
        FieldSpec::ratfunc(3).unwrap(),
    ]
}

pub fn names(m: usize) -> Vec<String> {
    ["x", "y", "w", "v"][..m]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

/// Nonzero coefficient with a spread of valuations.
pub fn random_coeff(field: FieldSpec, rng: &mut ChaCha8Rng) -> Coeff {
    loop {
        let c = match field.kind() {
            abc_core::FieldKind::RationalPAdic => {
                let p = field.p() as i64;
                let num = rng.gen_range(-9i64..=9) * [1, p, p * p][rng.gen_range(0..3)];
                let den = [1, 2, 3, p, p * p, 7][rng.gen_range(0..6)];
                field
                    .div(&field.from_i64(num), &field.from_i64(den))
                    .unwrap()
            }
            abc_core::FieldKind::PrimeField => field.from_i64(rng.gen_range(0..field.p() as i64)),
            abc_core::FieldKind::RatFuncTAdic => {
                let t = field.t().unwrap();
                let mut num = field.zero();
                for i in 0..rng.gen_range(1..=3u64) {
                    let c = field.from_i64(rng.gen_range(0..field.p() as i64));
                    num = field.add(&num, &field.mul(&c, &field.pow(&t, i)));
                }
                let den = match rng.gen_range(0..3) {
                    0 => field.one(),
                    1 => t.clone(),
                    _ => field.add(&t, &field.one()),
                };
                field.div(&num, &den).unwrap()
            }
        };
        if !field.is_zero(&c) {
            return c;
        }
    }
}

pub fn random_monomial(m: usize, max_deg: u32, rng: &mut ChaCha8Rng) -> Monomial {
    let total = rng.gen_range(0..=max_deg);
    let mut exps = vec![0u32; m];
    for _ in 0..total {
        exps[rng.gen_range(0..m)] += 1;
    }
    Monomial::new(exps)
}

/// Random polynomial with up to `terms` terms of total degree at most `max_deg`.
pub fn random_poly(
    field: FieldSpec,
    m: usize,
    max_deg: u32,
    terms: usize,
    rng: &mut ChaCha8Rng,
) -> MvPoly {
    let n = rng.gen_range(1..=terms);
    let ts: Vec<(Monomial, Coeff)> = (0..n)
        .map(|_| (random_monomial(m, max_deg, rng), random_coeff(field, rng)))
        .collect();
    MvPoly::from_terms(field, m, ts).unwrap()
}

pub fn random_nonzero(
    field: FieldSpec,
    m: usize,
    max_deg: u32,
    terms: usize,
    rng: &mut ChaCha8Rng,
) -> MvPoly {
    loop {
        let f = random_poly(field, m, max_deg, terms, rng);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn random_nonconstant(
    field: FieldSpec,
    m: usize,
    max_deg: u32,
    terms: usize,
    rng: &mut ChaCha8Rng,
) -> MvPoly {
    loop {
        let f = random_poly(field, m, max_deg.max(1), terms, rng);
        if !f.is_constant() {
            return f;
        }
    }
}

pub fn random_rho(rng: &mut ChaCha8Rng) -> abc_core::Rational {
    abc_core::Rational::new(
        rng.gen_range(-12i64..=12).into(),
        rng.gen_range(1i64..=4).into(),
    )
}

pub fn parse(field: FieldSpec, m: usize, text: &str) -> MvPoly {
    MvPoly::parse(field, &names(m), text).unwrap()
}

/// Irreducibles in `x, y` over `F_p` (degree-one polynomials, polynomials
/// linear in `y` with coprime coefficients, and irreducible quadratics).
pub fn known_irreducibles(field: FieldSpec) -> Vec<MvPoly> {
    let mut items = vec![
        "x",
        "y",
        "x + 1",
        "y + 1",
        "x + y",
        "x*y + 1",
        "x^2 + y",
        "x*y + x + 1",
    ];
    match field.p() {
        2 => items.push("x^2 + x + 1"),
        3 => items.extend(["x^2 + 1", "y^2 + y + 2"]),
        _ => {}
    }
    items.into_iter().map(|s| parse(field, 2, s)).collect()
}

/// Every product of at most three distinct irreducibles from `base` with
/// multiplicities in `1..=max_mult` and total degree at most `max_deg`,
/// returned with its factorization.
pub fn planted_products(
    base: &[MvPoly],
    max_mult: u32,
    max_deg: u32,
) -> Vec<(MvPoly, Vec<(usize, u32)>)> {
    fn rec(
        base: &[MvPoly],
        start: usize,
        left: usize,
        max_mult: u32,
        budget: u32,
        cur: &mut Vec<(usize, u32)>,
        out: &mut Vec<Vec<(usize, u32)>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for i in start..base.len() {
            let d = base[i].total_degree();
            for e in 1..=max_mult {
                if d * e > budget {
                    break;
                }
                cur.push((i, e));
                rec(base, i + 1, left - 1, max_mult, budget - d * e, cur, out);
                cur.pop();
            }
        }
    }
    let mut shapes = Vec::new();
    rec(base, 0, 3, max_mult, max_deg, &mut Vec::new(), &mut shapes);
    let field = base[0].field();
    shapes
        .into_iter()
        .map(|shape| {
            let f = shape.iter().fold(MvPoly::one(field, 2), |acc, &(i, e)| {
                &acc * &base[i].pow(e as u64)
            });
            (f, shape)
        })
        .collect()
}

/// `prod P^{g(e)}` over a planted factorization, monic.
pub fn rebuild(base: &[MvPoly], shape: &[(usize, u32)], g: impl Fn(u32) -> u32) -> MvPoly {
    let field = base[0].field();
    shape
        .iter()
        .fold(MvPoly::one(field, 2), |acc, &(i, e)| {
            &acc * &base[i].pow(g(e) as u64)
        })
        .monic()
}

/// `n` random functions closed up to a zero sum by `f_n = -sum`; a common
/// factor is planted in a pair now and then so gcd gates get exercised.
pub fn sum_zero_family(
    field: FieldSpec,
    m: usize,
    n: usize,
    max_deg: u32,
    rng: &mut ChaCha8Rng,
) -> Vec<MvPoly> {
    loop {
        let mut fs: Vec<MvPoly> = (0..n)
            .map(|_| {
                let a = random_nonzero(field, m, max_deg / 2, 2, rng);
                let b = random_nonzero(field, m, max_deg - max_deg / 2, 3, rng);
                &a * &b
            })
            .collect();
        if n >= 2 && rng.gen_bool(0.2) {
            let h = random_nonconstant(field, m, 1, 2, rng);
            for f in fs.iter_mut().take(2) {
                *f = &*f * &h;
            }
        }
        let closing = -&MvPoly::sum(field, m, &fs);
        if closing.is_zero() || fs.iter().all(MvPoly::is_constant) {
            continue;
        }
        fs.push(closing);
        return fs;
    }
}

/// Two independent zero-sum families side by side, so the whole collection
/// has a vanishing proper subsum.
pub fn split_family(
    field: FieldSpec,
    m: usize,
    n: usize,
    max_deg: u32,
    rng: &mut ChaCha8Rng,
) -> Vec<MvPoly> {
    let first = rng.gen_range(1..n.max(2));
    let mut fs = sum_zero_family(field, m, first, max_deg, rng);
    fs.extend(sum_zero_family(
        field,
        m,
        n.saturating_sub(first).max(1),
        max_deg,
        rng,
    ));
    fs
}

/// `n` functions that are linearly independent over the base field.
pub fn independent_tuple(
    field: FieldSpec,
    m: usize,
    n: usize,
    deg: u32,
    r: &mut ChaCha8Rng,
) -> Vec<MvPoly> {
    loop {
        let fs: Vec<MvPoly> = (0..n)
            .map(|_| random_nonzero(field, m, deg, 3, r))
            .collect();
        let refs: Vec<&MvPoly> = fs.iter().collect();
        if span_rank(&refs) == n {
            return fs;
        }
    }
}

/// Gate values computed by brute force over bitmasks.
pub struct Gates {
    pub sum_zero: bool,
    pub nonzero: bool,
    pub not_all_constant: bool,
    pub subsums_coprime: bool,
    pub has_vanishing_proper: bool,
    pub level: Option<usize>,
    pub rank: usize,
}

pub fn subset(fs: &[MvPoly], mask: u32) -> Vec<MvPoly> {
    (0..fs.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| fs[i].clone())
        .collect()
}

pub fn gcd_of(fs: &[MvPoly]) -> MvPoly {
    fs.iter()
        .skip(1)
        .fold(fs[0].clone(), |g, f| gcd(&g, f).unwrap())
}

pub fn brute_gates(fs: &[MvPoly]) -> Gates {
    let field = fs[0].field();
    let m = fs[0].nvars();
    let n1 = fs.len();
    let full = (1u32 << n1) - 1;
    let mut subsums_coprime = true;
    let mut has_vanishing_proper = false;
    for mask in 1..=full {
        let sub = subset(fs, mask);
        if !MvPoly::sum(field, m, &sub).is_zero() {
            continue;
        }
        if mask != full {
            has_vanishing_proper = true;
        }
        if !gcd_of(&sub).is_constant() {
            subsums_coprime = false;
        }
    }
    let level = (2..=n1).find(|&k| {
        (1..=full)
            .filter(|mask: &u32| mask.count_ones() as usize == k)
            .all(|mask| gcd_of(&subset(fs, mask)).is_constant())
    });
    let refs: Vec<&MvPoly> = fs.iter().collect();
    Gates {
        sum_zero: MvPoly::sum(field, m, fs).is_zero(),
        nonzero: fs.iter().all(|f| !f.is_zero()),
        not_all_constant: !fs.iter().all(MvPoly::is_constant),
        subsums_coprime,
        has_vanishing_proper,
        level,
        rank: span_rank(&refs),
    }
}
