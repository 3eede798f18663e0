mod common;

use std::collections::BTreeMap;

use abc_core::abc::coprime_level;
use abc_core::linalg::{nullspace, span_rank};
use abc_core::mvpoly::multiplicity;
use abc_core::wronskian::{find_certificate, gen_wronskian, index_of_independence};
use abc_core::{Coeff, FieldSpec, Monomial, MvPoly};
use common::*;
use rand::Rng;

fn step_for(fs: &[MvPoly]) -> u64 {
    let field = fs[0].field();
    if field.is_char_p() {
        field
            .p()
            .pow(index_of_independence(fs).unwrap().index_s - 1)
    } else {
        1
    }
}

#[test]
fn certificates_reproduce_and_respect_the_step() {
    for (fi, field) in all_fields().into_iter().enumerate() {
        let mut r = rng(4000 + fi as u64);
        for _ in 0..25 {
            let m = r.gen_range(1..=2usize);
            let n = r.gen_range(1..=3usize);
            let fs = independent_tuple(field, m, n, 4, &mut r);
            let c = step_for(&fs);
            let cert = find_certificate(&fs, c).unwrap();
            assert!(cert.verify().unwrap());
            assert_eq!(gen_wronskian(&fs, &cert.gammas).unwrap(), cert.determinant);
            assert!(!cert.determinant.is_zero());
            for w in cert.gammas.windows(2) {
                assert!(w[1].total_degree() as u64 <= w[0].total_degree() as u64 + c);
            }
            // a larger step never hurts
            assert!(find_certificate(&fs, c + 1).is_ok());
            assert!(find_certificate(&fs, 2 * c).is_ok());
        }
    }
}

#[test]
fn dependent_tuples_have_vanishing_wronskians() {
    for (fi, field) in all_fields().into_iter().enumerate() {
        let mut r = rng(4100 + fi as u64);
        for _ in 0..30 {
            let m = r.gen_range(1..=2usize);
            let a = random_poly(field, m, 3, 3, &mut r);
            let b = random_poly(field, m, 3, 3, &mut r);
            let c = &a.scale(&random_coeff(field, &mut r)) + &b.scale(&random_coeff(field, &mut r));
            let fs = vec![a, b, c];
            let mut gammas = vec![Monomial::zero(m)];
            for _ in 0..2 {
                gammas.push(random_monomial(m, 4, &mut r));
            }
            assert!(gen_wronskian(&fs, &gammas).unwrap().is_zero());
        }
    }
}

fn planted_fields() -> Vec<FieldSpec> {
    vec![
        FieldSpec::rational(2).unwrap(),
        FieldSpec::rational(3).unwrap(),
        FieldSpec::prime_field(2).unwrap(),
        FieldSpec::prime_field(3).unwrap(),
    ]
}

#[test]
fn wronskian_inherits_high_multiplicities() {
    for field in planted_fields() {
        let base = known_irreducibles(FieldSpec::prime_field(field.p().min(3)).unwrap());
        let base: Vec<MvPoly> = base
            .iter()
            .map(|b| parse(field, 2, &b.to_text(Some(&names(2)))))
            .collect();
        let mut r = rng(4200 + field.p() + 7 * field.kind() as u64);
        let mut checked = 0;
        for _ in 0..60 {
            let pp = &base[r.gen_range(0..base.len())];
            let e = r.gen_range(2..=6u32);
            let mut fs = independent_tuple(field, 2, r.gen_range(2..=3), 2, &mut r);
            fs[0] = &fs[0] * &pp.pow(e as u64);
            let refs: Vec<&MvPoly> = fs.iter().collect();
            if span_rank(&refs) < fs.len() {
                continue;
            }
            let cert = find_certificate(&fs, step_for(&fs)).unwrap();
            let top = cert.top_order();
            let e = multiplicity(&fs[0], pp).unwrap();
            let w = multiplicity(&cert.determinant, pp).unwrap();
            if e > top {
                assert!(w >= e - top, "{pp}^{e} in {}, W order {w}", fs[0]);
                checked += 1;
            }
            if field.is_char_p() {
                let p = field.p() as u32;
                let max_comp = cert
                    .gammas
                    .iter()
                    .map(Monomial::max_component)
                    .max()
                    .unwrap();
                let mut pt = 1;
                while e.is_multiple_of(pt * p) {
                    pt *= p;
                }
                if pt > max_comp && pt > 1 {
                    assert!(w >= e, "char p: {pp}^{e} must divide W");
                }
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn wronskian_absorbs_product_multiplicity_beyond_truncation() {
    for field in planted_fields() {
        let base = known_irreducibles(FieldSpec::prime_field(field.p().min(3)).unwrap());
        let base: Vec<MvPoly> = base
            .iter()
            .map(|b| parse(field, 2, &b.to_text(Some(&names(2)))))
            .collect();
        let mut r = rng(4300 + field.p() + 7 * field.kind() as u64);
        for _ in 0..40 {
            let n = r.gen_range(2..=3usize);
            let mut fs = independent_tuple(field, 2, n, 2, &mut r);
            let pp = &base[r.gen_range(0..base.len())];
            // P spread over up to two of the functions
            for f in fs.iter_mut().take(r.gen_range(1..=2)) {
                *f = &*f * &pp.pow(r.gen_range(1..=4));
            }
            let refs: Vec<&MvPoly> = fs.iter().collect();
            if span_rank(&refs) < n {
                continue;
            }
            let cert = find_certificate(&fs, step_for(&fs)).unwrap();
            let k = coprime_level(&fs).unwrap().unwrap_or(n + 1);
            let degs: Vec<u32> = cert.gammas.iter().map(Monomial::total_degree).collect();
            let ell: u32 = (1..k).map(|i| degs[n - i]).sum();
            let big_f = MvPoly::product(field, 2, &fs);
            let e = multiplicity(&big_f, pp).unwrap();
            if e > ell {
                assert!(multiplicity(&cert.determinant, pp).unwrap() >= e - ell);
            }
        }
    }
}

/// Bounded-degree syzygy solve: is there `(g_j)`, not all zero, with
/// `sum g_j(z^q) f_j = 0` and `deg g_j <= bound`?
fn syzygy_exists(fs: &[MvPoly], q: u32, bound: u32) -> bool {
    let field = fs[0].field();
    let m = fs[0].nvars();
    let basis = Monomial::up_to_degree(m, bound);
    let ncols = fs.len() * basis.len();
    let mut eqs: BTreeMap<Monomial, Vec<Coeff>> = BTreeMap::new();
    for (j, f) in fs.iter().enumerate() {
        for (k, mono) in basis.iter().enumerate() {
            let shifted = f.mul_monomial(&mono.scale(q), &field.one());
            for (mm, c) in shifted.terms() {
                let row = eqs
                    .entry(mm.clone())
                    .or_insert_with(|| vec![field.zero(); ncols]);
                row[j * basis.len() + k] = c.clone();
            }
        }
    }
    let rows: Vec<Vec<Coeff>> = eqs.into_values().collect();
    !nullspace(field, &rows, ncols).is_empty()
}

#[test]
fn independence_index_matches_syzygy_solve() {
    for p in [2u64, 3] {
        let field = FieldSpec::prime_field(p).unwrap();
        let mut r = rng(4400 + p);
        let mut above_one = 0;
        for i in 0..60 {
            let m = r.gen_range(1..=2usize);
            let n = r.gen_range(2..=3usize);
            let mut fs = independent_tuple(field, m, n, 3, &mut r);
            if i % 3 == 0 {
                // force a relation over the p-th powers
                let g = random_nonconstant(field, m, 1, 2, &mut r).pow(p);
                fs[n - 1] = &fs[0] * &g;
            }
            let res = index_of_independence(&fs).unwrap();
            let maxdeg = fs.iter().map(MvPoly::total_degree).max().unwrap();
            let mut oracle = None;
            for s in 1..=res.level_cap {
                let q = p.pow(s) as u32;
                if !syzygy_exists(&fs, q, (n as u32 - 1) * maxdeg) {
                    oracle = Some(s);
                    break;
                }
            }
            assert_eq!(Some(res.index_s), oracle, "{fs:?}");
            above_one += usize::from(res.index_s > 1);
            if let Some((s, qs)) = &res.dependent_over {
                let q = p.pow(*s) as u32;
                let combo = qs
                    .iter()
                    .zip(&fs)
                    .fold(MvPoly::zero(field, m), |acc, (g, f)| &acc + &(g * f));
                assert!(combo.is_zero());
                assert!(qs.iter().any(|g| !g.is_zero()));
                for g in qs {
                    assert!(g
                        .terms()
                        .all(|(mm, _)| mm.exps().iter().all(|e| e % q == 0)));
                }
            }
        }
        assert!(above_one >= 10, "only {above_one} dependent cases");
    }
}

#[test]
fn pth_power_family_needs_the_full_step() {
    for p in [2u64, 3, 5] {
        let field = FieldSpec::prime_field(p).unwrap();
        for s in 1..=2u32 {
            let q = p.pow(s);
            let fs = vec![parse(field, 1, "1"), parse(field, 1, &format!("x^{q}"))];
            let idx = index_of_independence(&fs).unwrap().index_s;
            assert_eq!(idx, s + 1);
            let c = p.pow(idx - 1);
            assert_eq!(c, q);
            assert!(find_certificate(&fs, c - 1).is_err());
            let cert = find_certificate(&fs, c).unwrap();
            assert_eq!(cert.gammas[1].total_degree() as u64, q);
        }
    }
}
