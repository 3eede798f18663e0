mod common;

use abc_core::mvpoly::{multiplicity, squarefree_factor_oracle};
use abc_core::radicals::{
    higher_radical, radical, radical_chain, square_free_part, terminal_level, trunc_gcd,
};
use abc_core::{FieldSpec, MvPoly};
use common::*;
use rand::Rng;

#[test]
fn planted_products_match_multiplicity_rules() {
    for p in [2u64, 3] {
        let field = FieldSpec::prime_field(p).unwrap();
        let base = known_irreducibles(field);
        let pu = p as u32;
        // a lighter sweep than the acceptance run: multiplicities up to p + 1
        for (f, shape) in planted_products(&base, pu + 1, 6) {
            assert_eq!(
                radical(&f).unwrap(),
                rebuild(&base, &shape, |e| (e % pu != 0) as u32),
                "{f}"
            );
            assert_eq!(
                square_free_part(&f).unwrap(),
                rebuild(&base, &shape, |_| 1),
                "{f}"
            );
            for s in 0..=2u32 {
                let q = pu.pow(s + 1);
                assert_eq!(
                    higher_radical(&f, s).unwrap(),
                    rebuild(&base, &shape, |e| (e % q != 0) as u32),
                    "{f}, s = {s}"
                );
            }
            for ell in 1..=3u32 {
                assert_eq!(
                    trunc_gcd(&f, ell as u64).unwrap(),
                    rebuild(&base, &shape, |e| e.min(ell))
                );
            }
        }
    }
}

#[test]
fn radicals_agree_with_factor_oracle() {
    for field in [
        FieldSpec::rational(3).unwrap(),
        FieldSpec::prime_field(2).unwrap(),
        FieldSpec::prime_field(3).unwrap(),
    ] {
        let mut r = rng(3000 + field.p() + 10 * field.kind() as u64);
        for _ in 0..80 {
            let m = r.gen_range(1..=3usize);
            let a = random_nonconstant(field, m, 2, 3, &mut r);
            let b = random_nonconstant(field, m, 2, 2, &mut r);
            let f = &a.pow(r.gen_range(1..=4)) * &b.pow(r.gen_range(1..=3));
            if f.total_degree() > 8 {
                continue;
            }
            let factors = squarefree_factor_oracle(&f, 8).unwrap();
            let rad = radical(&f).unwrap();
            assert!(rad.divides(&f));
            for (q, _) in squarefree_factor_oracle(&rad, 8).unwrap() {
                assert_eq!(multiplicity(&rad, &q).unwrap(), 1, "g^2 divides R({f})");
            }
            let keep = |e: u32, q: u64| !(e as u64).is_multiple_of(q);
            let expect = |pred: &dyn Fn(u32) -> bool| {
                factors
                    .iter()
                    .filter(|(_, e)| pred(*e))
                    .fold(MvPoly::one(field, m), |acc, (q, _)| &acc * q)
                    .monic()
            };
            if field.is_char_p() {
                let p = field.p();
                assert_eq!(rad, expect(&|e| keep(e, p)));
                let top = terminal_level(p, f.total_degree());
                for s in 0..=top {
                    let q = p.pow(s + 1);
                    assert_eq!(
                        higher_radical(&f, s).unwrap(),
                        expect(&|e| keep(e, q)),
                        "{f}, s = {s}"
                    );
                }
            } else {
                assert_eq!(rad, expect(&|_| true));
            }
            let sf = square_free_part(&f).unwrap();
            assert_eq!(sf, expect(&|_| true));
            for ell in 1..=4u32 {
                let t = trunc_gcd(&f, ell as u64).unwrap();
                for (q, e) in &factors {
                    assert_eq!(multiplicity(&t, q).unwrap(), (*e).min(ell));
                }
            }
        }
    }
}

#[test]
fn radical_chain_is_monotone_and_terminal() {
    for p in [2u64, 3] {
        let field = FieldSpec::prime_field(p).unwrap();
        let mut r = rng(3100 + p);
        for _ in 0..40 {
            let a = random_nonconstant(field, 2, 2, 3, &mut r);
            let f = &a.pow(r.gen_range(1..=5)) * &random_nonzero(field, 2, 2, 3, &mut r);
            if f.total_degree() > 10 {
                continue;
            }
            let chain = radical_chain(&f).unwrap();
            for w in chain.entries.windows(2) {
                assert!(w[0].1.divides(&w[1].1));
            }
            assert_eq!(
                &chain.entries.last().unwrap().1,
                &square_free_part(&f).unwrap()
            );
        }
    }
}

#[test]
fn irreducible_dividing_its_derivative_has_zero_derivative() {
    for p in [2u64, 3] {
        let field = FieldSpec::prime_field(p).unwrap();
        let mut base = known_irreducibles(field);
        base.push(parse(field, 2, &format!("x^{p} + y")));
        base.push(parse(field, 2, &format!("x^{p}*y^{p} + x")));
        for pp in &base {
            for j in 0..2 {
                let d = pp.derivative(j);
                if pp.divides(&d) {
                    assert!(d.is_zero(), "{pp}");
                }
            }
        }
    }
}
