//! Degree-level verifiers with sampled margin tables.

use num_traits::Zero;

use crate::coeffs::Rational;
use crate::error::{Error, Result};
use crate::mvpoly::{gcd, gcd_all, lcm_all, MvPoly};
use crate::nevanlinna::{counting, norm_profile, Line, PiecewiseLinear};
use crate::radicals::{
    gcd_with_squarefree_power, radical, sigma_radical_gcd, square_free_part, trunc_gcd,
};

use super::constants::{
    a_bar_cap, analyze_block, check_family, coprime_level, span_dimension, step_constant,
    subsets_coprime, AbcConstants, BlockAnalysis,
};
use super::partition::{
    is_sum_zero, split_vanishing_subsums, subsets_by_size, vanishing_proper_subsums,
};
use super::{AbcReport, Check, DegreeCheck, Fallback, Margin};

/// Log-radii at which margin tables are sampled by default.
pub fn default_radii() -> Vec<Rational> {
    [-4i64, -2, -1, 0, 1, 2, 4, 8, 16, 32]
        .into_iter()
        .map(|k| Rational::from_integer(k.into()))
        .collect()
}

fn max_deg(fs: &[MvPoly]) -> i64 {
    fs.iter()
        .map(|f| f.total_degree() as i64)
        .max()
        .unwrap_or(0)
}

/// `rho -> max_j log |f_j|_{p^rho}`.
fn max_norm(fs: &[MvPoly]) -> Result<PiecewiseLinear> {
    let mut out: Option<PiecewiseLinear> = None;
    for f in fs {
        let prof = norm_profile(f)?;
        out = Some(match out {
            None => prof,
            Some(m) => m.max(&prof),
        });
    }
    out.ok_or(Error::ZeroPoly)
}

/// `rho -> sum_j N_{g_j}(0, p^rho)`.
fn counting_sum<'a>(gs: impl IntoIterator<Item = &'a MvPoly>) -> Result<PiecewiseLinear> {
    let mut acc = PiecewiseLinear::line(Line::new(0, Rational::zero()));
    for g in gs {
        acc = acc.add(&counting(g)?.integrated);
    }
    Ok(acc)
}

fn slope_sum<'a>(gs: impl IntoIterator<Item = &'a MvPoly>) -> Result<i64> {
    gs.into_iter().map(|g| Ok(counting(g)?.final_slope())).sum()
}

fn line(slope: i64) -> Line {
    Line::new(slope, Rational::zero())
}

fn texts(fs: &[MvPoly], idx: &[usize]) -> String {
    idx.iter()
        .map(|&i| format!("f{i} = {}", fs[i].to_text(None)))
        .collect::<Vec<_>>()
        .join(", ")
}

/// `gcd(F, S(F)^ell)` for `F = prod f_j`; `S(F)` is assembled as the lcm of
/// the `S(f_j)`, which has the same irreducible factors.
fn truncated_product(fs: &[MvPoly], ell: u64) -> Result<MvPoly> {
    let field = fs[0].field();
    let big_f = MvPoly::product(field, fs[0].nvars(), fs);
    let parts: Vec<MvPoly> = fs.iter().map(square_free_part).collect::<Result<_>>()?;
    let s = lcm_all(&parts)?;
    gcd_with_squarefree_power(&big_f, &s, ell)
}

/// Hypotheses shared by every sum-zero verifier.
fn common_hypotheses(fs: &[MvPoly], rep: &mut AbcReport) -> Result<()> {
    check_family(fs)?;
    let sum = MvPoly::sum(fs[0].field(), fs[0].nvars(), fs);
    rep.hypotheses.push(Check::new(
        "sum-zero",
        sum.is_zero(),
        (!sum.is_zero()).then(|| format!("sum = {}", sum.to_text(None))),
    ));
    rep.hypotheses.push(Check::new(
        "at-least-three",
        fs.len() >= 3,
        (fs.len() < 3).then(|| format!("{} functions", fs.len())),
    ));
    let zero = fs.iter().position(MvPoly::is_zero);
    rep.hypotheses.push(Check::new(
        "nonzero",
        zero.is_none(),
        zero.map(|i| format!("f{i} = 0")),
    ));
    let all_const = fs.iter().all(MvPoly::is_constant);
    rep.hypotheses.push(Check::new(
        "not-all-constant",
        !all_const,
        all_const.then(|| "every function is constant".to_string()),
    ));
    Ok(())
}

/// Every vanishing sub-collection, the whole one included, is coprime.
fn subsum_gcd_check(fs: &[MvPoly]) -> Result<Check> {
    let all: Vec<usize> = (0..fs.len()).collect();
    for s in subsets_by_size(&all) {
        let sub: Vec<MvPoly> = s.iter().map(|&i| fs[i].clone()).collect();
        if !is_sum_zero(&sub) {
            continue;
        }
        let g = gcd_all(&sub)?;
        if !g.is_constant() {
            return Ok(Check::new(
                "vanishing-subsums-coprime",
                false,
                Some(format!("{s:?} sums to zero with gcd {}", g.to_text(None))),
            ));
        }
    }
    Ok(Check::new("vanishing-subsums-coprime", true, None))
}

/// Blocks of the minimal vanishing decomposition with combined constants.
struct SumRoute {
    blocks: Vec<BlockAnalysis>,
    combined: AbcConstants,
    dropped: Vec<Vec<usize>>,
}

/// Per-block constants joined into one pair valid for the whole collection:
/// the largest `a` (truncations only grow with `a`) and the sum of the `b`
/// (block inequalities add up because every degree is non-negative).
fn sum_route(fs: &[MvPoly], k: usize) -> Result<SumRoute> {
    let (c, s_index) = step_constant(fs)?;
    let mut blocks = Vec::new();
    let mut dropped = Vec::new();
    for block in split_vanishing_subsums(fs)? {
        if block.iter().all(|&i| fs[i].is_constant()) {
            dropped.push(block);
            continue;
        }
        blocks.push(analyze_block(fs, &block, c, s_index, k)?);
    }
    let d = span_dimension(fs);
    let consts: Vec<&AbcConstants> = blocks.iter().map(|b| &b.constants).collect();
    let mut gammas: Vec<_> = consts
        .iter()
        .flat_map(|c| c.gammas_used.iter().cloned())
        .collect();
    gammas.sort();
    let combined = AbcConstants {
        d,
        c,
        s_index,
        a: consts.iter().map(|c| c.a).max().unwrap_or(0),
        b: consts.iter().map(|c| c.b).sum(),
        a_bar: consts.iter().map(|c| c.a_bar).max().unwrap_or(0),
        sigma: consts.iter().filter_map(|c| c.sigma).max(),
        k,
        k_bar: k.min(d),
        gammas_used: gammas,
    };
    let field = fs[0].field();
    combined.check_chain(field.is_char_p().then(|| field.p()))?;
    Ok(SumRoute {
        blocks,
        combined,
        dropped,
    })
}

/// `G_j` of the char-`p` inequality, or the plain truncation in char 0.
fn g_poly(f: &MvPoly, a: u64, sigma: Option<u32>) -> Result<MvPoly> {
    match sigma {
        Some(s) => sigma_radical_gcd(f, a, s),
        None => trunc_gcd(f, a),
    }
}

/// `F_I` divides `Delta_0 * prod G_j` for each block.
fn ledger_for_block(fs: &[MvPoly], block: &BlockAnalysis) -> Result<Check> {
    let field = fs[0].field();
    let nv = fs[0].nvars();
    let c = &block.constants;
    let members: Vec<MvPoly> = block.indices.iter().map(|&i| fs[i].clone()).collect();
    let gs: Vec<MvPoly> = members
        .iter()
        .map(|f| g_poly(f, c.a, c.sigma))
        .collect::<Result<_>>()?;
    let rhs = &block.delta0() * &MvPoly::product(field, nv, &gs);
    let big_f = MvPoly::product(field, nv, &members);
    let ok = rhs.exact_div(&big_f).is_ok();
    Ok(Check::new(
        format!("divisibility{:?}", block.indices),
        ok,
        (!ok).then(|| "F does not divide Delta_0 * prod G_j".to_string()),
    ))
}

/// Both sum-form inequalities, per block and combined, with ledger entries.
fn sum_checks(
    fs: &[MvPoly],
    route: &SumRoute,
    rep: &mut AbcReport,
    radii: &[Rational],
) -> Result<()> {
    let char_p = fs[0].field().is_char_p();
    let multi = route.blocks.len() > 1 || !route.dropped.is_empty();
    if multi {
        for block in &route.blocks {
            let c = &block.constants;
            let members: Vec<MvPoly> = block.indices.iter().map(|&i| fs[i].clone()).collect();
            let ts: Vec<MvPoly> = members
                .iter()
                .map(|f| trunc_gcd(f, c.a))
                .collect::<Result<_>>()?;
            rep.degree_checks.push(DegreeCheck::new(
                format!("abctrsum{:?}", block.indices),
                max_deg(&members),
                slope_sum(&ts)? - c.b as i64,
            ));
            if char_p {
                let gs: Vec<MvPoly> = members
                    .iter()
                    .map(|f| g_poly(f, c.a, c.sigma))
                    .collect::<Result<_>>()?;
                rep.degree_checks.push(DegreeCheck::new(
                    format!("abctrsumcharp{:?}", block.indices),
                    max_deg(&members),
                    slope_sum(&gs)? - c.b as i64,
                ));
            }
        }
        if !route.dropped.is_empty() {
            rep.notes.push(format!(
                "all-constant vanishing blocks set aside: {:?}",
                route.dropped
            ));
        }
    }
    let c = &route.combined;
    let lhs = max_norm(fs)?;
    let ts: Vec<MvPoly> = fs
        .iter()
        .map(|f| trunc_gcd(f, c.a))
        .collect::<Result<_>>()?;
    rep.degree_checks.push(DegreeCheck::new(
        "abctrsum",
        max_deg(fs),
        slope_sum(&ts)? - c.b as i64,
    ));
    let rhs = counting_sum(&ts)?.add_line(&line(-(c.b as i64)));
    rep.margins
        .push(Margin::new("abctrsum", lhs.sub(&rhs), radii));
    if char_p {
        let gs: Vec<MvPoly> = fs
            .iter()
            .map(|f| g_poly(f, c.a, c.sigma))
            .collect::<Result<_>>()?;
        rep.degree_checks.push(DegreeCheck::new(
            "abctrsumcharp",
            max_deg(fs),
            slope_sum(&gs)? - c.b as i64,
        ));
        let rhs = counting_sum(&gs)?.add_line(&line(-(c.b as i64)));
        rep.margins
            .push(Margin::new("abctrsumcharp", lhs.sub(&rhs), radii));
        // N_{G_j} against N^{(a)}_{f_j}: G_j divides the truncation
        let bad: Vec<usize> = (0..fs.len())
            .filter(|&j| !(gs[j].divides(&ts[j]) && gs[j].total_degree() <= ts[j].total_degree()))
            .collect();
        rep.ledger.push(Check::new(
            "truncation-comparison",
            bad.is_empty(),
            (!bad.is_empty()).then(|| format!("G_j exceeds the truncation for j in {bad:?}")),
        ));
    }
    for block in &route.blocks {
        rep.ledger.push(ledger_for_block(fs, block)?);
    }
    Ok(())
}

/// Checks the sum-form inequality with `a` and `b` from the Wronskian
/// certificates of each minimal vanishing block.
pub fn verify_abc_first_at(fs: &[MvPoly], radii: &[Rational]) -> Result<AbcReport> {
    let mut rep = AbcReport::new("abcsum");
    common_hypotheses(fs, &mut rep)?;
    rep.hypotheses.push(subsum_gcd_check(fs)?);
    if !rep.hypotheses_hold() {
        return Ok(rep.finish());
    }
    let k = coprime_level(fs)?.unwrap_or(fs.len());
    let route = sum_route(fs, k)?;
    sum_checks(fs, &route, &mut rep, radii)?;
    rep.constants = Some(route.combined.clone());
    rep.blocks = route.blocks;
    Ok(rep.finish())
}

pub fn verify_abc_first(fs: &[MvPoly]) -> Result<AbcReport> {
    verify_abc_first_at(fs, &default_radii())
}

/// `max deg <= A_bar (deg S(F) - 1)`, globally and for each block that is
/// not entirely constant.
fn abcsf_checks(
    fs: &[MvPoly],
    constants: &AbcConstants,
    blocks: &[Vec<usize>],
    rep: &mut AbcReport,
    radii: &[Rational],
) -> Result<()> {
    let big_a = a_bar_cap(constants.c, constants.d, constants.k_bar) as i64;
    let s_all = truncated_product(fs, 1)?;
    rep.degree_checks.push(DegreeCheck::new(
        "abcsf",
        max_deg(fs),
        big_a * (s_all.total_degree() as i64 - 1),
    ));
    let rhs = counting(&s_all)?
        .integrated
        .add_line(&line(-1))
        .scale(big_a);
    rep.margins
        .push(Margin::new("abcsf", max_norm(fs)?.sub(&rhs), radii));
    if blocks.len() > 1 {
        for block in blocks {
            if block.iter().all(|&i| fs[i].is_constant()) {
                continue;
            }
            let members: Vec<MvPoly> = block.iter().map(|&i| fs[i].clone()).collect();
            let s_block = truncated_product(&members, 1)?;
            rep.degree_checks.push(DegreeCheck::new(
                format!("abcsf{block:?}"),
                max_deg(&members),
                big_a * (s_block.total_degree() as i64 - 1),
            ));
        }
    }
    Ok(())
}

/// `max deg <= (2n-3)(deg R(F) - 1)` when every triple is coprime (char 0).
fn bb_check(fs: &[MvPoly], rep: &mut AbcReport) -> Result<()> {
    let n = fs.len() as i64 - 1;
    // in char 0 the radical of a product is the lcm of the radicals
    let radicals: Vec<MvPoly> = fs.iter().map(radical).collect::<Result<_>>()?;
    let r = lcm_all(&radicals)?;
    rep.degree_checks.push(DegreeCheck::new(
        "BB",
        max_deg(fs),
        (2 * n - 3) * (r.total_degree() as i64 - 1),
    ));
    Ok(())
}

fn pairwise_coprime(fs: &[MvPoly]) -> Result<Option<Vec<usize>>> {
    subsets_coprime(fs, 2)
}

/// Checks the product-form inequality at coprimality level `k` (detected
/// when `None`), with the square-free corollary evaluated whenever its
/// weaker hypotheses hold.
pub fn verify_abc_second_at(
    fs: &[MvPoly],
    k: Option<usize>,
    radii: &[Rational],
) -> Result<AbcReport> {
    let mut rep = AbcReport::new("abcprod");
    common_hypotheses(fs, &mut rep)?;
    let n = fs.len().saturating_sub(1);
    let k = match k {
        Some(k) => k,
        None => coprime_level(fs)?.unwrap_or(fs.len()),
    };
    rep.hypotheses.push(Check::new(
        "k-range",
        (2..=n).contains(&k),
        (!(2..=n).contains(&k)).then(|| format!("k = {k} outside [2, {n}]")),
    ));
    let witness = if k >= 2 && k <= fs.len() {
        subsets_coprime(fs, k)?
    } else {
        None
    };
    rep.hypotheses.push(Check::new(
        "k-subsets-coprime",
        witness.is_none(),
        witness.map(|w| format!("{w:?} share a factor: {}", texts(fs, &w))),
    ));
    let d = span_dimension(fs);
    let k_bar = k.min(d);
    let vanishing = vanishing_proper_subsums(fs);
    if k_bar > 2 {
        rep.hypotheses.push(Check::new(
            "no-vanishing-subsum",
            vanishing.is_empty(),
            vanishing.first().map(|v| format!("{v:?} sums to zero")),
        ));
    } else if !vanishing.is_empty() {
        // the reduction to the sum form needs additivity of N^{(l)}
        let w = pairwise_coprime(fs)?;
        rep.hypotheses.push(Check::new(
            "pairwise-coprime",
            w.is_none(),
            w.map(|w| format!("{w:?} share a factor")),
        ));
    }
    let subsum = subsum_gcd_check(fs)?;
    // everything but the subsum gates, which only decide the verdict
    let base_ok = rep.hypotheses[..6].iter().all(|c| c.passed) && subsum.passed;
    if !base_ok {
        rep.hypotheses.push(subsum);
        return Ok(rep.finish());
    }
    let field = fs[0].field();
    let f_max = max_deg(fs);
    let lhs = max_norm(fs)?;
    if vanishing.is_empty() {
        let all: Vec<usize> = (0..fs.len()).collect();
        let (c, s_index) = step_constant(fs)?;
        let block = analyze_block(fs, &all, c, s_index, k)?;
        let cst = block.constants.clone();
        let trunc = truncated_product(fs, cst.a_bar)?;
        let n_slope = counting(&trunc)?.final_slope();
        rep.degree_checks
            .push(DegreeCheck::new("abctrprod", f_max, n_slope - cst.b as i64));
        let rhs = counting(&trunc)?
            .integrated
            .add_line(&line(-(cst.b as i64)));
        rep.margins
            .push(Margin::new("abctrprod", lhs.sub(&rhs), radii));
        rep.ledger.push(ledger_for_block(fs, &block)?);
        let big_f = MvPoly::product(field, fs[0].nvars(), fs);
        let ok = (&block.delta0() * &trunc).exact_div(&big_f).is_ok();
        rep.ledger.push(Check::new(
            "divisibility-truncated",
            ok,
            (!ok).then(|| "F / gcd(F, Delta_0) does not divide gcd(F, S(F)^a_bar)".to_string()),
        ));
        abcsf_checks(fs, &cst, &[all], &mut rep, radii)?;
        rep.constants = Some(cst);
        rep.blocks = vec![block];
    } else {
        let route = sum_route(fs, k)?;
        let blocks: Vec<Vec<usize>> = split_vanishing_subsums(fs)?;
        let max_a_bar = route
            .blocks
            .iter()
            .map(|b| b.constants.a_bar)
            .max()
            .unwrap_or(0);
        let min_b = route
            .blocks
            .iter()
            .map(|b| b.constants.b)
            .min()
            .unwrap_or(0);
        rep.fallback = Some(Fallback { max_a_bar, min_b });
        let trunc = truncated_product(fs, max_a_bar)?;
        rep.degree_checks.push(DegreeCheck::new(
            "abctrprod-fallback",
            f_max,
            counting(&trunc)?.final_slope() - min_b as i64,
        ));
        let mut cst = route.combined.clone();
        if k_bar == 2 && rep.hypotheses_hold() {
            // pairwise coprime: N^{(a)}_F is the sum of the N^{(a)}_{f_j}
            cst.a_bar = cst.a;
            let trunc = truncated_product(fs, cst.a)?;
            rep.degree_checks.push(DegreeCheck::new(
                "abctrprod",
                f_max,
                counting(&trunc)?.final_slope() - cst.b as i64,
            ));
            let rhs = counting(&trunc)?
                .integrated
                .add_line(&line(-(cst.b as i64)));
            rep.margins
                .push(Margin::new("abctrprod", lhs.sub(&rhs), radii));
            rep.notes
                .push("k_bar = 2 with vanishing subsums: reduced to the sum form".to_string());
        }
        for block in &route.blocks {
            rep.ledger.push(ledger_for_block(fs, block)?);
        }
        abcsf_checks(fs, &cst, &blocks, &mut rep, radii)?;
        rep.constants = Some(cst);
        rep.blocks = route.blocks;
    }
    if !field.is_char_p() && k <= 3 {
        bb_check(fs, &mut rep)?;
    }
    rep.hypotheses.push(subsum);
    Ok(rep.finish())
}

pub fn verify_abc_second(fs: &[MvPoly], k: Option<usize>) -> Result<AbcReport> {
    verify_abc_second_at(fs, k, &default_radii())
}

/// The two degree corollaries in characteristic 0, plus the triple-coprime
/// bound when it applies.
pub fn verify_corollaries_at(fs: &[MvPoly], radii: &[Rational]) -> Result<AbcReport> {
    check_family(fs)?;
    if fs[0].field().is_char_p() {
        return Err(Error::WrongCharacteristic);
    }
    let mut rep = AbcReport::new("corollaries");
    common_hypotheses(fs, &mut rep)?;
    rep.hypotheses.push(subsum_gcd_check(fs)?);
    if !rep.hypotheses_hold() {
        return Ok(rep.finish());
    }
    let k = coprime_level(fs)?.unwrap_or(fs.len());
    let route = sum_route(fs, k)?;
    let cst = route.combined.clone();
    let f_max = max_deg(fs);
    let a = cst.a as i64;
    let r_a: Vec<MvPoly> = fs
        .iter()
        .map(|f| gcd_with_squarefree_power(f, &radical(f)?, cst.a))
        .collect::<Result<_>>()?;
    let r_sum: i64 = r_a.iter().map(|g| g.total_degree() as i64).sum();
    rep.degree_checks.push(DegreeCheck::new(
        "deBondtFour",
        f_max,
        r_sum - a * (a + 1) / 2,
    ));
    let n = fs.len() as i64 - 1;
    let consts = fs.iter().filter(|f| f.is_constant()).count() as i64;
    let rad: Vec<MvPoly> = fs.iter().map(radical).collect::<Result<_>>()?;
    let rad_sum: i64 = rad.iter().map(|r| r.total_degree() as i64).sum();
    let lhs = max_norm(fs)?;
    let n1 = counting_sum(&rad)?;
    for big_a in cst.d as i64..=n - consts {
        rep.degree_checks.push(DegreeCheck::new(
            format!("deBondtFive[A={big_a}]"),
            f_max,
            big_a * rad_sum - big_a * (big_a + 1) / 2,
        ));
        let rhs = n1.scale(big_a).add_line(&line(-(big_a * (big_a + 1) / 2)));
        rep.margins.push(Margin::new(
            format!("deBondtFive[A={big_a}]"),
            lhs.sub(&rhs),
            radii,
        ));
    }
    if k <= 3 {
        bb_check(fs, &mut rep)?;
    }
    rep.constants = Some(cst);
    rep.blocks = route.blocks;
    Ok(rep.finish())
}

pub fn verify_corollaries(fs: &[MvPoly]) -> Result<AbcReport> {
    verify_corollaries_at(fs, &default_radii())
}

/// Exponents all divisible by `p`: a `p`-th power over the algebraic closure.
fn is_pth_power_over_closure(f: &MvPoly) -> bool {
    let p = f.field().p() as u32;
    f.terms().all(|(m, _)| m.exps().iter().all(|e| e % p == 0))
}

/// Three-term check `max deg f_i <= deg R(f_0 f_1 f_2) - 1`, `f_2 = f_0 + f_1`.
pub fn verify_basic_abc_at(f0: &MvPoly, f1: &MvPoly, radii: &[Rational]) -> Result<AbcReport> {
    f0.check_compatible(f1)?;
    let f2 = f0 + f1;
    if f0.is_zero() || f1.is_zero() || f2.is_zero() {
        return Err(Error::ZeroPoly);
    }
    if !gcd(f0, f1)?.is_constant() {
        return Err(Error::NotCoprime);
    }
    let mut rep = AbcReport::new("basic");
    let fs = [f0.clone(), f1.clone(), f2];
    if f0.field().is_char_p() {
        let ok = !(is_pth_power_over_closure(f0) && is_pth_power_over_closure(f1));
        rep.hypotheses.push(Check::new(
            "not-both-pth-powers",
            ok,
            (!ok).then(|| "f0 and f1 are both p-th powers".to_string()),
        ));
    } else {
        let ok = !(f0.is_constant() && f1.is_constant());
        rep.hypotheses.push(Check::new(
            "not-both-constant",
            ok,
            (!ok).then(|| "f0 and f1 are both constant".to_string()),
        ));
    }
    if !rep.hypotheses_hold() {
        return Ok(rep.finish());
    }
    // pairwise coprime, so the radical of the product splits
    let rads = fs.iter().map(radical).collect::<Result<Vec<_>>>()?;
    let r = MvPoly::product(f0.field(), f0.nvars(), &rads);
    rep.degree_checks.push(DegreeCheck::new(
        "basic",
        max_deg(&fs),
        r.total_degree() as i64 - 1,
    ));
    let margin = max_norm(&fs)?.sub(&norm_profile(&r)?).add_line(&line(1));
    rep.margins.push(Margin::new("basic", margin, radii));
    Ok(rep.finish())
}

pub fn verify_basic_abc(f0: &MvPoly, f1: &MvPoly) -> Result<AbcReport> {
    verify_basic_abc_at(f0, f1, &default_radii())
}

#[cfg(test)]
mod tests {
    use super::super::Verdict;
    use super::*;
    use crate::coeffs::FieldSpec;

    fn polys(field: FieldSpec, vars: &[&str], items: &[&str]) -> Vec<MvPoly> {
        let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        items
            .iter()
            .map(|s| MvPoly::parse(field, &names, s).unwrap())
            .collect()
    }

    #[test]
    fn basic_examples() {
        let q = FieldSpec::rational(3).unwrap();
        let fs = polys(q, &["z"], &["z^2+2*z", "1"]);
        let rep = verify_basic_abc(&fs[0], &fs[1]).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert_eq!(rep.degree_check("basic").unwrap().slack(), 0);
        let fs = polys(q, &["z"], &["z", "1"]);
        let rep = verify_basic_abc(&fs[0], &fs[1]).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert_eq!(rep.degree_check("basic").unwrap().slack(), 0);
        for p in [2u64, 3, 5] {
            let f = FieldSpec::prime_field(p).unwrap();
            let fs = polys(f, &["x", "y"], &[&format!("x^{p}"), &format!("y^{p}")]);
            let rep = verify_basic_abc(&fs[0], &fs[1]).unwrap();
            assert_eq!(rep.verdict, Verdict::HypothesisViolated);
        }
        let fs = polys(q, &["z"], &["z^2", "z"]);
        assert_eq!(verify_basic_abc(&fs[0], &fs[1]), Err(Error::NotCoprime));
    }

    #[test]
    fn first_version_example() {
        let q = FieldSpec::rational(3).unwrap();
        let fs = polys(q, &["z"], &["z^2", "2*z+1", "-(z+1)^2"]);
        let rep = verify_abc_first(&fs).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        let c = rep.constants.as_ref().unwrap();
        assert_eq!((c.a, c.b), (1, 1));
        // 2 <= deg z + deg(2z+1) + deg(z+1) - 1
        assert_eq!(rep.degree_check("abctrsum").unwrap().rhs, 2);
    }

    #[test]
    fn char_p_first_version() {
        for p in [2u64, 3] {
            let f = FieldSpec::prime_field(p).unwrap();
            let fs = polys(
                f,
                &["x", "y"],
                &[
                    &format!("x^{p}"),
                    &format!("y^{p}"),
                    &format!("-x^{p}-y^{p}"),
                ],
            );
            let rep = verify_abc_first(&fs).unwrap();
            assert!(rep.hypotheses_hold());
            let c = rep.constants.as_ref().unwrap();
            assert_eq!(c.d, 2);
            assert_eq!(c.c, p);
            assert_eq!(rep.verdict, Verdict::Holds, "{rep:#?}");
        }
    }

    #[test]
    fn vanishing_subsum_gates() {
        let q = FieldSpec::rational(3).unwrap();
        let fs = polys(q, &["x", "y"], &["x", "1", "-x-1", "y^2", "2", "-y^2-2"]);
        let rep = verify_abc_first(&fs).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert_eq!(rep.blocks.len(), 2);
        let rep2 = verify_abc_second(&fs, None).unwrap();
        assert!(rep2.fallback.is_some());
        assert!(rep2.degree_checks.iter().all(DegreeCheck::holds));
        let fs = polys(q, &["x", "y"], &["x", "-x", "y+1", "-y-1"]);
        let rep = verify_abc_first(&fs).unwrap();
        assert_eq!(rep.verdict, Verdict::HypothesisViolated);
    }

    #[test]
    fn second_version_gate() {
        let q = FieldSpec::rational(3).unwrap();
        let fs = polys(q, &["x", "y"], &["x^2", "-x^2", "y^2+x", "-y^2-x"]);
        let rep = verify_abc_second(&fs, Some(3)).unwrap();
        // pairwise gcds fail, triples are coprime, k_bar = min(3, 2) = 2
        assert!(!rep.hypotheses_hold());
        let fs = polys(q, &["z"], &["z^2", "2*z+1", "-(z+1)^2"]);
        let rep = verify_abc_second(&fs, None).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!(rep.degree_check("abcsf").unwrap().holds());
        assert!(rep.degree_check("BB").unwrap().holds());
    }

    #[test]
    fn corollaries_example() {
        let q = FieldSpec::rational(3).unwrap();
        let fs = polys(q, &["z"], &["z^2", "2*z+1", "-(z+1)^2"]);
        let rep = verify_corollaries(&fs).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        // r_1 values 1, 1, 1 and a = 1
        assert_eq!(rep.degree_check("deBondtFour").unwrap().rhs, 2);
        let f = FieldSpec::prime_field(3).unwrap();
        let fs = polys(f, &["z"], &["z", "1", "-z-1"]);
        assert_eq!(verify_corollaries(&fs), Err(Error::WrongCharacteristic));
    }
}
