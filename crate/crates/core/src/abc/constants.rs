//! Explicit constants read off pooled Wronskian multi-indices.

use crate::error::{Error, Result};
use crate::linalg::span_rank;
use crate::mvpoly::{gcd_all, Monomial, MvPoly};
use crate::wronskian::{collection_index, find_certificate, subsets_of_size, WronskianCertificate};

use super::partition::{bm_partition, check_guard, is_sum_zero, BmPartition, MAX_FUNCTIONS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbcConstants {
    /// Dimension of the span of the functions over the base field.
    pub d: usize,
    /// Step bound of the Wronskian search: `p^{s-1}` in char `p`, else 1.
    pub c: u64,
    /// Index of independence `s` (char `p` only).
    pub s_index: Option<u32>,
    pub a: u64,
    pub b: u64,
    pub a_bar: u64,
    /// Char `p` only.
    pub sigma: Option<u32>,
    pub k: usize,
    pub k_bar: usize,
    /// Pooled nonzero multi-indices in ascending order.
    pub gammas_used: Vec<Monomial>,
}

/// `a * m - m(m-1)/2 * c` with `m = ceil(a / c)`.
pub fn b_lower_bound(a: u64, c: u64) -> u64 {
    let m = a.div_ceil(c);
    a * m - m * (m - 1) / 2 * c
}

/// `c * sum_{i=1}^{k_bar-1} (d - i)`.
pub fn a_bar_cap(c: u64, d: usize, k_bar: usize) -> u64 {
    c * (1..k_bar).map(|i| d.saturating_sub(i) as u64).sum::<u64>()
}

impl AbcConstants {
    /// Each inequality of the constant chain with its verdict.
    pub fn chain_checks(&self, p: Option<u64>) -> Vec<(String, bool)> {
        let mut out = vec![
            (
                format!(
                    "1 <= a = {} <= c(d-1) = {}",
                    self.a,
                    self.c * (self.d as u64).saturating_sub(1)
                ),
                self.a >= 1 && self.a <= self.c * (self.d as u64).saturating_sub(1),
            ),
            (
                format!(
                    "b = {} >= {} >= a",
                    self.b,
                    b_lower_bound(self.a.max(1), self.c)
                ),
                self.b >= b_lower_bound(self.a.max(1), self.c)
                    && b_lower_bound(self.a.max(1), self.c) >= self.a,
            ),
            (
                format!(
                    "a_bar = {} <= {}",
                    self.a_bar,
                    a_bar_cap(self.c, self.d, self.k_bar)
                ),
                self.a_bar <= a_bar_cap(self.c, self.d, self.k_bar),
            ),
            (
                format!(
                    "b = {} >= a_bar = {} >= a = {} >= 1",
                    self.b, self.a_bar, self.a
                ),
                self.b >= self.a_bar && self.a_bar >= self.a && self.a >= 1,
            ),
        ];
        if let (Some(p), Some(sigma)) = (p, self.sigma) {
            let ok = p.checked_pow(sigma).is_some_and(|q| q <= self.a);
            out.push((format!("p^sigma = {p}^{sigma} <= a = {}", self.a), ok));
        }
        out
    }

    /// Aborts with the failing inequalities listed.
    pub fn check_chain(&self, p: Option<u64>) -> Result<()> {
        let bad: Vec<String> = self
            .chain_checks(p)
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(s, _)| s)
            .collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Internal(format!(
                "constant chain violated: {}",
                bad.join("; ")
            )))
        }
    }
}

/// Smallest `k >= 2` with every `k`-subset coprime; `None` when even the
/// whole collection shares a factor.
pub fn coprime_level(fs: &[MvPoly]) -> Result<Option<usize>> {
    check_guard(fs.len(), MAX_FUNCTIONS)?;
    for k in 2..=fs.len() {
        if subsets_coprime(fs, k)?.is_none() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// First `k`-subset whose gcd is nonconstant, if any.
pub fn subsets_coprime(fs: &[MvPoly], k: usize) -> Result<Option<Vec<usize>>> {
    for idx in subsets_of_size(fs.len(), k) {
        let sub: Vec<MvPoly> = idx.iter().map(|&i| fs[i].clone()).collect();
        if !gcd_all(&sub)?.is_constant() {
            return Ok(Some(idx));
        }
    }
    Ok(None)
}

/// `c` for a collection: `p^{s-1}` with `s` its index of independence.
pub fn step_constant(fs: &[MvPoly]) -> Result<(u64, Option<u32>)> {
    let field = fs[0].field();
    if !field.is_char_p() {
        return Ok((1, None));
    }
    let s = collection_index(fs)?;
    Ok((field.p().pow(s - 1), Some(s)))
}

pub fn span_dimension(fs: &[MvPoly]) -> usize {
    let refs: Vec<&MvPoly> = fs.iter().collect();
    span_rank(&refs)
}

/// Partition, certificates and constants for one minimal vanishing block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockAnalysis {
    /// Positions of the block's functions in the full collection.
    pub indices: Vec<usize>,
    /// Partition in terms of the full collection's indices.
    pub partition: BmPartition,
    /// `W_0, ..., W_{u-1}`.
    pub certificates: Vec<WronskianCertificate>,
    pub constants: AbcConstants,
}

impl BlockAnalysis {
    /// `W_0 * ... * W_{u-1}`, the ledger's `Delta_0` up to a constant.
    pub fn delta0(&self) -> MvPoly {
        let f = &self.certificates[0].functions[0];
        MvPoly::product(
            f.field(),
            f.nvars(),
            self.certificates.iter().map(|c| &c.determinant),
        )
    }
}

/// Runs the partition and certificate pipeline on a block with no vanishing
/// proper subsum, using a step `c` and coprimality level `k` fixed by the
/// caller (normally those of the whole collection).
pub fn analyze_block(
    fs: &[MvPoly],
    indices: &[usize],
    c: u64,
    s_index: Option<u32>,
    k: usize,
) -> Result<BlockAnalysis> {
    let local: Vec<MvPoly> = indices.iter().map(|&i| fs[i].clone()).collect();
    let part = bm_partition(&local)?;
    let mut certificates = Vec::with_capacity(part.u());
    for (j, set) in part.i_sets.iter().enumerate() {
        // the pivot of I_0 is its smallest index
        let members: &[usize] = if j == 0 { &set[1..] } else { set };
        let funcs: Vec<MvPoly> = members.iter().map(|&i| local[i].clone()).collect();
        certificates.push(find_certificate(&funcs, c)?);
    }
    let mut pooled: Vec<Monomial> = certificates
        .iter()
        .flat_map(|cert| cert.gammas[1..].iter().cloned())
        .collect();
    pooled.sort();
    let degs: Vec<u64> = pooled.iter().map(|g| g.total_degree() as u64).collect();
    let d = span_dimension(&local);
    if d < 2 && !local.iter().all(MvPoly::is_constant) {
        // every member is a constant times one nonconstant g, which then
        // divides the whole vanishing sum
        return Err(Error::NotCoprime);
    }
    let k_bar = k.min(d);
    let a = degs.last().copied().unwrap_or(0);
    let b = degs.iter().sum();
    let a_bar = degs.iter().rev().take(k_bar.saturating_sub(1)).sum();
    let field = fs[0].field();
    let sigma = field.is_char_p().then(|| {
        let top = pooled
            .iter()
            .map(Monomial::max_component)
            .max()
            .unwrap_or(0) as u64;
        let p = field.p();
        let mut sigma = 0;
        let mut q = p;
        while q <= top {
            q *= p;
            sigma += 1;
        }
        sigma
    });
    let constants = AbcConstants {
        d,
        c,
        s_index,
        a,
        b,
        a_bar,
        sigma,
        k,
        k_bar,
        gammas_used: pooled,
    };
    constants.check_chain(field.is_char_p().then(|| field.p()))?;
    let global = |set: &Vec<usize>| -> Vec<usize> { set.iter().map(|&i| indices[i]).collect() };
    Ok(BlockAnalysis {
        indices: indices.to_vec(),
        partition: BmPartition {
            i_sets: part.i_sets.iter().map(global).collect(),
            j_sets: part.j_sets.iter().map(global).collect(),
        },
        certificates,
        constants,
    })
}

pub(crate) fn check_family(fs: &[MvPoly]) -> Result<()> {
    if fs.is_empty() {
        return Err(Error::NotSumZero);
    }
    for f in &fs[1..] {
        fs[0].check_compatible(f)?;
    }
    check_guard(fs.len(), MAX_FUNCTIONS)
}

/// Constants of a collection with zero sum and no vanishing proper subsum.
pub fn abc_constants(fs: &[MvPoly]) -> Result<AbcConstants> {
    check_family(fs)?;
    if !is_sum_zero(fs) {
        return Err(Error::NotSumZero);
    }
    if fs.iter().any(MvPoly::is_zero) {
        return Err(Error::ZeroPoly);
    }
    if fs.iter().all(MvPoly::is_constant) {
        return Err(Error::NotConstant);
    }
    let (c, s_index) = step_constant(fs)?;
    let k = coprime_level(fs)?.unwrap_or(fs.len());
    let all: Vec<usize> = (0..fs.len()).collect();
    Ok(analyze_block(fs, &all, c, s_index, k)?.constants)
}
