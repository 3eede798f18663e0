//! Vanishing subsums and Brownawell-Masser partitions by exhaustive search.

use crate::coeffs::{Coeff, FieldSpec};
use crate::error::{Error, Result};
use crate::linalg::{joint_support, rank};
use crate::mvpoly::MvPoly;

/// Exhaustive subset searches are capped at `f_0, ..., f_n` with `n <= 12`.
pub const MAX_FUNCTIONS: usize = 13;

pub(crate) fn check_guard(n: usize, max_n: usize) -> Result<()> {
    if n > max_n {
        return Err(Error::GuardExceeded(format!(
            "{n} functions exceeds the cap of {max_n}"
        )));
    }
    Ok(())
}

/// Subsets of `items`, smallest first and lexicographic within a size.
pub fn subsets_by_size(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 1..=items.len() {
        for idx in crate::wronskian::subsets_of_size(items.len(), k) {
            out.push(idx.into_iter().map(|i| items[i]).collect());
        }
    }
    out
}

pub fn is_sum_zero(fs: &[MvPoly]) -> bool {
    MvPoly::sum(fs[0].field(), fs[0].nvars(), fs).is_zero()
}

fn subset_sum(fs: &[MvPoly], idx: &[usize]) -> MvPoly {
    MvPoly::sum(fs[0].field(), fs[0].nvars(), idx.iter().map(|&i| &fs[i]))
}

/// Every nonempty proper index set whose functions sum to zero.
pub fn vanishing_proper_subsums(fs: &[MvPoly]) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..fs.len()).collect();
    subsets_by_size(&all)
        .into_iter()
        .filter(|s| s.len() < fs.len() && subset_sum(fs, s).is_zero())
        .collect()
}

/// Partition of `0..n` into minimal vanishing subsums, smallest first.
pub fn split_vanishing_subsums(fs: &[MvPoly]) -> Result<Vec<Vec<usize>>> {
    if fs.is_empty() || !is_sum_zero(fs) {
        return Err(Error::NotSumZero);
    }
    check_guard(fs.len(), MAX_FUNCTIONS)?;
    let mut remaining: Vec<usize> = (0..fs.len()).collect();
    let mut blocks = Vec::new();
    while !remaining.is_empty() {
        let block = subsets_by_size(&remaining)
            .into_iter()
            .find(|s| subset_sum(fs, s).is_zero())
            .expect("the remaining functions sum to zero");
        remaining.retain(|i| !block.contains(i));
        blocks.push(block);
    }
    blocks.sort();
    Ok(blocks)
}

/// `I_0, ..., I_{u-1}` with linking sets `J_0, ..., J_{u-2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmPartition {
    pub i_sets: Vec<Vec<usize>>,
    pub j_sets: Vec<Vec<usize>>,
}

impl BmPartition {
    pub fn u(&self) -> usize {
        self.i_sets.len()
    }
}

/// Coefficient vectors of `fs` over their joint support.
pub(crate) struct VectorFamily {
    field: FieldSpec,
    vectors: Vec<Vec<Coeff>>,
}

impl VectorFamily {
    pub(crate) fn new(fs: &[MvPoly]) -> Self {
        let refs: Vec<&MvPoly> = fs.iter().collect();
        let basis = joint_support(&refs);
        VectorFamily {
            field: fs[0].field(),
            vectors: fs.iter().map(|f| f.coefficient_vector(&basis)).collect(),
        }
    }

    pub(crate) fn rank_of(&self, idx: &[usize]) -> usize {
        let rows: Vec<Vec<Coeff>> = idx.iter().map(|&i| self.vectors[i].clone()).collect();
        rank(self.field, &rows)
    }

    fn independent(&self, idx: &[usize]) -> bool {
        self.rank_of(idx) == idx.len()
    }

    /// Dependent, with every subset missing one element independent.
    fn is_circuit(&self, idx: &[usize]) -> bool {
        !self.independent(idx)
            && (0..idx.len()).all(|k| {
                let sub: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, &i)| i)
                    .collect();
                self.independent(&sub)
            })
    }

    /// Rank of `idx` modulo the span of `base`.
    fn rank_mod(&self, idx: &[usize], base: &[usize], base_rank: usize) -> usize {
        let all: Vec<usize> = base.iter().chain(idx).copied().collect();
        self.rank_of(&all) - base_rank
    }

    fn is_circuit_mod(&self, idx: &[usize], base: &[usize], base_rank: usize) -> bool {
        self.rank_mod(idx, base, base_rank) < idx.len()
            && (0..idx.len()).all(|k| {
                let sub: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, &i)| i)
                    .collect();
                self.rank_mod(&sub, base, base_rank) == sub.len()
            })
    }

    /// Smallest `J` inside a greedy basis of `span(base)` such that
    /// `idx` together with `J` is dependent.
    fn linking_set(&self, idx: &[usize], base: &[usize]) -> Vec<usize> {
        let mut basis: Vec<usize> = Vec::new();
        for &b in base {
            let mut trial = basis.clone();
            trial.push(b);
            if self.independent(&trial) {
                basis = trial;
            }
        }
        // a relation among idx + basis; its support on the basis is J
        let cols: Vec<usize> = idx.iter().chain(&basis).copied().collect();
        let ncoords = self.vectors[0].len();
        let rows: Vec<Vec<Coeff>> = (0..ncoords)
            .map(|r| cols.iter().map(|&i| self.vectors[i][r].clone()).collect())
            .collect();
        let kernel = crate::linalg::nullspace(self.field, &rows, cols.len());
        let rel = kernel
            .into_iter()
            .find(|v| v[..idx.len()].iter().any(|c| !self.field.is_zero(c)))
            .expect("idx is dependent modulo the base span");
        basis
            .iter()
            .enumerate()
            .filter(|(k, _)| !self.field.is_zero(&rel[idx.len() + k]))
            .map(|(_, &b)| b)
            .collect()
    }
}

/// A Brownawell-Masser partition of `fs` (sum zero, no vanishing proper
/// subsum). `I_0` is the first circuit in size-then-lexicographic order; each
/// later `I_j` is the first remaining set that is a circuit modulo the span
/// already covered while being independent on its own.
pub fn bm_partition(fs: &[MvPoly]) -> Result<BmPartition> {
    if fs.is_empty() || !is_sum_zero(fs) {
        return Err(Error::NotSumZero);
    }
    check_guard(fs.len(), MAX_FUNCTIONS)?;
    if let Some(v) = vanishing_proper_subsums(fs).into_iter().next() {
        return Err(Error::VanishingSubsum(v));
    }
    let fam = VectorFamily::new(fs);
    let all: Vec<usize> = (0..fs.len()).collect();
    let i0 = subsets_by_size(&all)
        .into_iter()
        .find(|s| fam.is_circuit(s))
        .ok_or_else(|| Error::Internal("no circuit among dependent vectors".into()))?;
    let mut covered = i0.clone();
    let mut i_sets = vec![i0];
    let mut j_sets = Vec::new();
    while covered.len() < fs.len() {
        let remaining: Vec<usize> = all
            .iter()
            .copied()
            .filter(|i| !covered.contains(i))
            .collect();
        let base_rank = fam.rank_of(&covered);
        let next = subsets_by_size(&remaining)
            .into_iter()
            .find(|s| fam.independent(s) && fam.is_circuit_mod(s, &covered, base_rank))
            .ok_or_else(|| Error::Internal("partition search stalled".into()))?;
        let link = fam.linking_set(&next, &covered);
        covered.extend(&next);
        covered.sort();
        i_sets.push(next);
        j_sets.push(link);
    }
    Ok(BmPartition { i_sets, j_sets })
}

/// Checks the defining minimality conditions of a partition.
pub fn partition_is_valid(fs: &[MvPoly], part: &BmPartition) -> bool {
    let fam = VectorFamily::new(fs);
    let mut seen: Vec<usize> = part.i_sets.concat();
    seen.sort();
    if seen != (0..fs.len()).collect::<Vec<_>>() || part.j_sets.len() + 1 != part.u() {
        return false;
    }
    if !fam.is_circuit(&part.i_sets[0]) {
        return false;
    }
    for j in 1..part.u() {
        let link = &part.j_sets[j - 1];
        let earlier: Vec<usize> = part.i_sets[..j].concat();
        if link.is_empty() || !link.iter().all(|i| earlier.contains(i)) {
            return false;
        }
        let mut set = part.i_sets[j].clone();
        set.extend(link);
        set.sort();
        if !fam.is_circuit(&set) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polys(field: FieldSpec, items: &[&str]) -> Vec<MvPoly> {
        let names = vec!["z".to_string()];
        items
            .iter()
            .map(|s| MvPoly::parse(field, &names, s).unwrap())
            .collect()
    }

    #[test]
    fn partition_examples() {
        let q = FieldSpec::rational(3).unwrap();
        let fs = polys(q, &["1", "z", "-1-z"]);
        let part = bm_partition(&fs).unwrap();
        assert_eq!(part.i_sets, vec![vec![0, 1, 2]]);

        let fs = polys(q, &["1", "z", "2*z", "-1-3*z"]);
        let part = bm_partition(&fs).unwrap();
        assert_eq!(part.i_sets, vec![vec![1, 2], vec![0, 3]]);
        assert_eq!(part.j_sets, vec![vec![1]]);
        assert!(partition_is_valid(&fs, &part));

        let fs = polys(q, &["1", "-1", "z"]);
        assert_eq!(bm_partition(&fs), Err(Error::NotSumZero));
        let fs = polys(q, &["z", "-z", "1", "-1"]);
        assert!(matches!(bm_partition(&fs), Err(Error::VanishingSubsum(_))));
    }

    #[test]
    fn split_examples() {
        let q = FieldSpec::rational(3).unwrap();
        let fs = polys(q, &["z", "-z", "1", "-1"]);
        assert_eq!(
            split_vanishing_subsums(&fs).unwrap(),
            vec![vec![0, 1], vec![2, 3]]
        );
        let fs = polys(q, &["1", "z", "-1-z"]);
        assert_eq!(split_vanishing_subsums(&fs).unwrap(), vec![vec![0, 1, 2]]);
        let fs = polys(q, &["1", "z"]);
        assert_eq!(split_vanishing_subsums(&fs), Err(Error::NotSumZero));
    }
}
