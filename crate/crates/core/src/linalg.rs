//! Exact linear algebra: Gaussian elimination over the coefficient field and
//! fraction-free (Bareiss) elimination over the polynomial ring.

use std::collections::BTreeSet;

use crate::coeffs::{Coeff, FieldSpec};
use crate::error::{Error, Result};
use crate::mvpoly::{Monomial, MvPoly};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(field: FieldSpec, rows: &mut [Vec<Coeff>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(i) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, i);
        let inv = field.inv(&rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !field.is_zero(y) {
                    *x = field.sub(x, &field.mul(&factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(field: FieldSpec, rows: &[Vec<Coeff>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows with `ncols` columns.
pub fn nullspace(field: FieldSpec, rows: &[Vec<Coeff>], ncols: usize) -> Vec<Vec<Coeff>> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m);
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut x = vec![field.zero(); ncols];
        x[free] = field.one();
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = field.neg(&m[r][free]);
        }
        basis.push(x);
    }
    basis
}

/// Union of the supports, ascending graded-lex.
pub fn joint_support(fs: &[&MvPoly]) -> Vec<Monomial> {
    let set: BTreeSet<Monomial> = fs
        .iter()
        .flat_map(|f| f.terms().map(|(m, _)| m.clone()))
        .collect();
    set.into_iter().collect()
}

/// Rank of the `F`-span of `fs`, i.e. of their coefficient vectors.
pub fn span_rank(fs: &[&MvPoly]) -> usize {
    let Some(first) = fs.first() else { return 0 };
    let basis = joint_support(fs);
    let rows: Vec<Vec<Coeff>> = fs.iter().map(|f| f.coefficient_vector(&basis)).collect();
    rank(first.field(), &rows)
}

/// Basis of the `F`-linear relations `sum_j c_j f_j = 0`.
pub fn linear_relations(fs: &[&MvPoly]) -> Vec<Vec<Coeff>> {
    let Some(first) = fs.first() else {
        return Vec::new();
    };
    let basis = joint_support(fs);
    let field = first.field();
    let cols: Vec<Vec<Coeff>> = fs.iter().map(|f| f.coefficient_vector(&basis)).collect();
    let rows: Vec<Vec<Coeff>> = (0..basis.len())
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    nullspace(field, &rows, fs.len())
}

/// Determinant by Bareiss elimination over the polynomial ring.
pub fn det_bareiss(matrix: &[Vec<MvPoly>]) -> Result<MvPoly> {
    let n = matrix.len();
    let Some(first) = matrix.first().and_then(|r| r.first()) else {
        return Err(Error::DimensionMismatch("empty matrix".into()));
    };
    let (field, nvars) = (first.field(), first.nvars());
    if matrix.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("matrix is not square".into()));
    }
    let mut m = matrix.to_vec();
    let mut prev = MvPoly::one(field, nvars);
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(MvPoly::zero(field, nvars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t
                    .exact_div(&prev)
                    .map_err(|_| Error::Internal("Bareiss division".into()))?;
            }
            m[i][k] = MvPoly::zero(field, nvars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// Incremental fraction-free row echelon form over the polynomial ring.
///
/// Each stored row is kept exactly as it was when it became a pivot row, so a
/// new row can be reduced later with the same sequence of Bareiss steps. The
/// reduced entries are minors of the underlying matrix, hence every division
/// is exact and the rank over the fraction field is the number of rows kept.
#[derive(Clone, Debug)]
pub struct FractionFreeEchelon {
    ncols: usize,
    rows: Vec<(Vec<MvPoly>, usize)>,
}

impl FractionFreeEchelon {
    pub fn new(ncols: usize) -> Self {
        FractionFreeEchelon {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut row: Vec<MvPoly>) -> Result<Vec<MvPoly>> {
        let mut prev: Option<&MvPoly> = None;
        for (pivot_row, c) in &self.rows {
            let pv = &pivot_row[*c];
            let rc = row[*c].clone();
            for j in 0..self.ncols {
                let t = if rc.is_zero() {
                    &row[j] * pv
                } else {
                    &(&row[j] * pv) - &(&rc * &pivot_row[j])
                };
                row[j] = match prev {
                    None => t,
                    Some(d) => t
                        .exact_div(d)
                        .map_err(|_| Error::Internal("fraction-free division".into()))?,
                };
            }
            prev = Some(pv);
        }
        Ok(row)
    }

    /// Whether `row` lies in the span of the stored rows over the fraction
    /// field.
    pub fn is_dependent(&self, row: &[MvPoly]) -> Result<bool> {
        Ok(self.reduce(row.to_vec())?.iter().all(MvPoly::is_zero))
    }

    /// Adds `row` if it raises the rank; returns whether it did.
    pub fn try_push(&mut self, row: Vec<MvPoly>) -> Result<bool> {
        if row.len() != self.ncols {
            return Err(Error::DimensionMismatch("row length".into()));
        }
        let reduced = self.reduce(row)?;
        match reduced.iter().position(|x| !x.is_zero()) {
            None => Ok(false),
            Some(c) => {
                self.rows.push((reduced, c));
                Ok(true)
            }
        }
    }
}

/// Rank over the fraction field of a polynomial matrix.
pub fn rank_fraction_free(matrix: &[Vec<MvPoly>]) -> Result<usize> {
    let ncols = matrix.first().map_or(0, Vec::len);
    let mut ech = FractionFreeEchelon::new(ncols);
    for row in matrix {
        ech.try_push(row.clone())?;
    }
    Ok(ech.rank())
}
