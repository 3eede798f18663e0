//! Generalized Wronskians, certificate search and the index of independence.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hasse::hasse_derivative;
use crate::linalg::{det_bareiss, span_rank, FractionFreeEchelon};
use crate::mvpoly::{Monomial, MvPoly};

/// Multi-indices `gamma^0 = 0, gamma^1, ...` with a nonvanishing generalized
/// Wronskian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WronskianCertificate {
    pub functions: Vec<MvPoly>,
    pub gammas: Vec<Monomial>,
    pub step_c: u64,
    pub determinant: MvPoly,
}

impl WronskianCertificate {
    /// Recomputes the determinant and checks the step bound.
    pub fn verify(&self) -> Result<bool> {
        let steps_ok = self
            .gammas
            .windows(2)
            .all(|w| w[1].total_degree() as u64 <= w[0].total_degree() as u64 + self.step_c);
        let det = gen_wronskian(&self.functions, &self.gammas)?;
        Ok(steps_ok && !det.is_zero() && det == self.determinant)
    }

    /// `|gamma^{n-1}|`.
    pub fn top_order(&self) -> u32 {
        self.gammas.last().map_or(0, Monomial::total_degree)
    }
}

fn derivative_row(fs: &[MvPoly], gamma: &Monomial) -> Result<Vec<MvPoly>> {
    fs.iter().map(|f| hasse_derivative(f, gamma)).collect()
}

fn check_family(fs: &[MvPoly]) -> Result<()> {
    let Some(first) = fs.first() else {
        return Err(Error::DimensionMismatch("empty function list".into()));
    };
    for f in fs {
        first.check_compatible(f)?;
    }
    Ok(())
}

/// `det (D^{gamma^i} f_j)_{i,j}`.
pub fn gen_wronskian(fs: &[MvPoly], gammas: &[Monomial]) -> Result<MvPoly> {
    check_family(fs)?;
    if fs.len() != gammas.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} functions but {} multi-indices",
            fs.len(),
            gammas.len()
        )));
    }
    if !gammas[0].is_zero() {
        return Err(Error::DimensionMismatch(
            "first multi-index must be zero".into(),
        ));
    }
    let rows = gammas
        .iter()
        .map(|g| derivative_row(fs, g))
        .collect::<Result<Vec<_>>>()?;
    det_bareiss(&rows)
}

/// Every monomial dominated by some support monomial of `fs`, ascending in
/// graded-lex order; all other multi-indices give zero derivative rows.
fn useful_indices(fs: &[MvPoly]) -> Vec<Monomial> {
    let nvars = fs[0].nvars();
    let maxdeg = fs.iter().map(MvPoly::total_degree).max().unwrap_or(0);
    let supports: Vec<&Monomial> = fs.iter().flat_map(|f| f.terms().map(|(m, _)| m)).collect();
    Monomial::up_to_degree(nvars, maxdeg)
        .into_iter()
        .filter(|g| !g.is_zero() && supports.iter().any(|m| m.dominates(g)))
        .collect()
}

/// Greedy certificate search with `|gamma^i| <= |gamma^{i-1}| + step_c`.
///
/// Candidates are scanned in ascending graded-lex order and the first one
/// that raises the rank of the derivative matrix over the fraction field is
/// kept.
pub fn find_certificate(fs: &[MvPoly], step_c: u64) -> Result<WronskianCertificate> {
    check_family(fs)?;
    if fs.iter().any(MvPoly::is_zero) {
        return Err(Error::ZeroPoly);
    }
    let refs: Vec<&MvPoly> = fs.iter().collect();
    if span_rank(&refs) < fs.len() {
        return Err(Error::NotFIndependent);
    }
    let n = fs.len();
    let nvars = fs[0].nvars();
    let mut ech = FractionFreeEchelon::new(n);
    ech.try_push(fs.to_vec())?;
    let mut gammas = vec![Monomial::zero(nvars)];
    let candidates = useful_indices(fs);
    let mut used = vec![false; candidates.len()];
    while gammas.len() < n {
        let bound = gammas.last().expect("nonempty").total_degree() as u64 + step_c;
        let mut found = false;
        for (k, g) in candidates.iter().enumerate() {
            if g.total_degree() as u64 > bound {
                break;
            }
            if used[k] {
                continue;
            }
            if ech.try_push(derivative_row(fs, g)?)? {
                used[k] = true;
                gammas.push(g.clone());
                found = true;
                break;
            }
        }
        if !found {
            return Err(Error::SearchExhausted(step_c));
        }
    }
    let determinant = gen_wronskian(fs, &gammas)?;
    if determinant.is_zero() {
        return Err(Error::Internal("certificate determinant vanished".into()));
    }
    Ok(WronskianCertificate {
        functions: fs.to_vec(),
        gammas,
        step_c,
        determinant,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceResult {
    /// Smallest `s >= 1` with independence over the `p^s`-th powers.
    pub index_s: u32,
    /// Largest level examined; independence is automatic once `p^s`
    /// exceeds every total degree.
    pub level_cap: u32,
    /// A relation `sum_j Q_j f_j = 0` with every `Q_j` a polynomial in
    /// `z^{p^{s-1}}`, witnessing dependence one level below `index_s`.
    pub dependent_over: Option<(u32, Vec<MvPoly>)>,
}

/// Rows of coefficients of `f_j` with respect to the basis `z^r`,
/// `r in [0, q)^m`, of `F[z]` over `F[z^q]`, written in `w = z^q`.
fn residue_matrix(fs: &[MvPoly], q: u64) -> Vec<Vec<MvPoly>> {
    let field = fs[0].field();
    let nvars = fs[0].nvars();
    let mut columns: BTreeMap<Monomial, usize> = BTreeMap::new();
    for f in fs {
        for (m, _) in f.terms() {
            let r = Monomial::new(m.exps().iter().map(|&e| (e as u64 % q) as u32));
            let next = columns.len();
            columns.entry(r).or_insert(next);
        }
    }
    fs.iter()
        .map(|f| {
            let mut row = vec![MvPoly::zero(field, nvars); columns.len()];
            for (m, c) in f.terms() {
                let r = Monomial::new(m.exps().iter().map(|&e| (e as u64 % q) as u32));
                let w = Monomial::new(m.exps().iter().map(|&e| (e as u64 / q) as u32));
                let col = columns[&r];
                row[col] = &row[col] + &MvPoly::monomial(field, nvars, w, c.clone());
            }
            row
        })
        .collect()
}

/// A relation among the rows by cofactors of a maximal nonsingular minor, or
/// `None` when the rows are independent over the fraction field.
fn row_relation(rows: &[Vec<MvPoly>]) -> Result<Option<Vec<MvPoly>>> {
    let n = rows.len();
    let ncols = rows[0].len();
    let mut ech = FractionFreeEchelon::new(ncols);
    let mut basis = Vec::new();
    let mut dependent = None;
    for (i, row) in rows.iter().enumerate() {
        if ech.try_push(row.clone())? {
            basis.push(i);
        } else {
            dependent = Some(i);
            break;
        }
    }
    let Some(j) = dependent else { return Ok(None) };
    let field = rows[0][0].field();
    let nvars = rows[0][0].nvars();
    let r = basis.len();
    let mut coeffs = vec![MvPoly::zero(field, nvars); n];
    if r == 0 {
        // row j is identically zero
        coeffs[j] = MvPoly::one(field, nvars);
        return Ok(Some(coeffs));
    }
    let mut col_ech = FractionFreeEchelon::new(r);
    let mut cols = Vec::new();
    for c in 0..ncols {
        let column: Vec<MvPoly> = basis.iter().map(|&i| rows[i][c].clone()).collect();
        if col_ech.try_push(column)? {
            cols.push(c);
            if cols.len() == r {
                break;
            }
        }
    }
    let mut order = basis.clone();
    order.push(j);
    for (k, &row_k) in order.iter().enumerate() {
        let minor: Vec<Vec<MvPoly>> = order
            .iter()
            .filter(|&&i| i != row_k)
            .map(|&i| cols.iter().map(|&c| rows[i][c].clone()).collect())
            .collect();
        let d = det_bareiss(&minor)?;
        coeffs[row_k] = if k % 2 == 0 { d } else { -&d };
    }
    Ok(Some(coeffs))
}

fn relation_at_level(fs: &[MvPoly], s: u32) -> Result<Option<Vec<MvPoly>>> {
    let q = fs[0].field().p().pow(s);
    let rows = residue_matrix(fs, q);
    Ok(row_relation(&rows)?.map(|qs| qs.iter().map(|c| c.inflate(q as u32)).collect()))
}

/// Whether `fs` stay linearly independent over the field of fractions of
/// `p^s`-th powers.
pub fn independent_over_level(fs: &[MvPoly], s: u32) -> Result<bool> {
    check_family(fs)?;
    if !fs[0].field().is_char_p() {
        return Err(Error::WrongCharacteristic);
    }
    Ok(relation_at_level(fs, s)?.is_none())
}

/// First level at which independence is automatic: `p^s > max total degree`.
pub fn level_cap(p: u64, maxdeg: u32) -> u32 {
    let mut s = 1;
    let mut q = p;
    while q <= maxdeg as u64 {
        q *= p;
        s += 1;
    }
    s
}

/// Index of independence of `F`-independent `fs`.
///
/// `f_j = sum_r z^r f_{j,r}(z^{p^s})` over residues `r` mod `p^s`, and the
/// `z^r` form a basis over the `p^s`-th powers, so independence at level `s`
/// is the full rank of the matrix `(f_{j,r})` over the fraction field.
pub fn index_of_independence(fs: &[MvPoly]) -> Result<IndependenceResult> {
    check_family(fs)?;
    let field = fs[0].field();
    if !field.is_char_p() {
        return Err(Error::WrongCharacteristic);
    }
    let refs: Vec<&MvPoly> = fs.iter().collect();
    if fs.iter().any(MvPoly::is_zero) || span_rank(&refs) < fs.len() {
        return Err(Error::NotFIndependent);
    }
    let maxdeg = fs.iter().map(MvPoly::total_degree).max().unwrap_or(0);
    let cap = level_cap(field.p(), maxdeg);
    let mut witness = None;
    for s in 1..=cap {
        match relation_at_level(fs, s)? {
            None => {
                return Ok(IndependenceResult {
                    index_s: s,
                    level_cap: cap,
                    dependent_over: witness,
                })
            }
            Some(qs) => witness = Some((s, qs)),
        }
    }
    Err(Error::Internal(
        "independence not reached at the level cap".into(),
    ))
}

/// All index subsets of `0..n` of size `k` in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Index of independence of an arbitrary finite collection: the maximum of
/// the indices of its maximal `F`-independent subsets, since a subset that
/// becomes dependent stays dependent inside any independent superset.
pub fn collection_index(fs: &[MvPoly]) -> Result<u32> {
    check_family(fs)?;
    if !fs[0].field().is_char_p() {
        return Err(Error::WrongCharacteristic);
    }
    let nonzero: Vec<MvPoly> = fs.iter().filter(|f| !f.is_zero()).cloned().collect();
    let refs: Vec<&MvPoly> = nonzero.iter().collect();
    let d = span_rank(&refs);
    if d == 0 {
        return Ok(1);
    }
    let mut best = 1;
    for subset in subsets_of_size(nonzero.len(), d) {
        let sub: Vec<MvPoly> = subset.iter().map(|&i| nonzero[i].clone()).collect();
        let sub_refs: Vec<&MvPoly> = sub.iter().collect();
        if span_rank(&sub_refs) < d {
            continue;
        }
        best = best.max(index_of_independence(&sub)?.index_s);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::FieldSpec;

    fn p(field: FieldSpec, vars: &[&str], s: &str) -> MvPoly {
        let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        MvPoly::parse(field, &names, s).unwrap()
    }

    #[test]
    fn wronskian_examples() {
        let q = FieldSpec::rational(3).unwrap();
        let z = ["z"];
        let fs = [p(q, &z, "1"), p(q, &z, "z")];
        let g = [Monomial::new([0]), Monomial::new([1])];
        assert!(gen_wronskian(&fs, &g).unwrap().is_one());

        let f5 = FieldSpec::prime_field(5).unwrap();
        let fs = [p(f5, &z, "1"), p(f5, &z, "z^5")];
        let g = [Monomial::new([0]), Monomial::new([5])];
        assert!(gen_wronskian(&fs, &g).unwrap().is_one());

        let f = p(q, &z, "z^2+3");
        let g = [Monomial::new([0]), Monomial::new([1])];
        assert!(gen_wronskian(&[f.clone(), f], &g).unwrap().is_zero());
    }

    #[test]
    fn certificate_examples() {
        let q = FieldSpec::rational(3).unwrap();
        let z = ["z"];
        let cert = find_certificate(&[p(q, &z, "1"), p(q, &z, "z")], 1).unwrap();
        assert_eq!(cert.gammas, vec![Monomial::new([0]), Monomial::new([1])]);
        assert!(cert.determinant.is_one());

        let f3 = FieldSpec::prime_field(3).unwrap();
        let fs = [p(f3, &z, "1"), p(f3, &z, "z^3")];
        assert_eq!(find_certificate(&fs, 1), Err(Error::SearchExhausted(1)));
        let cert = find_certificate(&fs, 3).unwrap();
        assert_eq!(cert.gammas[1], Monomial::new([3]));
        assert!(cert.verify().unwrap());

        let dep = [p(q, &z, "z"), p(q, &z, "2*z")];
        assert_eq!(find_certificate(&dep, 1), Err(Error::NotFIndependent));
    }

    #[test]
    fn independence_examples() {
        let f3 = FieldSpec::prime_field(3).unwrap();
        let z = ["z"];
        let fs = [p(f3, &z, "1"), p(f3, &z, "z^3")];
        let res = index_of_independence(&fs).unwrap();
        assert_eq!(res.index_s, 2);
        let (level, qs) = res.dependent_over.unwrap();
        assert_eq!(level, 1);
        let combo = MvPoly::sum(f3, 1, &[&qs[0] * &fs[0], &qs[1] * &fs[1]]);
        assert!(combo.is_zero());
        assert!(qs.iter().all(|q| crate::hasse::is_in_e_ps(q, 1).unwrap()));

        let fs = [p(f3, &z, "1"), p(f3, &z, "z")];
        assert_eq!(index_of_independence(&fs).unwrap().index_s, 1);

        let v = ["x", "y"];
        let fs = [p(f3, &v, "1"), p(f3, &v, "x^3*y^9")];
        assert_eq!(index_of_independence(&fs).unwrap().index_s, 2);

        let q = FieldSpec::rational(3).unwrap();
        assert_eq!(
            index_of_independence(&[p(q, &z, "1")]),
            Err(Error::WrongCharacteristic)
        );
    }

    #[test]
    fn collection_index_of_dependent_family() {
        let f3 = FieldSpec::prime_field(3).unwrap();
        let z = ["z"];
        let fs = [p(f3, &z, "1"), p(f3, &z, "z^3"), p(f3, &z, "-1-z^3")];
        assert_eq!(collection_index(&fs).unwrap(), 2);
    }
}
