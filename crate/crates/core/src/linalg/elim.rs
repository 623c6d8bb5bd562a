//! Incremental sparse Gaussian elimination and explicit subspaces.

use crate::scalar::{FieldElement, FieldSpec};

/// A sparse vector: `(index, value)` pairs sorted by index, no explicit zeros.
pub type SparseRow = Vec<(usize, FieldElement)>;

/// `a - f * b` for sorted sparse rows.
pub(crate) fn axpy_sub(a: &[(usize, FieldElement)], f: &FieldElement, b: &[(usize, FieldElement)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(f * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub(crate) fn sparse_from_dense(v: &[FieldElement]) -> SparseRow {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub(crate) fn dense_from_sparse(spec: FieldSpec, n: usize, row: &[(usize, FieldElement)]) -> Vec<FieldElement> {
    let mut v = vec![FieldElement::zero(spec); n];
    for (i, x) in row {
        v[*i] = x.clone();
    }
    v
}

/// Row echelon form built one row at a time. Every stored row has leading entry 1 at
/// its pivot column; only leading entries are eliminated on insertion.
#[derive(Debug, Clone)]
pub struct RowReducer {
    spec: FieldSpec,
    ncols: usize,
    pivot_of_col: Vec<Option<usize>>,
    rows: Vec<SparseRow>,
}

impl RowReducer {
    pub fn new(spec: FieldSpec, ncols: usize) -> Self {
        RowReducer { spec, ncols, pivot_of_col: vec![None; ncols], rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `row` against the stored pivots until its leading column has no pivot.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        while let Some((c, lead)) = row.first() {
            match self.pivot_of_col[*c] {
                Some(p) => {
                    let f = lead.clone();
                    row = axpy_sub(&row, &f, &self.rows[p]);
                }
                None => break,
            }
        }
        row
    }

    /// Inserts a row; returns `false` when it was already in the span.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        self.insert_reduced(row)
    }

    /// Inserts a row already passed through [`RowReducer::reduce`].
    pub fn insert_reduced(&mut self, row: SparseRow) -> bool {
        let Some((c, lead)) = row.first() else {
            return false;
        };
        let c = *c;
        let inv = lead.inv().expect("nonzero lead");
        let row: SparseRow = row.into_iter().map(|(i, x)| (i, &x * &inv)).collect();
        self.pivot_of_col[c] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_of_col[c].is_some()).collect()
    }

    /// Fully reduced row echelon form, rows ordered by pivot column.
    pub fn into_rref(mut self) -> Vec<(usize, SparseRow)> {
        let pivots = self.pivot_columns();
        // back substitution from the rightmost pivot
        for &c in pivots.iter().rev() {
            let p = self.pivot_of_col[c].unwrap();
            let mut row = std::mem::take(&mut self.rows[p]);
            loop {
                let target = row
                    .iter()
                    .skip(1)
                    .find(|(col, _)| self.pivot_of_col[*col].is_some())
                    .map(|(col, x)| (*col, x.clone()));
                match target {
                    Some((col, f)) => {
                        let q = self.pivot_of_col[col].unwrap();
                        row = axpy_sub(&row, &f, &self.rows[q]);
                    }
                    None => break,
                }
            }
            self.rows[p] = row;
        }
        pivots
            .into_iter()
            .map(|c| {
                let p = self.pivot_of_col[c].unwrap();
                (c, std::mem::take(&mut self.rows[p]))
            })
            .collect()
    }

    /// Basis of `{x : row . x = 0 for every inserted row}`.
    pub fn kernel(self) -> Subspace {
        let spec = self.spec;
        let n = self.ncols;
        let is_pivot: Vec<bool> = self.pivot_of_col.iter().map(Option::is_some).collect();
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut slot = vec![usize::MAX; n];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let mut basis: Vec<SparseRow> = free.iter().map(|&f| vec![(f, FieldElement::one(spec))]).collect();
        for (c, row) in self.into_rref() {
            for (f, x) in row.into_iter().skip(1) {
                basis[slot[f]].push((c, -x));
            }
        }
        let basis = basis
            .into_iter()
            .map(|mut v| {
                v.sort_by_key(|(i, _)| *i);
                dense_from_sparse(spec, n, &v)
            })
            .collect();
        Subspace { spec, ambient: n, basis, coord_cols: free }
    }
}

/// A subspace of `k^n` with a basis in which each vector has a distinguished
/// coordinate column: `basis[j][coord_cols[j]] = 1` and `basis[i][coord_cols[j]] = 0`
/// for `i != j`. Coordinates of a member are then read off those columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    spec: FieldSpec,
    ambient: usize,
    basis: Vec<Vec<FieldElement>>,
    coord_cols: Vec<usize>,
}

impl Subspace {
    /// Canonical (reduced echelon) basis of the span of `vectors`.
    pub fn span(spec: FieldSpec, ambient: usize, vectors: &[Vec<FieldElement>]) -> Self {
        let mut red = RowReducer::new(spec, ambient);
        for v in vectors {
            red.insert(sparse_from_dense(v));
        }
        let rref = red.into_rref();
        let coord_cols = rref.iter().map(|(c, _)| *c).collect();
        let basis = rref.iter().map(|(_, r)| dense_from_sparse(spec, ambient, r)).collect();
        Subspace { spec, ambient, basis, coord_cols }
    }

    pub fn whole(spec: FieldSpec, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![FieldElement::zero(spec); ambient];
                v[i] = FieldElement::one(spec);
                v
            })
            .collect();
        Subspace { spec, ambient, basis, coord_cols: (0..ambient).collect() }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<FieldElement>> {
        self.basis
    }

    pub fn coord_cols(&self) -> &[usize] {
        &self.coord_cols
    }

    /// Coordinates of a vector assumed to lie in the subspace.
    pub fn coordinates(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        self.coord_cols.iter().map(|&c| v[c].clone()).collect()
    }

    pub fn combine(&self, coords: &[FieldElement]) -> Vec<FieldElement> {
        let mut out = vec![FieldElement::zero(self.spec); self.ambient];
        for (b, c) in self.basis.iter().zip(coords) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o = &*o + &(c * x);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        let back = self.combine(&self.coordinates(v));
        back.as_slice() == v
    }

    /// Equality as subspaces, independent of the chosen bases.
    pub fn same_space(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && other.basis.iter().all(|v| self.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(spec: FieldSpec, v: &[i64]) -> SparseRow {
        sparse_from_dense(&v.iter().map(|&x| FieldElement::from_i64(spec, x)).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_rank_one() {
        let q = FieldSpec::Rational;
        let mut r = RowReducer::new(q, 2);
        r.insert(row(q, &[1, 1]));
        assert!(!r.insert(row(q, &[2, 2])));
        let k = r.kernel();
        assert_eq!(k.dim(), 1);
        let v = &k.basis()[0];
        assert!((&v[0] + &v[1]).is_zero());
    }

    #[test]
    fn span_is_canonical() {
        let q = FieldSpec::Rational;
        let one = |v: &[i64]| v.iter().map(|&x| FieldElement::from_i64(q, x)).collect::<Vec<_>>();
        let a = Subspace::span(q, 3, &[one(&[1, 2, 3]), one(&[0, 1, 1])]);
        let b = Subspace::span(q, 3, &[one(&[1, 3, 4]), one(&[2, 5, 7])]);
        assert_eq!(a, b);
        assert!(a.same_space(&b));
        assert!(a.contains(&one(&[3, 7, 10])));
        assert!(!a.contains(&one(&[0, 0, 1])));
    }
}
