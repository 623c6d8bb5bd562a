//! Exact matrices over a [`FieldSpec`].
//!
//! [`Matrix`] has dense semantics (every entry addressable) but stores rows sparsely:
//! the operators met in practice are action matrices of tensor powers, which are mostly
//! zeros. Tensor products use the left-major convention: basis vector `e_i ⊗ f_j` of
//! `V ⊗ W` has index `i * dim W + j`.

mod elim;
mod order;

pub use elim::{RowReducer, SparseRow, Subspace};
pub use order::{operator_order, DEFAULT_ORDER_CAP, operator_order_with_cap, InfiniteReason, OrderCertificate, OrderVerdict};

pub(crate) use elim::{axpy_sub, dense_from_sparse, sparse_from_dense};

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{FieldElement, FieldSpec};

/// Above this many stored entries products and Kronecker products run in parallel.
const PARALLEL_THRESHOLD: usize = 4096;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    spec: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.spec)?;
        if self.rows <= 12 && self.cols <= 12 {
            for i in 0..self.rows {
                let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
                writeln!(f, "  [{}]", row.join(", "))?;
            }
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(spec: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { spec, rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Self {
        Matrix::scalar(n, &FieldElement::one(spec))
    }

    pub fn scalar(n: usize, c: &FieldElement) -> Self {
        let data = if c.is_zero() { vec![Vec::new(); n] } else { (0..n).map(|i| vec![(i, c.clone())]).collect() };
        Matrix { spec: c.spec(), rows: n, cols: n, data }
    }

    pub fn diagonal(spec: FieldSpec, entries: &[FieldElement]) -> Self {
        let n = entries.len();
        Matrix::from_triplets(spec, n, n, entries.iter().enumerate().map(|(i, x)| (i, i, x.clone())))
    }

    pub fn from_dense(spec: FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            if let Some(x) = r.iter().find(|x| x.spec() != spec) {
                return Err(Error::FieldMismatch(spec, x.spec()));
            }
            data.push(sparse_from_dense(&r));
        }
        Ok(Matrix { spec, rows: nrows, cols, data })
    }

    pub fn from_i64(spec: FieldSpec, rows: &[&[i64]]) -> Self {
        let dense = rows
            .iter()
            .map(|r| r.iter().map(|&x| FieldElement::from_i64(spec, x)).collect())
            .collect();
        Matrix::from_dense(spec, dense).expect("well-formed literal")
    }

    /// Sums duplicate positions.
    pub fn from_triplets(
        spec: FieldSpec,
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, FieldElement)>,
    ) -> Self {
        let mut buckets: Vec<Vec<(usize, FieldElement)>> = vec![Vec::new(); rows];
        for (i, j, x) in entries {
            assert!(i < rows && j < cols, "triplet ({i}, {j}) out of bounds {rows}x{cols}");
            if !x.is_zero() {
                buckets[i].push((j, x));
            }
        }
        let data = buckets.into_iter().map(|b| compress_row(spec, b)).collect();
        Matrix { spec, rows, cols, data }
    }

    pub fn from_columns(spec: FieldSpec, nrows: usize, columns: &[Vec<FieldElement>]) -> Self {
        Matrix::from_triplets(
            spec,
            nrows,
            columns.len(),
            columns
                .iter()
                .enumerate()
                .flat_map(|(j, c)| c.iter().enumerate().map(move |(i, x)| (i, j, x.clone()))),
        )
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, FieldElement)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        let row = &self.data[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => row[k].1.clone(),
            Err(_) => FieldElement::zero(self.spec),
        }
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<FieldElement>> {
        self.data.iter().map(|r| dense_from_sparse(self.spec, self.cols, r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    /// `Some(c)` when the matrix equals `c * I` (including `c = 0`).
    pub fn as_scalar(&self) -> Option<FieldElement> {
        if !self.is_square() {
            return None;
        }
        if self.rows == 0 {
            return Some(FieldElement::one(self.spec));
        }
        let c = self.get(0, 0);
        let ok = self.data.iter().enumerate().all(|(i, r)| {
            if c.is_zero() {
                r.is_empty()
            } else {
                r.len() == 1 && r[0].0 == i && r[0].1 == c
            }
        });
        ok.then_some(c)
    }

    pub fn transpose(&self) -> Matrix {
        let mut buckets: Vec<SparseRow> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, x) in r {
                buckets[*j].push((i, x.clone()));
            }
        }
        Matrix { spec: self.spec, rows: self.cols, cols: self.rows, data: buckets }
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch(self.spec, other.spec));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let minus_one = -FieldElement::one(self.spec);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| axpy_sub(a, &minus_one, b)).collect();
        Ok(Matrix { spec: self.spec, rows: self.rows, cols: self.cols, data })
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let one = FieldElement::one(self.spec);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| axpy_sub(a, &one, b)).collect();
        Ok(Matrix { spec: self.spec, rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.checked_add(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.checked_sub(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.spec, self.rows, self.cols);
        }
        let data = self.data.iter().map(|r| r.iter().map(|(j, x)| (*j, x * c)).collect()).collect();
        Matrix { spec: self.spec, rows: self.rows, cols: self.cols, data }
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch(self.spec, other.spec));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let spec = self.spec;
        let ncols = other.cols;
        let product_row = |r: &SparseRow| -> SparseRow {
            let mut acc: Vec<(usize, FieldElement)> = Vec::new();
            for (k, a) in r {
                for (j, b) in &other.data[*k] {
                    acc.push((*j, a * b));
                }
            }
            compress_row(spec, acc)
        };
        let data: Vec<SparseRow> = if self.nnz() + other.nnz() > PARALLEL_THRESHOLD {
            self.data.par_iter().map(product_row).collect()
        } else {
            self.data.iter().map(product_row).collect()
        };
        Ok(Matrix { spec, rows: self.rows, cols: ncols, data })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.checked_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols, "vector length");
        self.data
            .iter()
            .map(|r| r.iter().fold(FieldElement::zero(self.spec), |acc, (j, x)| {
                if v[*j].is_zero() {
                    acc
                } else {
                    &acc + &(x * &v[*j])
                }
            }))
            .collect()
    }

    /// Sparse matrix-vector product.
    pub(crate) fn mul_sparse_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        self.mul_vec(v)
    }

    pub fn pow(&self, mut k: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.spec, self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Kronecker product `A ⊗ B`, left factor major.
    pub fn tensor_product(&self, other: &Matrix) -> Result<Matrix> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch(self.spec, other.spec));
        }
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let bc = other.cols;
        let make_row = |idx: usize| -> SparseRow {
            let (i1, i2) = (idx / other.rows, idx % other.rows);
            let mut out = Vec::with_capacity(self.data[i1].len() * other.data[i2].len());
            for (j1, a) in &self.data[i1] {
                for (j2, b) in &other.data[i2] {
                    out.push((j1 * bc + j2, a * b));
                }
            }
            out
        };
        let data: Vec<SparseRow> = if self.nnz() * other.nnz() > PARALLEL_THRESHOLD {
            (0..rows).into_par_iter().map(make_row).collect()
        } else {
            (0..rows).map(make_row).collect()
        };
        Ok(Matrix { spec: self.spec, rows, cols, data })
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        self.tensor_product(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Basis of the null space `{v : A v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<FieldElement>> {
        self.kernel_subspace().into_basis()
    }

    pub fn kernel_subspace(&self) -> Subspace {
        let mut red = RowReducer::new(self.spec, self.cols);
        for r in &self.data {
            red.insert(r.clone());
        }
        red.kernel()
    }

    pub fn rank(&self) -> usize {
        let mut red = RowReducer::new(self.spec, self.cols);
        for r in &self.data {
            red.insert(r.clone());
        }
        red.rank()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotInvertible);
        }
        let n = self.rows;
        // row reduce [A | I]
        let mut red = RowReducer::new(self.spec, 2 * n);
        for (i, r) in self.data.iter().enumerate() {
            let mut row = r.clone();
            row.push((n + i, FieldElement::one(self.spec)));
            red.insert(row);
        }
        let rref = red.into_rref();
        if rref.len() < n || rref[n - 1].0 != n - 1 {
            return Err(Error::NotInvertible);
        }
        let data = rref
            .into_iter()
            .take(n)
            .map(|(_, r)| r.into_iter().filter(|(j, _)| *j >= n).map(|(j, x)| (j - n, x)).collect())
            .collect();
        Ok(Matrix { spec: self.spec, rows: n, cols: n, data })
    }

    /// `p(A)` for a square matrix.
    pub fn eval_poly(&self, p: &Poly) -> Matrix {
        let n = self.rows;
        p.coeffs().iter().rev().fold(Matrix::zeros(self.spec, n, n), |acc, c| {
            acc.mul(self).add(&Matrix::scalar(n, c))
        })
    }

    /// `p(A) v` by Horner's rule, without forming `p(A)`.
    pub fn apply_poly(&self, p: &Poly, v: &[FieldElement]) -> Vec<FieldElement> {
        let mut acc = vec![FieldElement::zero(self.spec); self.rows];
        for c in p.coeffs().iter().rev() {
            acc = self.mul_sparse_vec(&acc);
            for (a, x) in acc.iter_mut().zip(v) {
                if !x.is_zero() {
                    *a = &*a + &(c * x);
                }
            }
        }
        acc
    }

    /// Monic polynomial of least degree annihilating the matrix (lcm of the minimal
    /// polynomials of the standard basis vectors).
    pub fn minimal_polynomial(&self) -> Poly {
        assert!(self.is_square(), "minimal polynomial of a non-square matrix");
        let n = self.rows;
        let spec = self.spec;
        let mut m = Poly::one(spec);
        for i in 0..n {
            if m.degree() == Some(n) {
                break;
            }
            let mut e = vec![FieldElement::zero(spec); n];
            e[i] = FieldElement::one(spec);
            if self.apply_poly(&m, &e).iter().all(FieldElement::is_zero) {
                continue;
            }
            let p = self.vector_minimal_polynomial(&e);
            m = m.lcm(&p);
        }
        m
    }

    /// Monic generator of `{p : p(A) v = 0}` via the Krylov sequence of `v`.
    pub fn vector_minimal_polynomial(&self, v: &[FieldElement]) -> Poly {
        let n = self.rows;
        let spec = self.spec;
        // augmented rows [A^k v | e_k]; a dependency shows up as a reduced row with zero
        // vector part
        let mut red = RowReducer::new(spec, 2 * n + 1);
        let mut current = v.to_vec();
        for k in 0..=n {
            let mut row = sparse_from_dense(&current);
            row.push((n + k, FieldElement::one(spec)));
            let reduced = red.reduce(row);
            if reduced.first().is_some_and(|(c, _)| *c >= n) {
                let coeffs = dense_from_sparse(spec, n + 1, &reduced.iter().map(|(c, x)| (c - n, x.clone())).collect::<Vec<_>>());
                return Poly::new(spec, coeffs).monic();
            }
            red.insert_reduced(reduced);
            current = self.mul_sparse_vec(&current);
        }
        unreachable!("Krylov sequence of length n+1 is dependent")
    }
}

/// Sorts by column and sums duplicates, dropping zeros.
pub(crate) fn compress_row(spec: FieldSpec, mut entries: Vec<(usize, FieldElement)>) -> SparseRow {
    if entries.is_empty() {
        return entries;
    }
    entries.sort_by_key(|(j, _)| *j);
    let mut out: SparseRow = Vec::with_capacity(entries.len());
    for (j, x) in entries {
        match out.last_mut() {
            Some((lj, lx)) if *lj == j => *lx = &*lx + &x,
            _ => out.push((j, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    let _ = spec;
    out
}
