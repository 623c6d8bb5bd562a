//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Elements of `H` are dense coefficient vectors over the basis. Elements of `H^{⊗k}`
//! are sparse rows indexed left-major: `e_{i_1} ⊗ ... ⊗ e_{i_k}` has index
//! `i_1 d^{k-1} + ... + i_k`.
//!
//! Conventions, fixed once:
//! - `R = Σ r_1 ⊗ r_2`, the braiding on `M ⊗ N` is `flip ∘ (ρ_M ⊗ ρ_N)(R)`.
//! - The twist of a module is the action of the ribbon element, `θ_M = ρ_M(v)`.
//!   Balancing `θ_{M⊗N} = c_{N,M} c_{M,N} (θ_M ⊗ θ_N)` then forces
//!   `Δ(v) = (R_21 R)(v ⊗ v)`, which is the ribbon axiom checked here.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    compress_row, dense_from_sparse, operator_order, sparse_from_dense, Matrix, OrderCertificate,
    RowReducer, SparseRow, Subspace,
};
use crate::poly::Poly;
use crate::scalar::{FieldElement, FieldSpec};

/// Dimension from which [`CheckMode::Auto`] switches to generator-based checks.
pub const GENERATOR_MODE_DIM: usize = 30;

/// Raw structure constants. [`HopfData::new`] checks shapes and nothing else.
#[derive(Debug, Clone)]
pub struct HopfParts {
    pub name: String,
    pub spec: FieldSpec,
    pub basis_labels: Vec<String>,
    /// `(i, j, k, c)`: `e_i e_j` has coefficient `c` at `e_k`.
    pub mult: Vec<(usize, usize, usize, FieldElement)>,
    pub unit: Vec<FieldElement>,
    /// `(i, j, k, c)`: `Δ(e_i)` has coefficient `c` at `e_j ⊗ e_k`.
    pub comult: Vec<(usize, usize, usize, FieldElement)>,
    pub counit: Vec<FieldElement>,
    /// `(i, j, c)`: `S(e_i)` has coefficient `c` at `e_j`.
    pub antipode: Vec<(usize, usize, FieldElement)>,
    /// `(i, j, c)`: `R` has coefficient `c` at `e_i ⊗ e_j`.
    pub r_matrix: Option<Vec<(usize, usize, FieldElement)>>,
    pub ribbon: Option<Vec<FieldElement>>,
    pub generators: Option<Vec<usize>>,
    /// Characters `χ(e_i)` of one-dimensional (hence simple) modules.
    pub simple_characters: Vec<Vec<FieldElement>>,
}

#[derive(Clone)]
pub struct HopfData {
    name: String,
    spec: FieldSpec,
    dim: usize,
    basis_labels: Vec<String>,
    /// Indexed by `i * dim + j`.
    mult: Vec<SparseRow>,
    unit: Vec<FieldElement>,
    /// Indexed by `i`; entries indexed by `j * dim + k`.
    comult: Vec<SparseRow>,
    counit: Vec<FieldElement>,
    /// Column `i` is `S(e_i)`.
    antipode: Matrix,
    r_matrix: Option<SparseRow>,
    ribbon: Option<Vec<FieldElement>>,
    generators: Option<Vec<usize>>,
    simple_characters: Vec<Vec<FieldElement>>,
}

impl fmt::Debug for HopfData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfData")
            .field("name", &self.name)
            .field("spec", &self.spec)
            .field("dim", &self.dim)
            .field("has_r_matrix", &self.r_matrix.is_some())
            .field("has_ribbon", &self.ribbon.is_some())
            .finish()
    }
}

fn check_index(what: &str, bound: usize, idx: &[usize]) -> Result<()> {
    match idx.iter().find(|&&i| i >= bound) {
        Some(i) => Err(Error::DimensionMismatch(format!("{what}: index {i} out of range {bound}"))),
        None => Ok(()),
    }
}

fn check_spec(spec: FieldSpec, xs: impl IntoIterator<Item = FieldSpec>) -> Result<()> {
    match xs.into_iter().find(|s| *s != spec) {
        Some(s) => Err(Error::FieldMismatch(spec, s)),
        None => Ok(()),
    }
}

impl HopfData {
    pub fn new(parts: HopfParts) -> Result<Self> {
        let spec = parts.spec;
        let dim = parts.basis_labels.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch("empty basis".into()));
        }
        for (what, len) in [("unit", parts.unit.len()), ("counit", parts.counit.len())] {
            if len != dim {
                return Err(Error::DimensionMismatch(format!("{what} has length {len}, expected {dim}")));
            }
        }
        check_spec(spec, parts.unit.iter().chain(&parts.counit).map(FieldElement::spec))?;
        let mut mult = vec![Vec::new(); dim * dim];
        for (i, j, k, c) in parts.mult {
            check_index("mult", dim, &[i, j, k])?;
            check_spec(spec, [c.spec()])?;
            mult[i * dim + j].push((k, c));
        }
        let mult = mult.into_iter().map(|r| compress_row(spec, r)).collect();
        let mut comult = vec![Vec::new(); dim];
        for (i, j, k, c) in parts.comult {
            check_index("comult", dim, &[i, j, k])?;
            check_spec(spec, [c.spec()])?;
            comult[i].push((j * dim + k, c));
        }
        let comult = comult.into_iter().map(|r| compress_row(spec, r)).collect();
        for (i, j, c) in &parts.antipode {
            check_index("antipode", dim, &[*i, *j])?;
            check_spec(spec, [c.spec()])?;
        }
        let antipode = Matrix::from_triplets(spec, dim, dim, parts.antipode.into_iter().map(|(i, j, c)| (j, i, c)));
        let r_matrix = match parts.r_matrix {
            None => None,
            Some(entries) => {
                let mut row = Vec::new();
                for (i, j, c) in entries {
                    check_index("r_matrix", dim, &[i, j])?;
                    check_spec(spec, [c.spec()])?;
                    row.push((i * dim + j, c));
                }
                Some(compress_row(spec, row))
            }
        };
        if let Some(v) = &parts.ribbon {
            if v.len() != dim {
                return Err(Error::DimensionMismatch(format!("ribbon has length {}, expected {dim}", v.len())));
            }
            check_spec(spec, v.iter().map(FieldElement::spec))?;
        }
        if let Some(g) = &parts.generators {
            check_index("generators", dim, g)?;
        }
        for chi in &parts.simple_characters {
            if chi.len() != dim {
                return Err(Error::DimensionMismatch("character length".into()));
            }
        }
        Ok(HopfData {
            name: parts.name,
            spec,
            dim,
            basis_labels: parts.basis_labels,
            mult,
            unit: parts.unit,
            comult,
            counit: parts.counit,
            antipode,
            r_matrix,
            ribbon: parts.ribbon,
            generators: parts.generators,
            simple_characters: parts.simple_characters,
        })
    }

    pub fn to_parts(&self) -> HopfParts {
        let d = self.dim;
        let mult = (0..d * d)
            .flat_map(|ij| self.mult[ij].iter().map(move |(k, c)| (ij / d, ij % d, *k, c.clone())))
            .collect();
        let comult = (0..d)
            .flat_map(|i| self.comult[i].iter().map(move |(jk, c)| (i, jk / d, jk % d, c.clone())))
            .collect();
        let antipode = (0..d)
            .flat_map(|j| self.antipode.row(j).iter().map(move |(i, c)| (*i, j, c.clone())))
            .collect::<Vec<_>>();
        let mut antipode = antipode;
        antipode.sort_by_key(|(i, j, _)| (*i, *j));
        HopfParts {
            name: self.name.clone(),
            spec: self.spec,
            basis_labels: self.basis_labels.clone(),
            mult,
            unit: self.unit.clone(),
            comult,
            counit: self.counit.clone(),
            antipode,
            r_matrix: self.r_matrix.as_ref().map(|r| r.iter().map(|(ij, c)| (ij / d, ij % d, c.clone())).collect()),
            ribbon: self.ribbon.clone(),
            generators: self.generators.clone(),
            simple_characters: self.simple_characters.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn unit(&self) -> &[FieldElement] {
        &self.unit
    }

    pub fn counit(&self) -> &[FieldElement] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// `R` as a sparse element of `H ⊗ H`.
    pub fn r_matrix(&self) -> Option<&SparseRow> {
        self.r_matrix.as_ref()
    }

    pub fn ribbon(&self) -> Option<&[FieldElement]> {
        self.ribbon.as_deref()
    }

    pub fn declared_generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }

    pub fn simple_characters(&self) -> &[Vec<FieldElement>] {
        &self.simple_characters
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_r_matrix(mut self, r: Option<SparseRow>) -> Self {
        self.r_matrix = r;
        self
    }

    pub fn with_ribbon(mut self, v: Option<Vec<FieldElement>>) -> Self {
        self.ribbon = v;
        self
    }

    pub fn with_generators(mut self, g: Option<Vec<usize>>) -> Self {
        self.generators = g;
        self
    }

    pub fn with_simple_characters(mut self, chars: Vec<Vec<FieldElement>>) -> Self {
        self.simple_characters = chars;
        self
    }

    pub fn with_antipode(mut self, s: Matrix) -> Self {
        assert_eq!((s.rows(), s.cols()), (self.dim, self.dim));
        self.antipode = s;
        self
    }

    // ---------------------------------------------------------------------
    // elements

    pub fn zero(&self) -> Vec<FieldElement> {
        vec![FieldElement::zero(self.spec); self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Vec<FieldElement> {
        let mut v = self.zero();
        v[i] = FieldElement::one(self.spec);
        v
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &SparseRow {
        &self.mult[i * self.dim + j]
    }

    pub fn comult_of_basis(&self, i: usize) -> &SparseRow {
        &self.comult[i]
    }

    pub fn mul(&self, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        let sa = sparse_from_dense(a);
        let sb = sparse_from_dense(b);
        dense_from_sparse(self.spec, self.dim, &self.tensor_mul(1, &sa, &sb))
    }

    pub fn antipode_of(&self, a: &[FieldElement]) -> Vec<FieldElement> {
        self.antipode.mul_vec(a)
    }

    pub fn counit_of(&self, a: &[FieldElement]) -> FieldElement {
        dot(self.spec, &self.counit, a)
    }

    pub fn comult_of(&self, a: &[FieldElement]) -> SparseRow {
        let mut acc = Vec::new();
        for (i, x) in a.iter().enumerate() {
            if !x.is_zero() {
                acc.extend(self.comult[i].iter().map(|(jk, c)| (*jk, x * c)));
            }
        }
        compress_row(self.spec, acc)
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mult_matrix(&self, a: &[FieldElement]) -> Matrix {
        let d = self.dim;
        Matrix::from_triplets(
            self.spec,
            d,
            d,
            a.iter().enumerate().filter(|(_, x)| !x.is_zero()).flat_map(|(i, x)| {
                (0..d).flat_map(move |j| self.mult[i * d + j].iter().map(move |(k, c)| (*k, j, x * c)))
            }),
        )
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mult_matrix(&self, a: &[FieldElement]) -> Matrix {
        let d = self.dim;
        Matrix::from_triplets(
            self.spec,
            d,
            d,
            a.iter().enumerate().filter(|(_, x)| !x.is_zero()).flat_map(|(i, x)| {
                (0..d).flat_map(move |j| self.mult[j * d + i].iter().map(move |(k, c)| (*k, j, x * c)))
            }),
        )
    }

    /// Solves `a w = 1`; `None` if `a` is not invertible.
    pub fn inverse_of(&self, a: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let inv = self.left_mult_matrix(a).inverse().ok()?;
        let w = inv.mul_vec(&self.unit);
        (self.mul(&w, a) == self.unit).then_some(w)
    }

    pub fn pow(&self, a: &[FieldElement], k: u64) -> Vec<FieldElement> {
        let mut acc = self.unit.clone();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    fn digits(&self, mut idx: usize, k: usize) -> Vec<usize> {
        let mut out = vec![0; k];
        for t in (0..k).rev() {
            out[t] = idx % self.dim;
            idx /= self.dim;
        }
        out
    }

    fn undigits(&self, ds: &[usize]) -> usize {
        ds.iter().fold(0, |acc, &x| acc * self.dim + x)
    }

    /// Product in `H^{⊗k}`.
    pub fn tensor_mul(&self, k: usize, a: &SparseRow, b: &SparseRow) -> SparseRow {
        let d = self.dim;
        let mut acc: Vec<(usize, FieldElement)> = Vec::new();
        for (ia, x) in a {
            let da = self.digits(*ia, k);
            for (ib, y) in b {
                let db = self.digits(*ib, k);
                let mut partial: Vec<(usize, FieldElement)> = vec![(0, x * y)];
                for t in 0..k {
                    let p = &self.mult[da[t] * d + db[t]];
                    if p.is_empty() {
                        partial.clear();
                        break;
                    }
                    partial = partial
                        .iter()
                        .flat_map(|(idx, c)| p.iter().map(move |(m, z)| (idx * d + m, c * z)))
                        .collect();
                }
                acc.extend(partial);
            }
        }
        compress_row(self.spec, acc)
    }

    /// `1^{⊗k}`.
    pub fn tensor_unit(&self, k: usize) -> SparseRow {
        let u = sparse_from_dense(&self.unit);
        (1..k).fold(u.clone(), |acc, _| tensor_rows(self.dim, &acc, &u))
    }

    /// Applies `Δ` to leg `pos` of a `k`-leg tensor.
    pub fn comult_leg(&self, x: &SparseRow, k: usize, pos: usize) -> SparseRow {
        let d = self.dim;
        let mut acc = Vec::new();
        for (idx, c) in x {
            let ds = self.digits(*idx, k);
            for (jk, z) in &self.comult[ds[pos]] {
                let mut nd = ds.clone();
                nd[pos] = jk % d;
                nd.insert(pos, jk / d);
                acc.push((self.undigits(&nd), c * z));
            }
        }
        compress_row(self.spec, acc)
    }

    /// Inserts `1` as a new leg at position `pos` of a `k`-leg tensor.
    pub fn insert_unit_leg(&self, x: &SparseRow, k: usize, pos: usize) -> SparseRow {
        let mut acc = Vec::new();
        for (idx, c) in x {
            let ds = self.digits(*idx, k);
            for (u, z) in self.unit.iter().enumerate() {
                if z.is_zero() {
                    continue;
                }
                let mut nd = ds.clone();
                nd.insert(pos, u);
                acc.push((self.undigits(&nd), c * z));
            }
        }
        compress_row(self.spec, acc)
    }

    /// Permutes legs: leg `t` of the result is leg `perm[t]` of `x`.
    pub fn permute_legs(&self, x: &SparseRow, perm: &[usize]) -> SparseRow {
        let k = perm.len();
        let acc = x
            .iter()
            .map(|(idx, c)| {
                let ds = self.digits(*idx, k);
                let nd: Vec<usize> = perm.iter().map(|&p| ds[p]).collect();
                (self.undigits(&nd), c.clone())
            })
            .collect();
        compress_row(self.spec, acc)
    }

    /// Applies a linear map `H → H` (as a matrix acting on coefficient vectors) to one leg.
    pub fn map_leg(&self, x: &SparseRow, k: usize, pos: usize, map: &Matrix) -> SparseRow {
        let columns: Vec<Vec<(usize, FieldElement)>> = (0..self.dim)
            .map(|i| sparse_from_dense(&map.column(i)))
            .collect();
        let mut acc = Vec::new();
        for (idx, c) in x {
            let ds = self.digits(*idx, k);
            for (j, z) in &columns[ds[pos]] {
                let mut nd = ds.clone();
                nd[pos] = *j;
                acc.push((self.undigits(&nd), c * z));
            }
        }
        compress_row(self.spec, acc)
    }

    /// `Σ a_1 ⋯ a_k` for a `k`-leg tensor (multiplication in order).
    pub fn multiply_legs(&self, x: &SparseRow, k: usize) -> Vec<FieldElement> {
        let mut out = self.zero();
        for (idx, c) in x {
            let ds = self.digits(*idx, k);
            let mut p = self.basis_element(ds[0]);
            for &t in &ds[1..] {
                p = self.mul(&p, &self.basis_element(t));
            }
            for (o, y) in out.iter_mut().zip(p) {
                if !y.is_zero() {
                    *o = &*o + &(c * &y);
                }
            }
        }
        out
    }

    /// `R_21 R`, the element acting as the monodromy.
    pub fn monodromy_element(&self) -> Result<SparseRow> {
        let r = self.r_matrix.as_ref().ok_or(Error::MissingRMatrix)?;
        let r21 = self.permute_legs(r, &[1, 0]);
        Ok(self.tensor_mul(2, &r21, r))
    }

    /// The Drinfeld element `u = Σ S(r_2) r_1`.
    pub fn drinfeld_element(&self) -> Result<Vec<FieldElement>> {
        let r = self.r_matrix.as_ref().ok_or(Error::MissingRMatrix)?;
        let sr = self.map_leg(r, 2, 1, &self.antipode);
        Ok(self.multiply_legs(&self.permute_legs(&sr, &[1, 0]), 2))
    }

    // ---------------------------------------------------------------------
    // structure

    pub fn is_commutative(&self) -> Predicate {
        let d = self.dim;
        for i in 0..d {
            for j in i + 1..d {
                if self.mult[i * d + j] != self.mult[j * d + i] {
                    return Predicate::no(format!(
                        "{} * {} != {} * {}",
                        self.basis_labels[i], self.basis_labels[j], self.basis_labels[j], self.basis_labels[i]
                    ));
                }
            }
        }
        Predicate::yes()
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim).all(|i| self.permute_legs(&self.comult[i], &[1, 0]) == self.comult[i])
    }

    /// Basis indices generating `H` as an algebra: the declared set, or a greedy one.
    pub fn generators(&self) -> Vec<usize> {
        match &self.generators {
            Some(g) => g.clone(),
            None => self.find_generators(),
        }
    }

    /// Greedy generating set: adds basis vectors not yet in the generated subalgebra.
    pub fn find_generators(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut closure = self.subalgebra_closure(&gens);
        for i in 0..self.dim {
            if closure.dim() == self.dim {
                break;
            }
            if !closure.contains(&self.basis_element(i)) {
                gens.push(i);
                closure = self.subalgebra_closure(&gens);
            }
        }
        gens
    }

    /// Subalgebra generated by the given basis elements.
    pub fn subalgebra_closure(&self, gens: &[usize]) -> Subspace {
        let mut red = RowReducer::new(self.spec, self.dim);
        let mut found: Vec<Vec<FieldElement>> = Vec::new();
        let mut queue = vec![self.unit.clone()];
        while let Some(v) = queue.pop() {
            if red.insert(sparse_from_dense(&v)) {
                for &g in gens {
                    queue.push(self.mul(&v, &self.basis_element(g)));
                }
                found.push(v);
            }
        }
        Subspace::span(self.spec, self.dim, &found)
    }

    /// Left and right integrals as subspaces of `H`.
    pub fn integrals(&self) -> Result<(Subspace, Subspace)> {
        let d = self.dim;
        let gens = self.generators();
        let mut left = RowReducer::new(self.spec, d);
        let mut right = RowReducer::new(self.spec, d);
        for &g in &gens {
            let e = Matrix::scalar(d, &self.counit[g]);
            let a = self.basis_element(g);
            for r in self.left_mult_matrix(&a).sub(&e).to_dense() {
                left.insert(sparse_from_dense(&r));
            }
            for r in self.right_mult_matrix(&a).sub(&e).to_dense() {
                right.insert(sparse_from_dense(&r));
            }
        }
        let (l, r) = (left.kernel(), right.kernel());
        for s in [&l, &r] {
            if s.dim() != 1 {
                return Err(Error::IntegralSpaceNotOneDimensional(s.dim()));
            }
        }
        Ok((l, r))
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        let (l, r) = self.integrals()?;
        Ok(l.same_space(&r))
    }

    /// Matrix of the Drinfeld map `f ↦ (f ⊗ id)(R_21 R)`: row `i` is the image of `e^i`.
    pub fn drinfeld_map_matrix(&self) -> Result<Matrix> {
        let q = self.monodromy_element()?;
        let d = self.dim;
        Ok(Matrix::from_triplets(self.spec, d, d, q.iter().map(|(ij, c)| (ij / d, ij % d, c.clone()))))
    }

    pub fn is_factorizable(&self) -> Result<Predicate> {
        let m = self.drinfeld_map_matrix()?;
        let rank = m.rank();
        Ok(if rank == self.dim {
            Predicate::yes()
        } else {
            Predicate::no(format!("Drinfeld map has rank {rank} < {}", self.dim))
        })
    }

    /// Radical of the trace form of the regular representation; equals the Jacobson
    /// radical in characteristic zero.
    pub fn jacobson_radical(&self) -> Subspace {
        let d = self.dim;
        let traces: Vec<FieldElement> = (0..d)
            .map(|k| {
                (0..d).fold(FieldElement::zero(self.spec), |acc, i| {
                    let row = &self.mult[k * d + i];
                    match row.binary_search_by_key(&i, |(c, _)| *c) {
                        Ok(p) => &acc + &row[p].1,
                        Err(_) => acc,
                    }
                })
            })
            .collect();
        let gram = Matrix::from_triplets(
            self.spec,
            d,
            d,
            (0..d * d).filter_map(|ab| {
                let v = self.mult[ab]
                    .iter()
                    .fold(FieldElement::zero(self.spec), |acc, (k, c)| &acc + &(c * &traces[*k]));
                (!v.is_zero()).then_some((ab / d, ab % d, v))
            }),
        );
        gram.kernel_subspace()
    }

    pub fn is_semisimple(&self) -> bool {
        self.jacobson_radical().dim() == 0
    }

    /// Order certificate of `L_v`; equals the multiplicative order of `v`.
    pub fn ribbon_order(&self) -> Result<OrderCertificate> {
        let v = self.ribbon.as_ref().ok_or(Error::MissingRibbon)?;
        operator_order(&self.left_mult_matrix(v))
    }

    /// Grouplike elements `Δ(g) = g ⊗ g`, `ε(g) = 1` (those defined over the base field).
    pub fn grouplikes(&self) -> Vec<Vec<FieldElement>> {
        let d = self.dim;
        // g is a joint eigenvector of T_j(h) = Σ h_1 e^j(h_2) with eigenvalue g_j
        let mats: Vec<Matrix> = (0..d)
            .map(|j| {
                Matrix::from_triplets(
                    self.spec,
                    d,
                    d,
                    (0..d).flat_map(|i| {
                        self.comult[i]
                            .iter()
                            .filter(move |(pq, _)| pq % d == j)
                            .map(move |(pq, c)| (pq / d, i, c.clone()))
                    }),
                )
            })
            .collect();
        let mut out: Vec<Vec<FieldElement>> = joint_eigenvectors(self.spec, d, &mats)
            .into_iter()
            .filter_map(|w| {
                let e = self.counit_of(&w);
                let g: Vec<FieldElement> = w.iter().map(|x| x / &e).collect();
                (!e.is_zero() && self.is_grouplike(&g)).then_some(g)
            })
            .collect();
        out.sort_by_key(|g| g.iter().map(ToString::to_string).collect::<Vec<_>>());
        out.dedup();
        out
    }

    pub fn is_grouplike(&self, g: &[FieldElement]) -> bool {
        let sg = sparse_from_dense(g);
        self.counit_of(g).is_one() && self.comult_of(g) == tensor_rows(self.dim, &sg, &sg)
    }

    /// Characters `χ: H → k` (one-dimensional modules) defined over the base field.
    pub fn characters(&self) -> Vec<Vec<FieldElement>> {
        let d = self.dim;
        let mats: Vec<Matrix> = self
            .generators()
            .iter()
            .map(|&g| self.left_mult_matrix(&self.basis_element(g)).transpose())
            .collect();
        let mut out: Vec<Vec<FieldElement>> = joint_eigenvectors(self.spec, d, &mats)
            .into_iter()
            .filter_map(|w| {
                let e = dot(self.spec, &w, &self.unit);
                if e.is_zero() {
                    return None;
                }
                let chi: Vec<FieldElement> = w.iter().map(|x| x / &e).collect();
                self.is_character(&chi).then_some(chi)
            })
            .collect();
        out.sort_by_key(|g| g.iter().map(ToString::to_string).collect::<Vec<_>>());
        out.dedup();
        out
    }

    pub fn is_character(&self, chi: &[FieldElement]) -> bool {
        let d = self.dim;
        dot(self.spec, chi, &self.unit).is_one()
            && (0..d * d).all(|ij| {
                let lhs = self.mult[ij].iter().fold(FieldElement::zero(self.spec), |acc, (k, c)| &acc + &(c * &chi[*k]));
                lhs == &chi[ij / d] * &chi[ij % d]
            })
    }

    /// Searches ribbon elements among `l u^{-1}` and `u l` for grouplikes `l`; every such
    /// candidate is checked against the ribbon axioms. Since `u v^{-1}` is grouplike for
    /// any ribbon `v`, the search is exhaustive when all grouplikes are defined over the
    /// base field.
    pub fn find_ribbon(&self) -> Result<Vec<FieldElement>> {
        self.ribbon_candidates()?
            .into_iter()
            .find(|v| self.check_ribbon(v).iter().all(|a| a.passed))
            .ok_or(Error::NoRibbonFound)
    }

    pub fn ribbon_candidates(&self) -> Result<Vec<Vec<FieldElement>>> {
        let u = self.drinfeld_element()?;
        let u_inv = self.inverse_of(&u).ok_or(Error::NotInvertible)?;
        let mut out = Vec::new();
        for l in self.grouplikes() {
            out.push(self.mul(&l, &u_inv));
            out.push(self.mul(&u, &l));
        }
        Ok(out)
    }

    // ---------------------------------------------------------------------
    // validation

    pub fn validate(&self) -> StructureReport {
        self.validate_with(CheckMode::Auto)
    }

    pub fn validate_with(&self, mode: CheckMode) -> StructureReport {
        let mode = match mode {
            CheckMode::Auto if self.dim >= GENERATOR_MODE_DIM => CheckMode::Generators,
            CheckMode::Auto => CheckMode::Full,
            m => m,
        };
        let d = self.dim;
        let algebra_indices: Vec<usize> = match mode {
            CheckMode::Generators => self.generators(),
            _ => (0..d).collect(),
        };
        let mut axioms = vec![
            self.check_associativity(),
            self.check_unit(),
            self.check_coassociativity(),
            self.check_counit(),
            self.check_comult_multiplicative(&algebra_indices),
            self.check_counit_multiplicative(&algebra_indices),
            self.check_antipode(),
        ];
        if self.r_matrix.is_some() {
            axioms.extend(self.check_quasitriangular(&algebra_indices));
        }
        if let Some(v) = &self.ribbon {
            axioms.extend(self.check_ribbon_with(v, &algebra_indices));
        }
        let hopf_ok = axioms.iter().take(7).all(|a| a.passed);
        let is_unimodular = if hopf_ok {
            match self.is_unimodular() {
                Ok(true) => Predicate::yes(),
                Ok(false) => Predicate::no("left and right integrals differ".to_string()),
                Err(e) => Predicate::no(e.to_string()),
            }
        } else {
            Predicate::no("Hopf axioms fail".to_string())
        };
        let is_factorizable = self.r_matrix.as_ref().map(|_| self.is_factorizable().expect("R present"));
        StructureReport {
            algebra: self.name.clone(),
            dim: d,
            mode,
            axioms,
            is_commutative: self.is_commutative(),
            is_unimodular,
            is_factorizable,
        }
    }

    fn check_associativity(&self) -> AxiomCheck {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let ij = &self.mult[i * d + j];
                for k in 0..d {
                    let lhs = self.tensor_mul(1, ij, &vec![(k, FieldElement::one(self.spec))]);
                    let rhs = self.tensor_mul(1, &vec![(i, FieldElement::one(self.spec))], &self.mult[j * d + k]);
                    if lhs != rhs {
                        return AxiomCheck::fail("associativity", vec![i, j, k]);
                    }
                }
            }
        }
        AxiomCheck::pass("associativity")
    }

    fn check_unit(&self) -> AxiomCheck {
        let u = sparse_from_dense(&self.unit);
        for i in 0..self.dim {
            let e = vec![(i, FieldElement::one(self.spec))];
            if self.tensor_mul(1, &u, &e) != e || self.tensor_mul(1, &e, &u) != e {
                return AxiomCheck::fail("unit", vec![i]);
            }
        }
        AxiomCheck::pass("unit")
    }

    fn check_coassociativity(&self) -> AxiomCheck {
        for i in 0..self.dim {
            let c = &self.comult[i];
            if self.comult_leg(c, 2, 0) != self.comult_leg(c, 2, 1) {
                return AxiomCheck::fail("coassociativity", vec![i]);
            }
        }
        AxiomCheck::pass("coassociativity")
    }

    fn check_counit(&self) -> AxiomCheck {
        let d = self.dim;
        for i in 0..d {
            let mut left = self.zero();
            let mut right = self.zero();
            for (jk, c) in &self.comult[i] {
                let (j, k) = (jk / d, jk % d);
                left[k] = &left[k] + &(c * &self.counit[j]);
                right[j] = &right[j] + &(c * &self.counit[k]);
            }
            let e = self.basis_element(i);
            if left != e || right != e {
                return AxiomCheck::fail("counit", vec![i]);
            }
        }
        AxiomCheck::pass("counit")
    }

    fn check_comult_multiplicative(&self, left_indices: &[usize]) -> AxiomCheck {
        let d = self.dim;
        let name = "comultiplication is an algebra map";
        if self.comult_of(&self.unit) != self.tensor_unit(2) {
            return AxiomCheck::fail(name, vec![]).with_detail("Δ(1) != 1 ⊗ 1");
        }
        for &i in left_indices {
            for j in 0..d {
                let lhs = self.comult_of(&dense_from_sparse(self.spec, d, &self.mult[i * d + j]));
                let rhs = self.tensor_mul(2, &self.comult[i], &self.comult[j]);
                if lhs != rhs {
                    return AxiomCheck::fail(name, vec![i, j]);
                }
            }
        }
        AxiomCheck::pass(name)
    }

    fn check_counit_multiplicative(&self, left_indices: &[usize]) -> AxiomCheck {
        let d = self.dim;
        let name = "counit is an algebra map";
        if !self.counit_of(&self.unit).is_one() {
            return AxiomCheck::fail(name, vec![]).with_detail("ε(1) != 1");
        }
        for &i in left_indices {
            for j in 0..d {
                let lhs = self.counit_of(&dense_from_sparse(self.spec, d, &self.mult[i * d + j]));
                if lhs != &self.counit[i] * &self.counit[j] {
                    return AxiomCheck::fail(name, vec![i, j]);
                }
            }
        }
        AxiomCheck::pass(name)
    }

    fn check_antipode(&self) -> AxiomCheck {
        let d = self.dim;
        for i in 0..d {
            let c = &self.comult[i];
            let expect: Vec<FieldElement> = self.unit.iter().map(|u| u * &self.counit[i]).collect();
            let left = self.multiply_legs(&self.map_leg(c, 2, 0, &self.antipode), 2);
            let right = self.multiply_legs(&self.map_leg(c, 2, 1, &self.antipode), 2);
            if left != expect || right != expect {
                return AxiomCheck::fail("antipode", vec![i]);
            }
        }
        AxiomCheck::pass("antipode")
    }

    fn r_inverse(&self, r: &SparseRow) -> Option<SparseRow> {
        let one = self.tensor_unit(2);
        // standard candidate (S ⊗ id)(R), then a linear solve
        let cand = self.map_leg(r, 2, 0, &self.antipode);
        if self.tensor_mul(2, r, &cand) == one && self.tensor_mul(2, &cand, r) == one {
            return Some(cand);
        }
        let d2 = self.dim * self.dim;
        let cols: Vec<Vec<FieldElement>> = (0..d2)
            .map(|k| dense_from_sparse(self.spec, d2, &self.tensor_mul(2, r, &vec![(k, FieldElement::one(self.spec))])))
            .collect();
        let lr = Matrix::from_columns(self.spec, d2, &cols);
        let inv = lr.inverse().ok()?;
        let w = sparse_from_dense(&inv.mul_vec(&dense_from_sparse(self.spec, d2, &one)));
        (self.tensor_mul(2, &w, r) == one).then_some(w)
    }

    fn check_quasitriangular(&self, indices: &[usize]) -> Vec<AxiomCheck> {
        let r = self.r_matrix.as_ref().expect("checked by caller");
        let mut out = Vec::new();
        out.push(match self.r_inverse(r) {
            Some(_) => AxiomCheck::pass("R invertible"),
            None => AxiomCheck::fail("R invertible", vec![]),
        });
        let mut qc = AxiomCheck::pass("Δ^op(a) R = R Δ(a)");
        for &i in indices {
            let delta = &self.comult[i];
            let op = self.permute_legs(delta, &[1, 0]);
            if self.tensor_mul(2, &op, r) != self.tensor_mul(2, r, delta) {
                qc = AxiomCheck::fail("Δ^op(a) R = R Δ(a)", vec![i]);
                break;
            }
        }
        out.push(qc);
        let r13 = self.insert_unit_leg(r, 2, 1);
        let r23 = self.insert_unit_leg(r, 2, 0);
        let r12 = self.insert_unit_leg(r, 2, 2);
        let lhs1 = self.comult_leg(r, 2, 0);
        out.push(check_eq("(Δ ⊗ id)R = R_13 R_23", lhs1 == self.tensor_mul(3, &r13, &r23)));
        let lhs2 = self.comult_leg(r, 2, 1);
        out.push(check_eq("(id ⊗ Δ)R = R_13 R_12", lhs2 == self.tensor_mul(3, &r13, &r12)));
        out
    }

    /// Ribbon axioms for a candidate `v`, with the full basis for centrality.
    pub fn check_ribbon(&self, v: &[FieldElement]) -> Vec<AxiomCheck> {
        self.check_ribbon_with(v, &(0..self.dim).collect::<Vec<_>>())
    }

    fn check_ribbon_with(&self, v: &[FieldElement], indices: &[usize]) -> Vec<AxiomCheck> {
        let mut out = Vec::new();
        let mut central = AxiomCheck::pass("v central");
        for &i in indices {
            let e = self.basis_element(i);
            if self.mul(v, &e) != self.mul(&e, v) {
                central = AxiomCheck::fail("v central", vec![i]);
                break;
            }
        }
        out.push(central);
        out.push(check_eq("v invertible", self.inverse_of(v).is_some()));
        out.push(check_eq("ε(v) = 1", self.counit_of(v).is_one()));
        out.push(check_eq("S(v) = v", self.antipode_of(v) == v));
        let balanced = match self.monodromy_element() {
            Ok(q) => {
                let sv = sparse_from_dense(v);
                let vv = tensor_rows(self.dim, &sv, &sv);
                self.comult_of(v) == self.tensor_mul(2, &q, &vv)
            }
            Err(_) => false,
        };
        out.push(check_eq("Δ(v) = (R_21 R)(v ⊗ v)", balanced));
        out
    }

    // ---------------------------------------------------------------------
    // Drinfeld double

    /// `D(H)` on the basis `e^f ⊗ e_a` (index `f * dim + a`), with
    /// `(f ⊗ a)(f' ⊗ b) = Σ f (a_1 ⇀ f' ↼ S^{-1}(a_3)) ⊗ a_2 b`,
    /// `Δ(f ⊗ a) = Σ (f_2 ⊗ a_1) ⊗ (f_1 ⊗ a_2)` and `R = Σ_i (ε ⊗ e_i) ⊗ (e^i ⊗ 1)`.
    pub fn drinfeld_double(&self) -> Result<HopfData> {
        let spec = self.spec;
        let d = self.dim;
        let s_inv = self.antipode.inverse().map_err(|_| Error::AntipodeNotInvertible)?;
        let idx = |f: usize, a: usize| f * d + a;
        // dual multiplication: e^f e^g = Σ_x [coeff of e_f ⊗ e_g in Δ(e_x)] e^x
        let mut dual_mult: BTreeMap<(usize, usize), SparseRow> = BTreeMap::new();
        for x in 0..d {
            for (fg, c) in &self.comult[x] {
                dual_mult.entry((fg / d, fg % d)).or_default().push((x, c.clone()));
            }
        }
        let dual_prod = |f: usize, g: usize| -> SparseRow {
            dual_mult.get(&(f, g)).map(|r| compress_row(spec, r.clone())).unwrap_or_default()
        };
        // dual unit ε, dual counit evaluation at 1
        let eps = sparse_from_dense(&self.counit);
        // conj[p][q][f'] = the functional x ↦ e^{f'}(S^{-1}(e_q) x e_p)
        let sinv_cols: Vec<Vec<FieldElement>> = (0..d).map(|q| s_inv.column(q)).collect();
        let conj_matrix = |p: usize, q: usize| -> Matrix {
            // x ↦ S^{-1}(e_q) x e_p as a matrix
            let l = self.left_mult_matrix(&sinv_cols[q]);
            let r = self.right_mult_matrix(&self.basis_element(p));
            l.mul(&r)
        };
        let mut conj_cache: BTreeMap<(usize, usize), Matrix> = BTreeMap::new();
        let mut mult = Vec::new();
        for a in 0..d {
            let triple = self.comult_leg(&self.comult[a], 2, 0);
            let terms: Vec<(usize, usize, usize, FieldElement)> = triple
                .iter()
                .map(|(pmq, c)| {
                    let ds = self.digits(*pmq, 3);
                    (ds[0], ds[1], ds[2], c.clone())
                })
                .collect();
            for (p, _, q, _) in &terms {
                conj_cache.entry((*p, *q)).or_insert_with(|| conj_matrix(*p, *q));
            }
            for f in 0..d {
                for fp in 0..d {
                    for b in 0..d {
                        let mut acc: Vec<(usize, FieldElement)> = Vec::new();
                        for (p, m, q, c) in &terms {
                            let cm = &conj_cache[&(*p, *q)];
                            let mb = &self.mult[m * d + b];
                            if mb.is_empty() {
                                continue;
                            }
                            for (x, z) in cm.row(fp) {
                                for (y, w) in dual_prod(f, *x) {
                                    for (k, t) in mb {
                                        acc.push((idx(y, *k), c * &(z * &(&w * t))));
                                    }
                                }
                            }
                        }
                        for (k, coeff) in compress_row(spec, acc) {
                            mult.push((idx(f, a), idx(fp, b), k, coeff));
                        }
                    }
                }
            }
        }
        let unit_d: Vec<FieldElement> = {
            let mut u = vec![FieldElement::zero(spec); d * d];
            for (f, x) in &eps {
                for (a, y) in self.unit.iter().enumerate() {
                    if !y.is_zero() {
                        u[idx(*f, a)] = x * y;
                    }
                }
            }
            u
        };
        // Δ_{H*}(e^f) = Σ_{g,h} [coeff of e_f in e_g e_h] e^g ⊗ e^h
        let mut dual_comult: Vec<Vec<(usize, usize, FieldElement)>> = vec![Vec::new(); d];
        for gh in 0..d * d {
            for (f, c) in &self.mult[gh] {
                dual_comult[*f].push((gh / d, gh % d, c.clone()));
            }
        }
        let mut comult = Vec::new();
        for f in 0..d {
            for a in 0..d {
                for (f1, f2, c) in &dual_comult[f] {
                    for (a12, z) in &self.comult[a] {
                        let (a1, a2) = (a12 / d, a12 % d);
                        comult.push((idx(f, a), idx(*f2, a1), idx(*f1, a2), c * z));
                    }
                }
            }
        }
        let counit: Vec<FieldElement> = (0..d * d)
            .map(|fa| {
                let (f, a) = (fa / d, fa % d);
                &dot(spec, &self.basis_element(f), &self.unit) * &self.counit[a]
            })
            .collect();
        // S(f ⊗ a) = (ε ⊗ S(a)) ((f ∘ S^{-1}) ⊗ 1)
        let mut antipode = Vec::new();
        let table = mult_table(spec, &mult, d * d);
        let unit_sparse = sparse_from_dense(&self.unit);
        for f in 0..d {
            // f ∘ S^{-1} = Σ_x e^f(S^{-1} e_x) e^x
            let f_sinv: SparseRow = (0..d)
                .filter_map(|x| {
                    let c = s_inv.get(f, x);
                    (!c.is_zero()).then_some((x, c))
                })
                .collect();
            for a in 0..d {
                let sa = sparse_from_dense(&self.antipode.column(a));
                let left: SparseRow =
                    compress_row(spec, eps.iter().flat_map(|(e, x)| sa.iter().map(move |(j, y)| (idx(*e, *j), x * y))).collect());
                let right: SparseRow = compress_row(
                    spec,
                    f_sinv.iter().flat_map(|(g, x)| unit_sparse.iter().map(move |(j, y)| (idx(*g, *j), x * y))).collect(),
                );
                let prod = multiply_with(spec, d * d, &table, &left, &right);
                for (k, c) in prod {
                    antipode.push((idx(f, a), k, c));
                }
            }
        }
        let mut r_entries = Vec::new();
        for i in 0..d {
            for (e, x) in &eps {
                for (u, y) in &unit_sparse {
                    r_entries.push((idx(*e, i), idx(i, *u), x * y));
                }
            }
        }
        let labels = (0..d * d)
            .map(|fa| format!("{}*⊗{}", self.basis_labels[fa / d], self.basis_labels[fa % d]))
            .collect();
        HopfData::new(HopfParts {
            name: format!("double:{}", self.name),
            spec,
            basis_labels: labels,
            mult,
            unit: unit_d,
            comult,
            counit,
            antipode,
            r_matrix: Some(r_entries),
            ribbon: None,
            generators: None,
            simple_characters: Vec::new(),
        })
    }
}

fn mult_table(spec: FieldSpec, entries: &[(usize, usize, usize, FieldElement)], n: usize) -> Vec<SparseRow> {
    let mut t = vec![Vec::new(); n * n];
    for (i, j, k, c) in entries {
        t[i * n + j].push((*k, c.clone()));
    }
    t.into_iter().map(|r| compress_row(spec, r)).collect()
}

fn multiply_with(spec: FieldSpec, n: usize, table: &[SparseRow], a: &SparseRow, b: &SparseRow) -> SparseRow {
    let mut acc = Vec::new();
    for (i, x) in a {
        for (j, y) in b {
            for (k, c) in &table[i * n + j] {
                acc.push((*k, &(x * y) * c));
            }
        }
    }
    compress_row(spec, acc)
}

/// `a ⊗ b` for sparse tensors, where `b` lives in a space of dimension `stride`.
pub fn tensor_rows(stride: usize, a: &SparseRow, b: &SparseRow) -> SparseRow {
    let mut out: SparseRow = a
        .iter()
        .flat_map(|(i, x)| b.iter().map(move |(j, y)| (i * stride + j, x * y)))
        .collect();
    out.sort_by_key(|(i, _)| *i);
    out
}

pub(crate) fn dot(spec: FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter().zip(b).fold(FieldElement::zero(spec), |acc, (x, y)| {
        if x.is_zero() || y.is_zero() {
            acc
        } else {
            &acc + &(x * y)
        }
    })
}

/// Joint eigenvectors of a family of square matrices, with eigenvalues in the base field.
/// Returns a basis of each nonzero joint eigenspace.
fn joint_eigenvectors(spec: FieldSpec, n: usize, mats: &[Matrix]) -> Vec<Vec<FieldElement>> {
    let eigenvalues: Vec<Vec<FieldElement>> = mats.iter().map(|m| roots_in_field(&m.minimal_polynomial())).collect();
    let mut out = Vec::new();
    let mut stack = vec![(0usize, Subspace::whole(spec, n))];
    while let Some((j, w)) = stack.pop() {
        if w.dim() == 0 {
            continue;
        }
        if j == mats.len() {
            out.extend(w.into_basis());
            continue;
        }
        if w.dim() == 1 {
            // a single vector only needs checking
            let v = &w.basis()[0];
            let av = mats[j].mul_vec(v);
            let pivot = w.coord_cols()[0];
            let lambda = av[pivot].clone();
            if av.iter().zip(v).all(|(a, x)| *a == &lambda * x) {
                stack.push((j + 1, w));
            }
            continue;
        }
        for lambda in &eigenvalues[j] {
            let shifted = mats[j].sub(&Matrix::scalar(n, lambda));
            let b = Matrix::from_columns(spec, n, w.basis());
            let k = shifted.mul(&b).kernel();
            if k.is_empty() {
                continue;
            }
            let vecs: Vec<Vec<FieldElement>> = k.iter().map(|c| b.mul_vec(c)).collect();
            stack.push((j + 1, Subspace::span(spec, n, &vecs)));
        }
    }
    out
}

/// Roots of `p` lying in its coefficient field. Over `Q` this is complete (rational root
/// theorem). Over `Q(zeta_n)` only rational roots and roots of the form `±zeta_n^k` are
/// found; over `F_p` roots are found by exhaustion for `p < 2^16`.
pub(crate) fn roots_in_field(p: &Poly) -> Vec<FieldElement> {
    let spec = p.spec();
    let mut candidates: Vec<FieldElement> = vec![FieldElement::zero(spec)];
    match spec {
        FieldSpec::Rational => candidates.extend(rational_root_candidates(p)),
        FieldSpec::Cyclotomic(n) => {
            let z = FieldElement::zeta(n);
            for k in 0..n as u64 {
                let w = z.pow(k);
                candidates.push(-w.clone());
                candidates.push(w);
            }
            if p.coeffs().iter().all(|c| c.to_rational().is_some()) {
                let q = Poly::new(
                    FieldSpec::Rational,
                    p.coeffs().iter().map(|c| FieldElement::Rational(c.to_rational().unwrap())).collect(),
                );
                for r in rational_root_candidates(&q) {
                    candidates.push(FieldElement::from_rational(spec, &r.to_rational().unwrap()).unwrap());
                }
            }
        }
        FieldSpec::Prime(q) if q < 1 << 16 => {
            candidates.extend((1..q as i64).map(|x| FieldElement::from_i64(spec, x)));
        }
        FieldSpec::Prime(_) => {
            candidates.push(FieldElement::one(spec));
            candidates.push(-FieldElement::one(spec));
        }
    }
    candidates.sort_by_key(ToString::to_string);
    candidates.dedup();
    candidates.into_iter().filter(|x| p.eval(x).is_zero()).collect()
}

fn rational_root_candidates(p: &Poly) -> Vec<FieldElement> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_rational::BigRational;
    use num_traits::{Signed, ToPrimitive, Zero};
    let spec = p.spec();
    let qs: Vec<BigRational> = p.coeffs().iter().map(|c| c.to_rational().expect("rational")).collect();
    let lcm = qs.iter().fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
    let mut ints: Vec<BigInt> = qs.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    while ints.first().is_some_and(Zero::is_zero) {
        ints.remove(0);
    }
    if ints.len() < 2 {
        return Vec::new();
    }
    let (a0, an) = (ints[0].abs(), ints[ints.len() - 1].abs());
    let (Some(a0), Some(an)) = (a0.to_u64(), an.to_u64()) else {
        return Vec::new();
    };
    // divisor enumeration is by trial division; bail on huge constants
    if a0 > 1 << 40 || an > 1 << 40 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for num in crate::scalar::divisors(a0) {
        for den in crate::scalar::divisors(an) {
            for sign in [1i64, -1] {
                let q = BigRational::new(BigInt::from(num) * sign, BigInt::from(den));
                out.push(FieldElement::from_rational(spec, &q).expect("rational"));
            }
        }
    }
    out
}

fn check_eq(name: &str, ok: bool) -> AxiomCheck {
    if ok {
        AxiomCheck::pass(name)
    } else {
        AxiomCheck::fail(name, vec![])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckMode {
    /// Full below [`GENERATOR_MODE_DIM`], generators above.
    Auto,
    Full,
    /// Algebra-map and centrality axioms on generators only; all others in full.
    Generators,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    /// Basis indices of a counterexample.
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl AxiomCheck {
    fn pass(name: &str) -> Self {
        AxiomCheck { name: name.to_string(), passed: true, witness: None, detail: None }
    }

    fn fail(name: &str, witness: Vec<usize>) -> Self {
        AxiomCheck { name: name.to_string(), passed: false, witness: Some(witness), detail: None }
    }

    fn with_detail(mut self, d: &str) -> Self {
        self.detail = Some(d.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicate {
    pub value: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl Predicate {
    fn yes() -> Self {
        Predicate { value: true, witness: None }
    }

    fn no(w: String) -> Self {
        Predicate { value: false, witness: Some(w) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub algebra: String,
    pub dim: usize,
    pub mode: CheckMode,
    pub axioms: Vec<AxiomCheck>,
    pub is_commutative: Predicate,
    pub is_unimodular: Predicate,
    pub is_factorizable: Option<Predicate>,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.axioms.iter().all(|a| a.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.axioms.iter().filter(|a| !a.passed)
    }

    pub fn failures_summary(&self) -> String {
        let parts: Vec<String> = self
            .failures()
            .map(|a| match &a.witness {
                Some(w) if !w.is_empty() => format!("{} at {:?}", a.name, w),
                _ => a.name.clone(),
            })
            .collect();
        if parts.is_empty() {
            "none".to_string()
        } else {
            parts.join("; ")
        }
    }
}
