//! The category of finite-dimensional modules over a Hopf algebra.
//!
//! A module stores one action matrix per algebra basis element. Tensor products are
//! Kronecker products in the left-major convention; tensor powers are left-associated.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::HopfData;
use crate::linalg::{Matrix, RowReducer, Subspace};
use crate::scalar::FieldElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleKind {
    Trivial,
    Regular,
    Adjoint,
    Character,
    Dual,
    Tensor,
    Other,
}

#[derive(Debug, Clone)]
pub struct Module {
    algebra: Arc<HopfData>,
    dim: usize,
    action: Arc<Vec<Matrix>>,
    kind: ModuleKind,
}

impl Module {
    /// Wraps action matrices without checking the module axioms; see [`Module::check`].
    pub fn new(algebra: Arc<HopfData>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() || action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("action matrices".into()));
        }
        Ok(Module { algebra, dim, action: Arc::new(action), kind: ModuleKind::Other })
    }

    pub fn algebra(&self) -> &Arc<HopfData> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &ModuleKind {
        &self.kind
    }

    /// `ρ(e_i)`.
    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// `ρ(a)` for an element given by coefficients.
    pub fn act(&self, a: &[FieldElement]) -> Matrix {
        let spec = self.algebra.spec();
        a.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Matrix::zeros(spec, self.dim, self.dim), |acc, (i, c)| acc.add(&self.action[i].scale(c)))
    }

    /// Checks `ρ(e_i) ρ(e_j) = ρ(e_i e_j)` and `ρ(1) = I`; returns a failing pair.
    pub fn check(&self) -> std::result::Result<(), Option<(usize, usize)>> {
        let h = &self.algebra;
        if !self.act(h.unit()).is_identity() {
            return Err(None);
        }
        let d = h.dim();
        for i in 0..d {
            for j in 0..d {
                let prod = self.action[i].mul(&self.action[j]);
                let expect = self.act(&crate::linalg::dense_from_sparse(h.spec(), d, h.product_of_basis(i, j)));
                if prod != expect {
                    return Err(Some((i, j)));
                }
            }
        }
        Ok(())
    }

    fn same_algebra(&self, other: &Module) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra.name() == other.algebra.name() {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }
}

pub fn trivial_module(h: &Arc<HopfData>) -> Module {
    character_module(h, h.counit()).with_kind(ModuleKind::Trivial)
}

/// One-dimensional module of a character `χ`.
pub fn character_module(h: &Arc<HopfData>, chi: &[FieldElement]) -> Module {
    let action = chi.iter().map(|c| Matrix::scalar(1, c)).collect();
    Module { algebra: h.clone(), dim: 1, action: Arc::new(action), kind: ModuleKind::Character }
}

pub fn regular_module(h: &Arc<HopfData>) -> Module {
    let action = (0..h.dim()).map(|i| h.left_mult_matrix(&h.basis_element(i))).collect();
    Module { algebra: h.clone(), dim: h.dim(), action: Arc::new(action), kind: ModuleKind::Regular }
}

/// `ρ^∨(a) = ρ(S(a))^T` on the dual basis.
pub fn dual_module(m: &Module) -> Module {
    let h = &m.algebra;
    let action = (0..h.dim()).map(|i| m.act(&h.antipode().column(i)).transpose()).collect();
    Module { algebra: h.clone(), dim: m.dim, action: Arc::new(action), kind: ModuleKind::Dual }
}

/// `ρ_{M⊗N}(a) = Σ ρ_M(a_1) ⊗ ρ_N(a_2)`.
pub fn tensor_module(m: &Module, n: &Module) -> Result<Module> {
    m.same_algebra(n)?;
    let h = &m.algebra;
    let d = h.dim();
    let action = (0..d)
        .map(|i| {
            let delta = h.comult_of_basis(i);
            delta.iter().fold(Matrix::zeros(h.spec(), m.dim * n.dim, m.dim * n.dim), |acc, (jk, c)| {
                acc.add(&m.action[jk / d].kron(&n.action[jk % d]).scale(c))
            })
        })
        .collect();
    Ok(Module { algebra: h.clone(), dim: m.dim * n.dim, action: Arc::new(action), kind: ModuleKind::Tensor })
}

/// `M^{⊗g}`, left-associated, with `M^{⊗0}` the trivial module.
pub fn tensor_power(m: &Module, g: usize) -> Module {
    match g {
        0 => trivial_module(&m.algebra),
        1 => m.clone(),
        _ => tensor_module(&tensor_power(m, g - 1), m).expect("same algebra"),
    }
}

/// `H` with `a · x = Σ a_1 x S(a_2)`: the canonical end of the module category.
pub fn adjoint_module(h: &Arc<HopfData>) -> Module {
    let d = h.dim();
    let action = (0..d)
        .map(|i| {
            h.comult_of_basis(i).iter().fold(Matrix::zeros(h.spec(), d, d), |acc, (jk, c)| {
                let l = h.left_mult_matrix(&h.basis_element(jk / d));
                let r = h.right_mult_matrix(&h.antipode().column(jk % d));
                acc.add(&l.mul(&r).scale(c))
            })
        })
        .collect();
    Module { algebra: h.clone(), dim: d, action: Arc::new(action), kind: ModuleKind::Adjoint }
}

impl Module {
    fn with_kind(mut self, kind: ModuleKind) -> Self {
        self.kind = kind;
        self
    }
}

/// Intertwiners `F: source → target` as `target.dim × source.dim` matrices.
#[derive(Debug, Clone)]
pub struct HomSpace {
    source_dim: usize,
    target_dim: usize,
    /// Row-major vectorizations of the basis matrices.
    space: Subspace,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn basis_matrix(&self, k: usize) -> Matrix {
        vector_to_matrix(&self.space.basis()[k], self.target_dim, self.source_dim)
    }

    pub fn basis(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|k| self.basis_matrix(k)).collect()
    }

    pub fn contains(&self, f: &Matrix) -> bool {
        f.rows() == self.target_dim && f.cols() == self.source_dim && self.space.contains(&matrix_to_vector(f))
    }

    /// Coordinates of an intertwiner in the basis.
    pub fn coordinates(&self, f: &Matrix) -> Vec<FieldElement> {
        self.space.coordinates(&matrix_to_vector(f))
    }

    /// Matrix of a linear map `Hom(M, N) → Hom(M, N)` on the basis. `op` must preserve
    /// the space (checked).
    pub fn induced_operator(&self, op: impl Fn(&Matrix) -> Matrix) -> Result<Matrix> {
        let spec = self.space.spec();
        let mut cols = Vec::with_capacity(self.dim());
        for k in 0..self.dim() {
            let image = op(&self.basis_matrix(k));
            let v = matrix_to_vector(&image);
            if !self.space.contains(&v) {
                return Err(Error::DimensionMismatch("operator leaves the intertwiner space".into()));
            }
            cols.push(self.space.coordinates(&v));
        }
        Ok(Matrix::from_columns(spec, self.dim(), &cols))
    }
}

pub(crate) fn matrix_to_vector(f: &Matrix) -> Vec<FieldElement> {
    f.to_dense().into_iter().flatten().collect()
}

pub(crate) fn vector_to_matrix(v: &[FieldElement], rows: usize, cols: usize) -> Matrix {
    let spec = v.first().map(FieldElement::spec).unwrap_or(crate::scalar::FieldSpec::Rational);
    Matrix::from_triplets(
        spec,
        rows,
        cols,
        v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k / cols, k % cols, x.clone())),
    )
}

/// Solves `F ρ_M(g) = ρ_N(g) F` over the generators of the algebra.
pub fn hom_space(m: &Module, n: &Module) -> Result<HomSpace> {
    m.same_algebra(n)?;
    let spec = m.algebra.spec();
    let (a, b) = (m.dim, n.dim);
    let mut red = RowReducer::new(spec, a * b);
    for g in m.algebra.generators() {
        // vec(F A) - vec(B F) = (I ⊗ A^T - B ⊗ I) vec(F)
        let sys = Matrix::identity(spec, b).kron(&m.action[g].transpose()).sub(&n.action[g].kron(&Matrix::identity(spec, a)));
        for r in 0..sys.rows() {
            let row = sys.row(r);
            if !row.is_empty() {
                red.insert(row.to_vec());
            }
        }
    }
    Ok(HomSpace { source_dim: a, target_dim: b, space: red.kernel() })
}

/// `flip ∘ (ρ_M ⊗ ρ_N)(R): M ⊗ N → N ⊗ M`.
pub fn braiding(m: &Module, n: &Module) -> Result<Matrix> {
    m.same_algebra(n)?;
    let h = &m.algebra;
    let r = h.r_matrix().ok_or(Error::MissingRMatrix)?;
    Ok(flip(m.algebra.spec(), m.dim, n.dim).mul(&act2(m, n, r)))
}

/// `(ρ_M ⊗ ρ_N)(R_21 R)`, which equals `c_{N,M} c_{M,N}`.
pub fn monodromy(m: &Module, n: &Module) -> Result<Matrix> {
    m.same_algebra(n)?;
    let q = m.algebra.monodromy_element()?;
    Ok(act2(m, n, &q))
}

/// `(ρ_M ⊗ ρ_N)(X)` for `X ∈ H ⊗ H`.
pub fn act2(m: &Module, n: &Module, x: &[(usize, FieldElement)]) -> Matrix {
    let d = m.algebra.dim();
    let spec = m.algebra.spec();
    x.iter().fold(Matrix::zeros(spec, m.dim * n.dim, m.dim * n.dim), |acc, (ij, c)| {
        acc.add(&m.action[ij / d].kron(&n.action[ij % d]).scale(c))
    })
}

/// The permutation `M ⊗ N → N ⊗ M`.
pub fn flip(spec: crate::scalar::FieldSpec, a: usize, b: usize) -> Matrix {
    Matrix::from_triplets(spec, a * b, a * b, (0..a).flat_map(|i| (0..b).map(move |j| (j * a + i, i * b + j, FieldElement::one(spec)))))
}

/// `θ_M = ρ_M(v)`.
pub fn twist(m: &Module) -> Result<Matrix> {
    let v = m.algebra.ribbon().ok_or(Error::MissingRibbon)?;
    Ok(m.act(v))
}

/// Whether `M` double-braids trivially with the regular module (a projective generator).
pub fn muger_central(m: &Module) -> Result<bool> {
    Ok(monodromy(m, &regular_module(&m.algebra))?.is_identity())
}

/// Vector space with commuting left and right actions of an algebra, given on a
/// generating set.
#[derive(Debug, Clone)]
pub struct Bimodule {
    pub dim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

impl Bimodule {
    /// `H` acting on itself by left and right multiplication (using generators).
    pub fn regular(h: &HopfData) -> Self {
        let gens = h.generators();
        Bimodule {
            dim: h.dim(),
            left: gens.iter().map(|&g| h.left_mult_matrix(&h.basis_element(g))).collect(),
            right: gens.iter().map(|&g| h.right_mult_matrix(&h.basis_element(g))).collect(),
        }
    }

    pub fn check(&self) -> Result<()> {
        for l in &self.left {
            for r in &self.right {
                if l.mul(r) != r.mul(l) {
                    return Err(Error::ActionsDoNotCommute);
                }
            }
        }
        Ok(())
    }
}

/// `{m : t·m = m·t for all generators t}`.
pub fn relative_center(b: &Bimodule) -> Result<Subspace> {
    b.check()?;
    Ok(relative_center_unchecked(b))
}

pub(crate) fn relative_center_unchecked(b: &Bimodule) -> Subspace {
    let spec = b.left.first().map(Matrix::spec).unwrap_or(crate::scalar::FieldSpec::Rational);
    let mut red = RowReducer::new(spec, b.dim);
    for (l, r) in b.left.iter().zip(&b.right) {
        let diff = l.sub(r);
        for i in 0..diff.rows() {
            if !diff.row(i).is_empty() {
                red.insert(diff.row(i).to_vec());
            }
        }
    }
    red.kernel()
}

/// Rank of the evaluation `Hom(M, N) ⊗ M → N`, `F ⊗ x ↦ F x`; it is a monomorphism iff
/// the rank is `dim Hom(M, N) · dim M`.
pub fn evaluation_rank(hom: &HomSpace) -> usize {
    let spec = hom.space.spec();
    let mut red = RowReducer::new(spec, hom.target_dim);
    for f in hom.basis() {
        let t = f.transpose();
        for j in 0..hom.source_dim {
            red.insert(t.row(j).to_vec());
        }
    }
    red.rank()
}

/// Whether every basis intertwiner commutes with the twists: `F θ_M = θ_N F`.
pub fn twist_is_natural(m: &Module, n: &Module, hom: &HomSpace) -> Result<bool> {
    let (tm, tn) = (twist(m)?, twist(n)?);
    Ok(hom.basis().iter().all(|f| f.mul(&tm) == tn.mul(f)))
}

/// Dimension of the intertwiners `trivial → M` (the invariants of `M`).
pub fn invariants_dim(m: &Module) -> Result<usize> {
    Ok(hom_space(&trivial_module(&m.algebra), m)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn unit_object() {
        let h = catalog::get("double:Z2").unwrap();
        let reg = regular_module(&h);
        let t = tensor_module(&trivial_module(&h), &reg).unwrap();
        for i in 0..h.dim() {
            assert_eq!(t.action(i), reg.action(i));
        }
        let dt = dual_module(&trivial_module(&h));
        for i in 0..h.dim() {
            assert_eq!(dt.action(i), trivial_module(&h).action(i));
        }
        assert_eq!(reg.dim(), 4);
        assert_eq!(braiding(&trivial_module(&h), &reg).unwrap(), Matrix::identity(h.spec(), 4));
    }

    #[test]
    fn modules_are_modules() {
        let h = catalog::get("double:Z3").unwrap();
        let a = adjoint_module(&h);
        for m in [trivial_module(&h), regular_module(&h), a.clone(), dual_module(&a), tensor_module(&a, &a).unwrap()] {
            assert!(m.check().is_ok());
        }
    }

    #[test]
    fn identity_is_an_intertwiner() {
        let h = catalog::get("group:S3").unwrap();
        let a = adjoint_module(&h);
        let hs = hom_space(&a, &a).unwrap();
        assert!(hs.contains(&Matrix::identity(h.spec(), 6)));
        assert_eq!(hom_space(&trivial_module(&h), &trivial_module(&h)).unwrap().dim(), 1);
        // invariants of the adjoint action form the center
        assert_eq!(invariants_dim(&a).unwrap(), 3);
    }

    #[test]
    fn relative_centers() {
        let h = catalog::get("double:Z3").unwrap();
        assert_eq!(relative_center(&Bimodule::regular(&h)).unwrap().dim(), 9);
        // 2x2 matrices on themselves
        let q = crate::scalar::FieldSpec::Rational;
        let e = |i: usize, j: usize| Matrix::from_triplets(q, 2, 2, [(i, j, FieldElement::one(q))]);
        let unit = |m: &Matrix, left: bool| {
            // action on vec(X) of X -> mX or X -> Xm
            if left {
                m.kron(&Matrix::identity(q, 2))
            } else {
                Matrix::identity(q, 2).kron(&m.transpose())
            }
        };
        let gens = [e(0, 1), e(1, 0)];
        let b = Bimodule {
            dim: 4,
            left: gens.iter().map(|g| unit(g, true)).collect(),
            right: gens.iter().map(|g| unit(g, false)).collect(),
        };
        assert_eq!(relative_center(&b).unwrap().dim(), 1);
        let bad = Bimodule { dim: 4, left: vec![unit(&e(0, 1), true)], right: vec![unit(&e(1, 0), true)] };
        assert!(matches!(relative_center(&bad), Err(Error::ActionsDoNotCommute)));
    }
}
