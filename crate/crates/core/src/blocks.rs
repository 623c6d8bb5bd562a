//! Block spaces of genus-g handlebodies and the mapping-class operators on them.
//!
//! Two models are provided. `Direct` is the space of intertwiners `𝔸^{⊗g} → I`, stored as
//! row functionals on `𝔸^{⊗g}`; `𝔸` is the adjoint module. `RelativeCenter` is the relative
//! center of the bimodule `Hom_H(G, G ⊗ 𝔸^{⊗(g-1)})` with `G` the regular module, identified
//! with `X = G ⊗ 𝔸^{⊗(g-1)}` through `f ↦ f(1)`; there the center is
//! `{m ∈ X : (R_b ⊗ id) m = ρ_X(b) m}` for the generators `b`, where `R_b` is right
//! multiplication on `G`.
//!
//! Both models compute pre-duals of the block spaces; operator orders do not change under
//! dualization.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::HopfData;
use crate::linalg::{operator_order_with_cap, Matrix, OrderCertificate, RowReducer, Subspace, DEFAULT_ORDER_CAP};
use crate::repcat::{
    adjoint_module, hom_space, regular_module, tensor_module, tensor_power, trivial_module, twist, Module,
    ModuleKind,
};
use crate::scalar::FieldElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockModel {
    Direct,
    RelativeCenter,
}

impl fmt::Display for BlockModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockModel::Direct => "direct",
            BlockModel::RelativeCenter => "center",
        })
    }
}

/// Genus limit and order-search cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockOptions {
    /// Overrides [`default_max_genus`].
    pub max_genus: Option<usize>,
    pub order_cap: u64,
}

impl Default for BlockOptions {
    fn default() -> Self {
        BlockOptions { max_genus: None, order_cap: DEFAULT_ORDER_CAP }
    }
}

impl BlockOptions {
    pub fn max_genus_for(&self, dim: usize) -> usize {
        self.max_genus.unwrap_or_else(|| default_max_genus(dim))
    }

    fn check_genus(&self, h: &HopfData, g: usize) -> Result<()> {
        let max = self.max_genus_for(h.dim());
        if g > max {
            return Err(Error::ResourceLimit(format!(
                "genus {g} exceeds the cap {max} for a {}-dimensional algebra",
                h.dim()
            )));
        }
        Ok(())
    }
}

/// `𝔸^{⊗g}` has dimension `dim^g`; the caps keep it at most 36².
pub fn default_max_genus(dim: usize) -> usize {
    match dim {
        0..=9 => 3,
        10..=36 => 2,
        _ => 1,
    }
}

/// The end twist `x ↦ v x` on `𝔸`, post-checked to intertwine the adjoint action and to
/// satisfy `θ_M ρ_M(h) = ρ_M(v h)` for the trivial and regular modules.
pub fn end_twist(h: &Arc<HopfData>) -> Result<Matrix> {
    let v = h.ribbon().ok_or(Error::MissingRibbon)?;
    let lv = h.left_mult_matrix(v);
    let adj = adjoint_module(h);
    for b in h.generators() {
        if lv.mul(adj.action(b)) != adj.action(b).mul(&lv) {
            return Err(Error::PostCheckFailed(format!("end twist does not commute with the action of e_{b}")));
        }
    }
    for m in [trivial_module(h), regular_module(h)] {
        let theta = twist(&m)?;
        for i in 0..h.dim() {
            let vh = h.mul(v, &h.basis_element(i));
            if theta.mul(m.action(i)) != m.act(&vh) {
                return Err(Error::PostCheckFailed(format!("end projection equation fails at e_{i}")));
            }
        }
    }
    Ok(lv)
}

#[derive(Debug, Clone)]
pub struct BlockSpace {
    algebra: Arc<HopfData>,
    genus: usize,
    model: BlockModel,
    /// The module whose vectors carry the basis: `𝔸^{⊗g}` (Direct) or `X` (RelativeCenter).
    carrier: Module,
    space: Subspace,
    options: BlockOptions,
}

impl BlockSpace {
    pub fn new(h: &Arc<HopfData>, genus: usize, model: BlockModel) -> Result<Self> {
        Self::with_options(h, genus, model, BlockOptions::default())
    }

    pub fn with_options(h: &Arc<HopfData>, genus: usize, model: BlockModel, options: BlockOptions) -> Result<Self> {
        options.check_genus(h, genus)?;
        let adj = adjoint_module(h);
        let (carrier, space) = match model {
            BlockModel::Direct => {
                let carrier = tensor_power(&adj, genus);
                let space = hom_space(&carrier, &trivial_module(h))?.subspace().clone();
                (carrier, space)
            }
            BlockModel::RelativeCenter => {
                if genus == 0 {
                    return Err(Error::ModelRequiresPositiveGenus);
                }
                let rest = tensor_power(&adj, genus - 1);
                let carrier = tensor_module(&regular_module(h), &rest)?;
                let space = relative_center_of(h, &carrier, rest.dim());
                (carrier, space)
            }
        };
        Ok(BlockSpace { algebra: h.clone(), genus, model, carrier, space, options })
    }

    pub fn algebra(&self) -> &Arc<HopfData> {
        &self.algebra
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn model(&self) -> BlockModel {
        self.model
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Dimension of the vectors the basis lives in.
    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_dim()
    }

    pub fn basis(&self) -> &[Vec<FieldElement>] {
        self.space.basis()
    }

    pub fn options(&self) -> BlockOptions {
        self.options
    }

    /// Matrix of an ambient linear map on the block basis; the map must preserve the space.
    pub fn restrict(&self, ambient: &Matrix) -> Result<Matrix> {
        let spec = self.algebra.spec();
        let mut cols = Vec::with_capacity(self.dim());
        for b in self.space.basis() {
            let image = ambient.mul_vec(b);
            if !self.space.contains(&image) {
                return Err(Error::PostCheckFailed("operator leaves the block space".into()));
            }
            cols.push(self.space.coordinates(&image));
        }
        Ok(Matrix::from_columns(spec, self.dim(), &cols))
    }

    /// Twist about the meridian of handle `i` (1-based).
    ///
    /// Direct: precomposition with `L_v` in slot `i`. RelativeCenter: handle 1 acts by the
    /// twist of `G` (`m ↦ ρ_X(v) m`), handle `i ≥ 2` by `L_v` on the `(i-1)`-th `𝔸` factor.
    pub fn nonseparating_twist(&self, i: usize) -> Result<MCGOperator> {
        if i == 0 || i > self.genus {
            return Err(Error::HandleOutOfRange { handle: i, genus: self.genus });
        }
        let h = &self.algebra;
        let spec = h.spec();
        let d = h.dim();
        let lv = end_twist(h)?;
        let slot = |before: usize, after: usize| {
            Matrix::identity(spec, d.pow(before as u32)).kron(&lv).kron(&Matrix::identity(spec, d.pow(after as u32)))
        };
        let ambient = match self.model {
            // f ↦ f T as a map on column vectors is T^T
            BlockModel::Direct => slot(i - 1, self.genus - i).transpose(),
            BlockModel::RelativeCenter if i == 1 => twist(&self.carrier)?,
            BlockModel::RelativeCenter => Matrix::identity(spec, d).kron(&slot(i - 2, self.genus - i)),
        };
        let matrix = self.restrict(&ambient)?;
        MCGOperator::new(OperatorKind::NonSeparatingMeridian(i), Some((self.genus, self.model)), matrix, self.options.order_cap)
    }
}

fn relative_center_of(h: &HopfData, carrier: &Module, rest_dim: usize) -> Subspace {
    let spec = h.spec();
    let mut red = RowReducer::new(spec, carrier.dim());
    for b in h.generators() {
        let right = h.right_mult_matrix(&h.basis_element(b)).kron(&Matrix::identity(spec, rest_dim));
        let diff = right.sub(carrier.action(b));
        for r in 0..diff.rows() {
            if !diff.row(r).is_empty() {
                red.insert(diff.row(r).to_vec());
            }
        }
    }
    red.kernel()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorKind {
    NonSeparatingMeridian(usize),
    Separating(usize, usize),
    BoundingPair { x: String, y: String },
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorKind::NonSeparatingMeridian(i) => write!(f, "nonsep:{i}"),
            OperatorKind::Separating(a, b) => write!(f, "sep:{a},{b}"),
            OperatorKind::BoundingPair { x, y } => write!(f, "bpair:{x},{y}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct MCGOperator {
    pub kind: OperatorKind,
    /// Genus and model for operators on a [`BlockSpace`].
    pub block: Option<(usize, BlockModel)>,
    pub matrix: Matrix,
    pub certificate: OrderCertificate,
}

impl MCGOperator {
    pub fn new(kind: OperatorKind, block: Option<(usize, BlockModel)>, matrix: Matrix, cap: u64) -> Result<Self> {
        let certificate = operator_order_with_cap(&matrix, cap)?;
        Ok(MCGOperator { kind, block, matrix, certificate })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// The standard separating twist and the two twists it is compared with.
#[derive(Debug, Clone)]
pub struct SeparatingTwist {
    pub operator: MCGOperator,
    /// Order of `θ_{𝔸^{⊗g′}}`.
    pub source_twist: OrderCertificate,
    /// Order of `θ_{𝔸^{⊗g″}}`.
    pub target_twist: OrderCertificate,
}

/// `f ↦ θ_{𝔸^{⊗g″}} ∘ f` on `Hom(𝔸^{⊗g′}, 𝔸^{⊗g″})`: the twist about the curve splitting
/// handles `1..=g′` from the remaining `g″`.
pub fn separating_twist_op(h: &Arc<HopfData>, g1: usize, g2: usize, options: BlockOptions) -> Result<SeparatingTwist> {
    if g1 == 0 || g2 == 0 {
        return Err(Error::HandleOutOfRange { handle: g1.min(g2), genus: g1 + g2 });
    }
    options.check_genus(h, g1.max(g2))?;
    let adj = adjoint_module(h);
    let (src, tgt) = (tensor_power(&adj, g1), tensor_power(&adj, g2));
    let (ts, tt) = (twist(&src)?, twist(&tgt)?);
    let hs = hom_space(&src, &tgt)?;
    let matrix = hs.induced_operator(|f| tt.mul(f))?;
    Ok(SeparatingTwist {
        operator: MCGOperator::new(OperatorKind::Separating(g1, g2), None, matrix, options.order_cap)?,
        source_twist: operator_order_with_cap(&ts, options.order_cap)?,
        target_twist: operator_order_with_cap(&tt, options.order_cap)?,
    })
}

/// `f ↦ θ_Y ∘ f ∘ (θ_X^{-1} ⊗ id_𝔸)` on `Hom(X ⊗ 𝔸, Y)`.
///
/// For `X` regular the space is identified with `Hom_k(𝔸, Y)` through `L(a) = f(1 ⊗ a)`,
/// with inverse `f(h ⊗ a) = Σ h_1 L(S(h_2) a)`.
pub fn bounding_pair_op(h: &Arc<HopfData>, x: &Module, y: &Module, cap: u64) -> Result<MCGOperator> {
    let v = h.ribbon().ok_or(Error::MissingRibbon)?;
    let v_inv = h.inverse_of(v).ok_or(Error::NotInvertible)?;
    let adj = adjoint_module(h);
    let kind = OperatorKind::BoundingPair { x: module_label(x), y: module_label(y) };
    let matrix = if *x.kind() == ModuleKind::Regular {
        let spec = h.spec();
        let d = h.dim();
        let mut acc = Matrix::zeros(spec, y.dim() * d, y.dim() * d);
        for (jk, c) in h.comult_of(&v_inv) {
            let left = y.act(&h.mul(v, &h.basis_element(jk / d)));
            let right = adj.act(&h.antipode().column(jk % d));
            // vec(A L B) = (A ⊗ B^T) vec(L), row-major
            acc = acc.add(&left.kron(&right.transpose()).scale(&c));
        }
        acc
    } else {
        let source = tensor_module(x, &adj)?;
        let hs = hom_space(&source, y)?;
        let pre = x.act(&v_inv).kron(&Matrix::identity(h.spec(), adj.dim()));
        let ty = twist(y)?;
        hs.induced_operator(|f| ty.mul(f).mul(&pre))?
    };
    MCGOperator::new(kind, None, matrix, cap)
}

fn module_label(m: &Module) -> String {
    match m.kind() {
        ModuleKind::Trivial => "trivial".into(),
        ModuleKind::Regular => "regular".into(),
        ModuleKind::Adjoint => "adjoint".into(),
        other => format!("{other:?}").to_lowercase(),
    }
}
