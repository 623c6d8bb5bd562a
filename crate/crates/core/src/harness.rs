//! Instance checks of the mapping-class statements on concrete algebras.
//!
//! Each check records both sides as strings. Checks whose hypotheses fail are reported as
//! refused and never count as passes; checks beyond the genus cap are skipped.

use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::blocks::{separating_twist_op, bounding_pair_op, BlockModel, BlockOptions, BlockSpace};
use crate::error::{Error, Result};
use crate::hopf::HopfData;
use crate::linalg::{operator_order_with_cap, Matrix, OrderVerdict};
use crate::repcat::{adjoint_module, monodromy, muger_central, regular_module, tensor_module, trivial_module, twist};

pub const REPORT_VERSION: u32 = 1;

const CONVENTION_HINT: &str = "discrepancy; first suspect: the twist convention (theta = rho(v) versus rho(v^-1))";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
    Refused,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
            Verdict::Refused => "REFUSED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// The statement being instantiated.
    pub statement: String,
    pub lhs: String,
    pub rhs: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    pub runtime_ms: u64,
}

impl Check {
    fn new(id: impl Into<String>, statement: &str, lhs: String, rhs: String, ok: bool, started: Instant) -> Self {
        let verdict = Verdict::from_bool(ok);
        Check {
            id: id.into(),
            statement: statement.into(),
            lhs,
            rhs,
            verdict,
            detail: (!ok).then(|| CONVENTION_HINT.to_string()),
            runtime_ms: started.elapsed().as_millis() as u64,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        let detail = detail.into();
        self.detail = Some(match self.detail.take() {
            Some(prev) => format!("{prev}; {detail}"),
            None => detail,
        });
        self
    }

    fn not_run(id: impl Into<String>, statement: &str, verdict: Verdict, why: String) -> Self {
        Check {
            id: id.into(),
            statement: statement.into(),
            lhs: "-".into(),
            rhs: "-".into(),
            verdict,
            detail: Some(why),
            runtime_ms: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypotheses {
    pub has_r_matrix: bool,
    pub ribbon: bool,
    pub factorizable: bool,
    pub unimodular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub report_version: u32,
    pub algebra: String,
    pub dim: usize,
    pub hypotheses: Hypotheses,
    pub checks: Vec<Check>,
}

impl TheoremReport {
    pub fn has_discrepancy(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Fail)
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.checks.iter().filter(|c| c.verdict == v).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let h = &self.hypotheses;
        let _ = writeln!(
            out,
            "{} (dim {}): r-matrix {}, ribbon {}, factorizable {}, unimodular {}",
            self.algebra, self.dim, h.has_r_matrix, h.ribbon, h.factorizable, h.unimodular
        );
        let w = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(5).max(5);
        let _ = writeln!(out, "{:<w$}  {:<8}  {:<24}  {:<24}  {:>7}", "check", "verdict", "lhs", "rhs", "ms");
        for c in &self.checks {
            let _ = writeln!(out, "{:<w$}  {:<8}  {:<24}  {:<24}  {:>7}", c.id, c.verdict.as_str(), c.lhs, c.rhs, c.runtime_ms);
            if let Some(d) = &c.detail {
                let _ = writeln!(out, "{:<w$}  {}", "", d);
            }
        }
        let _ = writeln!(
            out,
            "{} pass, {} fail, {} skipped, {} refused",
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Skipped),
            self.count(Verdict::Refused)
        );
        out
    }
}

pub fn hypotheses(h: &HopfData) -> Hypotheses {
    Hypotheses {
        has_r_matrix: h.r_matrix().is_some(),
        ribbon: h.ribbon().is_some(),
        factorizable: h.is_factorizable().map(|p| p.value).unwrap_or(false),
        unimodular: h.is_unimodular().unwrap_or(false),
    }
}

/// Factorizable ribbon algebras only; unimodularity is checked as well.
fn require_modular(h: &HopfData) -> Result<()> {
    let hy = hypotheses(h);
    if !hy.factorizable || !hy.unimodular {
        return Err(Error::FactorizableRequired);
    }
    if !hy.ribbon {
        return Err(Error::MissingRibbon);
    }
    Ok(())
}

fn min_verdict(a: &OrderVerdict, b: &OrderVerdict) -> OrderVerdict {
    match (a.finite(), b.finite()) {
        (Some(x), Some(y)) => OrderVerdict::Finite(x.min(y)),
        (Some(_), None) => a.clone(),
        (None, Some(_)) => b.clone(),
        (None, None) => a.clone(),
    }
}

const PROP_ORDER: &str = "the twist and the twist of the end have the same order";

/// `|θ| = |ν|`: the order of `v` equals the order of the twist on the regular module, and
/// the lcm of twist orders over a sample of modules divides it.
pub fn verify_prop_order(h: &Arc<HopfData>, cap: u64) -> Result<Check> {
    let t0 = Instant::now();
    h.ribbon().ok_or(Error::MissingRibbon)?;
    let rhs = h.ribbon_order()?.gl_order;
    let adj = adjoint_module(h);
    let reg = regular_module(h);
    let lhs = operator_order_with_cap(&twist(&reg)?, cap)?.gl_order;
    let sample = [trivial_module(h), reg, adj.clone(), tensor_module(&adj, &adj)?];
    let mut lcm = Some(1u64);
    for m in &sample {
        lcm = match (lcm, operator_order_with_cap(&twist(m)?, cap)?.gl_order.finite()) {
            (Some(l), Some(o)) => Some(l.lcm(&o)),
            _ => None,
        };
    }
    let divides = match (lcm, rhs.finite()) {
        (Some(l), Some(n)) => n % l == 0,
        (_, None) => true,
        (None, Some(_)) => false,
    };
    let lcm_text = lcm.map_or("infinite".to_string(), |l| l.to_string());
    Ok(Check::new("twist-order", PROP_ORDER, lhs.to_string(), rhs.to_string(), lhs == rhs && divides, t0)
        .with_detail(format!("lcm over trivial, regular, end, end⊗end: {lcm_text}")))
}

const NONSEP: &str = "a non-separating meridian twist has order |θ| in PGL";

pub fn verify_nonseparating(h: &Arc<HopfData>, g_max: usize, options: BlockOptions) -> Result<Vec<Check>> {
    require_modular(h)?;
    let rhs = h.ribbon_order()?.gl_order;
    let mut checks = Vec::new();
    for g in 1..=g_max {
        if g > options.max_genus_for(h.dim()) {
            checks.push(Check::not_run(
                format!("nonsep g={g}"),
                NONSEP,
                Verdict::Skipped,
                format!("genus cap {} for dim {}", options.max_genus_for(h.dim()), h.dim()),
            ));
            continue;
        }
        let t0 = Instant::now();
        let block = BlockSpace::with_options(h, g, BlockModel::Direct, options)?;
        for i in 1..=g {
            let t = if i == 1 { t0 } else { Instant::now() };
            let op = block.nonseparating_twist(i)?;
            let lhs = op.certificate.pgl_order.clone();
            checks.push(
                Check::new(format!("nonsep g={g} handle={i}"), NONSEP, lhs.to_string(), rhs.to_string(), lhs == rhs, t)
                    .with_detail(format!("block dim {}", block.dim())),
            );
        }
    }
    Ok(checks)
}

const SEP: &str = "a separating twist of type (g', g'') has order min(|θ_{𝔸^g'}|, |θ_{𝔸^g''}|)";

pub fn verify_separating(h: &Arc<HopfData>, g1: usize, g2: usize, options: BlockOptions) -> Result<Check> {
    require_modular(h)?;
    let id = format!("sep {g1},{g2}");
    if g1.max(g2) > options.max_genus_for(h.dim()) {
        return Ok(Check::not_run(id, SEP, Verdict::Skipped, "genus cap".into()));
    }
    let t0 = Instant::now();
    let s = separating_twist_op(h, g1, g2, options)?;
    let lhs = s.operator.certificate.pgl_order.clone();
    let rhs = min_verdict(&s.source_twist.gl_order, &s.target_twist.gl_order);
    Ok(Check::new(id, SEP, lhs.to_string(), rhs.to_string(), lhs == rhs, t0).with_detail(format!(
        "|θ on 𝔸^⊗{g1}| = {}, |θ on 𝔸^⊗{g2}| = {}",
        s.source_twist.gl_order, s.target_twist.gl_order
    )))
}

const JOHNSON: &str = "the Johnson kernel acts trivially iff θ_𝔸 = id and c_{𝔸,𝔸}² = id";

/// Compares the predicted annihilation with the genus-2 separating operator, and checks
/// `S^p = id ⇔ θ_𝔸^p = id` up to the certified order.
pub fn verify_johnson(h: &Arc<HopfData>, options: BlockOptions) -> Result<Check> {
    require_modular(h)?;
    let t0 = Instant::now();
    let adj = adjoint_module(h);
    let theta = twist(&adj)?;
    let twist_trivial = theta.is_identity();
    let mono_trivial = monodromy(&adj, &adj)?.is_identity();
    let predicted = twist_trivial && mono_trivial;
    let s = separating_twist_op(h, 1, 1, options)?;
    let observed = s.operator.matrix.is_identity();
    let mut powers_agree = true;
    if let Some(n) = s.source_twist.gl_order.finite() {
        let (mut sp, mut tp) = (Matrix::identity(h.spec(), s.operator.dim()), Matrix::identity(h.spec(), adj.dim()));
        for _ in 1..=n.min(64) {
            sp = sp.mul(&s.operator.matrix);
            tp = tp.mul(&theta);
            powers_agree &= sp.is_identity() == tp.is_identity();
        }
    }
    Ok(Check::new(
        "johnson",
        JOHNSON,
        format!("predicted {}", if predicted { "annihilated" } else { "not annihilated" }),
        format!("separating operator {}", if observed { "= id" } else { "≠ id" }),
        predicted == observed && powers_agree,
        t0,
    )
    .with_detail(format!("θ_𝔸 = id: {twist_trivial}; c² = id: {mono_trivial}; power test: {powers_agree}")))
}

const TORELLI: &str = "the end lies in the Müger center iff the algebra is commutative";

pub fn verify_torelli(h: &Arc<HopfData>, cap: u64) -> Result<Check> {
    h.r_matrix().ok_or(Error::MissingRMatrix)?;
    let t0 = Instant::now();
    let adj = adjoint_module(h);
    let central = muger_central(&adj)?;
    let commutative = h.is_commutative().value;
    let mut ok = central == commutative;
    let mut detail = String::new();
    if commutative {
        let trivial_action = (0..h.dim()).all(|i| adj.action(i).as_scalar() == Some(h.counit()[i].clone()));
        ok &= trivial_action;
        let _ = write!(detail, "adjoint action is the counit: {trivial_action}");
    }
    if h.ribbon().is_some() {
        let reg = regular_module(h);
        let bp = bounding_pair_op(h, &reg, &reg, cap)?;
        if !detail.is_empty() {
            detail.push_str("; ");
        }
        let _ = write!(detail, "bounding pair on the regular module trivial: {}", bp.matrix.is_identity());
    }
    let mut c = Check::new(
        "torelli",
        TORELLI,
        format!("Müger central {central}"),
        format!("commutative {commutative}"),
        ok,
        t0,
    );
    if !detail.is_empty() {
        c = c.with_detail(detail);
    }
    Ok(c)
}

const ZG: &str = "the handle twists generate Z^g with kernel N Z^g, N = |θ|";

/// Scans `|n_i| ≤ window` for products of handle twists that are the identity.
pub fn verify_zg(h: &Arc<HopfData>, g: usize, window: i64, options: BlockOptions) -> Result<Check> {
    require_modular(h)?;
    let id = format!("zg g={g} window={window}");
    if g > options.max_genus_for(h.dim()) {
        return Ok(Check::not_run(id, ZG, Verdict::Skipped, "genus cap".into()));
    }
    let t0 = Instant::now();
    let n = h.ribbon_order()?.gl_order.finite();
    let block = BlockSpace::with_options(h, g, BlockModel::Direct, options)?;
    let ops = (1..=g).map(|i| block.nonseparating_twist(i)).collect::<Result<Vec<_>>>()?;
    let mut powers: Vec<PowerCache> = ops.iter().map(|op| PowerCache::new(&op.matrix, op.certificate.gl_order.finite())).collect::<Result<_>>()?;
    let side = (2 * window + 1) as usize;
    let mut found = Vec::new();
    let mut expected = Vec::new();
    for idx in 0..side.pow(g as u32) {
        let point: Vec<i64> = (0..g).map(|t| (idx / side.pow(t as u32) % side) as i64 - window).collect();
        let mut m = Matrix::identity(h.spec(), block.dim());
        for (t, &e) in point.iter().enumerate() {
            m = m.mul(powers[t].get(e));
        }
        if m.is_identity() {
            found.push(point.clone());
        }
        let predicted = match n {
            Some(n) => point.iter().all(|e| e.rem_euclid(n as i64) == 0),
            None => point.iter().all(|&e| e == 0),
        };
        if predicted {
            expected.push(point);
        }
    }
    let rhs = match n {
        Some(n) => format!("{n}Z^{g}: {} points", expected.len()),
        None => "only 0".to_string(),
    };
    Ok(Check::new(id, ZG, format!("{} trivial points", found.len()), rhs, found == expected, t0)
        .with_detail(format!("block dim {}", block.dim())))
}

struct PowerCache {
    base: Matrix,
    inverse: Matrix,
    order: Option<u64>,
    cache: std::collections::HashMap<i64, Matrix>,
}

impl PowerCache {
    fn new(m: &Matrix, order: Option<u64>) -> Result<Self> {
        Ok(PowerCache { base: m.clone(), inverse: m.inverse()?, order, cache: Default::default() })
    }

    fn get(&mut self, e: i64) -> &Matrix {
        let e = match self.order {
            Some(n) => e.rem_euclid(n as i64),
            None => e,
        };
        let (base, inverse) = (&self.base, &self.inverse);
        self.cache.entry(e).or_insert_with(|| if e >= 0 { base.pow(e as u64) } else { inverse.pow(e.unsigned_abs()) })
    }
}

const EXCISION: &str = "the direct and relative-center block models agree";

/// Dimensions and twist certificates of both models; twists only when a ribbon exists.
pub fn verify_excision(h: &Arc<HopfData>, g: usize, options: BlockOptions) -> Result<Check> {
    if !hypotheses(h).factorizable {
        return Err(Error::FactorizableRequired);
    }
    let id = format!("excision g={g}");
    if g > options.max_genus_for(h.dim()) {
        return Ok(Check::not_run(id, EXCISION, Verdict::Skipped, "genus cap".into()));
    }
    let t0 = Instant::now();
    let direct = BlockSpace::with_options(h, g, BlockModel::Direct, options)?;
    let center = BlockSpace::with_options(h, g, BlockModel::RelativeCenter, options)?;
    let mut lhs = format!("dim {}", direct.dim());
    let mut rhs = format!("dim {}", center.dim());
    let mut ok = direct.dim() == center.dim();
    let mut detail = None;
    if h.ribbon().is_some() {
        for i in 1..=g {
            let a = direct.nonseparating_twist(i)?.certificate;
            let b = center.nonseparating_twist(i)?.certificate;
            ok &= a.same_orders(&b);
            let _ = write!(lhs, ", t{i} {}/{}", a.gl_order, a.pgl_order);
            let _ = write!(rhs, ", t{i} {}/{}", b.gl_order, b.pgl_order);
        }
    } else {
        detail = Some("twist comparison not applicable: no ribbon element".to_string());
    }
    let c = Check::new(id, EXCISION, lhs, rhs, ok, t0);
    Ok(match detail {
        Some(d) => c.with_detail(d),
        None => c,
    })
}

fn refused(id: &str, statement: &str, e: Error) -> Check {
    let verdict = match e {
        Error::FactorizableRequired | Error::MissingRibbon | Error::MissingRMatrix => Verdict::Refused,
        Error::ResourceLimit(_) => Verdict::Skipped,
        _ => Verdict::Fail,
    };
    Check::not_run(id, statement, verdict, format!("{}: {e}", e.code()))
}

/// Every check on one algebra.
pub fn run_all(h: &Arc<HopfData>, max_genus: usize, window: i64, options: BlockOptions) -> TheoremReport {
    let mut checks = Vec::new();
    let one = |r: Result<Check>, id: &str, st: &str| r.unwrap_or_else(|e| refused(id, st, e));
    checks.push(one(verify_prop_order(h, options.order_cap), "twist-order", PROP_ORDER));
    match verify_nonseparating(h, max_genus, options) {
        Ok(cs) => checks.extend(cs),
        Err(e) => checks.push(refused("nonsep", NONSEP, e)),
    }
    checks.push(one(verify_separating(h, 1, 1, options), "sep 1,1", SEP));
    if h.dim() <= 9 {
        checks.push(one(verify_separating(h, 1, 2, options), "sep 1,2", SEP));
    }
    checks.push(one(verify_johnson(h, options), "johnson", JOHNSON));
    checks.push(one(verify_torelli(h, options.order_cap), "torelli", TORELLI));
    for g in 1..=max_genus.min(2) {
        checks.push(one(verify_excision(h, g, options), &format!("excision g={g}"), EXCISION));
    }
    let zg_genus = max_genus.clamp(1, options.max_genus_for(h.dim()));
    checks.push(one(verify_zg(h, zg_genus, window, options), "zg", ZG));
    TheoremReport {
        report_version: REPORT_VERSION,
        algebra: h.name().to_string(),
        dim: h.dim(),
        hypotheses: hypotheses(h),
        checks,
    }
}
