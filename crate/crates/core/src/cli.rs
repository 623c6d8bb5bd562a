//! Command-line front end. Exit codes: 0 all checks pass, 1 discrepancy, 2 usage or I/O
//! error, 3 validation failure. Errors go to stderr as `error[<code>]: <message>`.

use std::fmt::Write as _;
use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::blocks::{bounding_pair_op, separating_twist_op, BlockModel, BlockOptions, BlockSpace, MCGOperator};
use crate::catalog;
use crate::error::Error;
use crate::harness;
use crate::hopf::{CheckMode, HopfData, StructureReport};
use crate::linalg::{Matrix, OrderCertificate, DEFAULT_ORDER_CAP};
use crate::repcat::{adjoint_module, monodromy, muger_central, regular_module, twist};
use crate::scalar::FieldSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

/// Operator matrices up to this size are printed.
const MATRIX_PRINT_LIMIT: usize = 32;

#[derive(Debug, Parser)]
#[command(name = "hopf-blocks", version, about = "Exact mapping-class actions on block spaces of ribbon Hopf algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalFlags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalFlags {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Confirm every structure constant lies in the declared field.
    #[arg(long, global = true)]
    pub field_check: bool,
    /// Check every axiom on the full basis.
    #[arg(long, global = true)]
    pub full_axioms: bool,
    /// Iteration cap for order searches over finite fields.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    pub cap: u64,
    /// Override the genus cap.
    #[arg(long, global = true)]
    pub max_genus_cap: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Direct,
    Center,
}

impl From<ModelArg> for BlockModel {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Direct => BlockModel::Direct,
            ModelArg::Center => BlockModel::RelativeCenter,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the structure axioms.
    Check { algebra: String },
    /// Structural invariants and predictions.
    Invariants { algebra: String },
    /// Block space of a genus-g handlebody.
    Blocks {
        algebra: String,
        #[arg(long)]
        genus: usize,
        #[arg(long, value_enum, default_value_t = ModelArg::Direct)]
        model: ModelArg,
    },
    /// A Dehn twist operator and its order certificate.
    Dehn {
        algebra: String,
        #[arg(long)]
        genus: Option<usize>,
        /// nonsep:<i> | sep:<g'>,<g''> | bpair
        #[arg(long)]
        curve: String,
        #[arg(long, value_enum, default_value_t = ModelArg::Direct)]
        model: ModelArg,
    },
    /// Run every instance check.
    Theorems {
        algebra: String,
        #[arg(long, default_value_t = 2)]
        max_genus: usize,
        #[arg(long, default_value_t = 4)]
        window: i64,
    },
    /// List the built-in algebras.
    CatalogList,
}

#[derive(Debug)]
enum Curve {
    NonSeparating(usize),
    Separating(usize, usize),
    BoundingPair,
}

fn parse_curve(s: &str) -> Option<Curve> {
    if s == "bpair" {
        return Some(Curve::BoundingPair);
    }
    if let Some(i) = s.strip_prefix("nonsep:") {
        return i.parse().ok().map(Curve::NonSeparating);
    }
    let (a, b) = s.strip_prefix("sep:")?.split_once(',')?;
    Some(Curve::Separating(a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Outcome of a command: text for stdout and the exit code.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "error[UsageError]: {rendered}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = write!(out, "{}", o.text);
            o.code
        }
        Err(e) => {
            if let Error::ValidationFailed(report) = &e {
                let _ = write!(out, "{}", render_structure(report, cli.global.format));
            }
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            exit_code_for(&e)
        }
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::ValidationFailed(_) | Error::NotAGroup(_) => EXIT_VALIDATION,
        _ => EXIT_USAGE,
    }
}

fn check_mode(g: &GlobalFlags) -> CheckMode {
    if g.full_axioms {
        CheckMode::Full
    } else {
        CheckMode::Auto
    }
}

fn options(g: &GlobalFlags) -> BlockOptions {
    BlockOptions { max_genus: g.max_genus_cap, order_cap: g.cap }
}

fn load(name: &str, g: &GlobalFlags) -> Result<Arc<HopfData>, Error> {
    let h = catalog::resolve(name, check_mode(g))?;
    if g.field_check {
        field_check(&h)?;
    }
    Ok(h)
}

/// Every structure constant must carry the declared field.
fn field_check(h: &HopfData) -> Result<(), Error> {
    let spec = h.spec();
    let parts = h.to_parts();
    let mut scalars = parts.mult.iter().map(|t| &t.3).chain(parts.comult.iter().map(|t| &t.3));
    if let Some(bad) = scalars.find(|c| c.spec() != spec) {
        return Err(Error::FieldMismatch(bad.spec(), spec));
    }
    let all = parts.unit.iter().chain(&parts.counit).chain(parts.antipode.iter().map(|t| &t.2));
    let extra = parts.r_matrix.iter().flatten().map(|t| &t.2).chain(parts.ribbon.iter().flatten());
    if let Some(bad) = all.chain(extra).find(|c| c.spec() != spec) {
        return Err(Error::FieldMismatch(bad.spec(), spec));
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<Output, Error> {
    let g = &cli.global;
    match &cli.command {
        Command::Check { algebra } => {
            let h = load(algebra, g)?;
            let report = h.validate_with(check_mode(g));
            let code = if report.passed() { EXIT_OK } else { EXIT_VALIDATION };
            Ok(Output { text: render_structure(&report, g.format), code })
        }
        Command::Invariants { algebra } => invariants(&load(algebra, g)?, g),
        Command::Blocks { algebra, genus, model } => {
            let h = load(algebra, g)?;
            let b = BlockSpace::with_options(&h, *genus, (*model).into(), options(g))?;
            let supports: Vec<usize> = b.basis().iter().map(|v| v.iter().filter(|x| !x.is_zero()).count()).collect();
            Ok(Output::ok(match g.format {
                Format::Json => pretty(&json!({
                    "algebra": h.name(),
                    "genus": genus,
                    "model": b.model(),
                    "dim": b.dim(),
                    "ambient_dim": b.ambient_dim(),
                    "basis_support_sizes": supports,
                })),
                Format::Table => {
                    let mut s = format!("{} genus {} ({} model): dim {}\n", h.name(), genus, b.model(), b.dim());
                    let _ = writeln!(s, "ambient dimension {}", b.ambient_dim());
                    let shown: Vec<String> = supports.iter().take(12).map(usize::to_string).collect();
                    let more = if supports.len() > 12 { ", ..." } else { "" };
                    let _ = writeln!(s, "basis support sizes: {}{more}", shown.join(", "));
                    s
                }
            }))
        }
        Command::Dehn { algebra, genus, curve, model } => {
            let c = parse_curve(curve).ok_or_else(|| Error::parse("--curve", format!("cannot read `{curve}`")))?;
            let h = load(algebra, g)?;
            let op = match c {
                Curve::NonSeparating(i) => {
                    let genus = genus.ok_or_else(|| Error::parse("--genus", "required for nonsep curves"))?;
                    BlockSpace::with_options(&h, genus, (*model).into(), options(g))?.nonseparating_twist(i)?
                }
                Curve::Separating(a, b) => {
                    if let Some(gg) = genus {
                        if a + b != *gg {
                            return Err(Error::parse("--curve", format!("sep:{a},{b} does not split genus {gg}")));
                        }
                    }
                    separating_twist_op(&h, a, b, options(g))?.operator
                }
                Curve::BoundingPair => {
                    let r = regular_module(&h);
                    bounding_pair_op(&h, &r, &r, g.cap)?
                }
            };
            Ok(Output::ok(render_operator(&h, &op, g.format)))
        }
        Command::Theorems { algebra, max_genus, window } => {
            let h = load(algebra, g)?;
            let report = harness::run_all(&h, *max_genus, *window, options(g));
            let code = if report.has_discrepancy() { EXIT_DISCREPANCY } else { EXIT_OK };
            let text = match g.format {
                Format::Json => report.to_json(),
                Format::Table => report.to_table(),
            };
            Ok(Output { text, code })
        }
        Command::CatalogList => Ok(Output::ok(match g.format {
            Format::Json => pretty(&json!(catalog::CATALOG_NAMES)),
            Format::Table => catalog::CATALOG_NAMES.iter().map(|n| format!("{n}\n")).collect(),
        })),
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn field_name(spec: FieldSpec) -> String {
    spec.to_string()
}

pub fn render_structure(r: &StructureReport, format: Format) -> String {
    match format {
        Format::Json => pretty(r),
        Format::Table => {
            let mut s = format!("{} (dim {}, {:?} mode)\n", r.algebra, r.dim, r.mode);
            for a in &r.axioms {
                let _ = write!(s, "  {:<4}  {}", if a.passed { "ok" } else { "FAIL" }, a.name);
                if let Some(w) = a.witness.as_ref().filter(|w| !w.is_empty()) {
                    let _ = write!(s, "  witness {w:?}");
                }
                if let Some(d) = &a.detail {
                    let _ = write!(s, "  ({d})");
                }
                s.push('\n');
            }
            let _ = writeln!(s, "commutative {}, unimodular {}", r.is_commutative.value, r.is_unimodular.value);
            if let Some(f) = &r.is_factorizable {
                let _ = writeln!(s, "factorizable {}", f.value);
            }
            let _ = writeln!(s, "{}", if r.passed() { "all axioms hold" } else { "validation failed" });
            s
        }
    }
}

fn certificate_json(c: &OrderCertificate) -> serde_json::Value {
    serde_json::to_value(c).expect("serializable")
}

fn matrix_json(m: &Matrix) -> serde_json::Value {
    json!(m.to_dense().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn render_operator(h: &HopfData, op: &MCGOperator, format: Format) -> String {
    let c = &op.certificate;
    match format {
        Format::Json => {
            let mut v = json!({
                "algebra": h.name(),
                "curve": op.kind.to_string(),
                "dim": op.dim(),
                "gl_order": c.gl_order,
                "pgl_order": c.pgl_order,
                "certificate": certificate_json(c),
            });
            if let Some((genus, model)) = op.block {
                v["genus"] = json!(genus);
                v["model"] = json!(model);
            }
            if op.dim() <= MATRIX_PRINT_LIMIT {
                v["matrix"] = matrix_json(&op.matrix);
            }
            pretty(&v)
        }
        Format::Table => {
            let mut s = format!("{} {} on a {}-dimensional space\n", h.name(), op.kind, op.dim());
            let _ = writeln!(s, "GL order {}, PGL order {}", c.gl_order, c.pgl_order);
            let _ = writeln!(s, "minimal polynomial (low degree first): [{}]", c.minpoly.join(", "));
            if op.dim() <= MATRIX_PRINT_LIMIT.min(8) {
                let _ = write!(s, "{:?}", op.matrix);
            }
            s
        }
    }
}

#[derive(Serialize)]
struct Invariants {
    algebra: String,
    field: String,
    dim: usize,
    commutative: bool,
    cocommutative: bool,
    semisimple: bool,
    unimodular: Option<bool>,
    factorizable: Option<bool>,
    ribbon_order: Option<OrderCertificate>,
    end_muger_central: Option<bool>,
    end_twist_trivial: Option<bool>,
    end_monodromy_trivial: Option<bool>,
    /// Johnson kernel annihilated (predicted).
    johnson_predicted: Option<bool>,
    /// Torelli group annihilated (predicted): the end is Müger central.
    torelli_predicted: Option<bool>,
}

fn invariants(h: &Arc<HopfData>, g: &GlobalFlags) -> Result<Output, Error> {
    let adj = adjoint_module(h);
    let has_r = h.r_matrix().is_some();
    let central = if has_r { Some(muger_central(&adj)?) } else { None };
    let mono = if has_r { Some(monodromy(&adj, &adj)?.is_identity()) } else { None };
    let theta = match h.ribbon() {
        Some(_) => Some(twist(&adj)?.is_identity()),
        None => None,
    };
    let inv = Invariants {
        algebra: h.name().to_string(),
        field: field_name(h.spec()),
        dim: h.dim(),
        commutative: h.is_commutative().value,
        cocommutative: h.is_cocommutative(),
        semisimple: h.is_semisimple(),
        unimodular: h.is_unimodular().ok(),
        factorizable: if has_r { Some(h.is_factorizable()?.value) } else { None },
        ribbon_order: if h.ribbon().is_some() { Some(h.ribbon_order()?) } else { None },
        end_muger_central: central,
        end_twist_trivial: theta,
        end_monodromy_trivial: mono,
        johnson_predicted: theta.zip(mono).map(|(a, b)| a && b),
        torelli_predicted: central,
    };
    Ok(Output::ok(match g.format {
        Format::Json => pretty(&inv),
        Format::Table => {
            let show = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
            let mut s = format!("{} over {} (dim {})\n", inv.algebra, inv.field, inv.dim);
            let _ = writeln!(s, "commutative        {}", inv.commutative);
            let _ = writeln!(s, "cocommutative      {}", inv.cocommutative);
            let _ = writeln!(s, "semisimple         {}", inv.semisimple);
            let _ = writeln!(s, "unimodular         {}", show(inv.unimodular));
            let _ = writeln!(s, "factorizable       {}", show(inv.factorizable));
            let order = inv.ribbon_order.as_ref().map_or("no ribbon".to_string(), |c| format!("GL {} / PGL {}", c.gl_order, c.pgl_order));
            let _ = writeln!(s, "ribbon order       {order}");
            let _ = writeln!(s, "end Müger central  {}", show(inv.end_muger_central));
            let _ = writeln!(s, "end twist trivial  {}", show(inv.end_twist_trivial));
            let _ = writeln!(s, "end c² trivial     {}", show(inv.end_monodromy_trivial));
            let _ = writeln!(s, "Johnson predicted  {}", show(inv.johnson_predicted));
            let _ = writeln!(s, "Torelli predicted  {}", show(inv.torelli_predicted));
            s
        }
    }))
}
