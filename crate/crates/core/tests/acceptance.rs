//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons throughout.
//! Runs without the libtest harness so the lines always reach stdout; exits non-zero if
//! any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use hopf_blocks::blocks::{separating_twist_op, BlockModel, BlockOptions, BlockSpace};
use hopf_blocks::catalog::{self, CATALOG_NAMES};
use hopf_blocks::harness;
use hopf_blocks::hopf::{CheckMode, HopfData};
use hopf_blocks::linalg::{operator_order, InfiniteReason, Matrix, OrderVerdict};
use hopf_blocks::repcat::*;
use hopf_blocks::scalar::{FieldElement, FieldSpec};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn get(name: &str) -> Arc<HopfData> {
    catalog::get(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Multiplicative order of an element by repeated multiplication, using only the raw
/// structure-constant triples.
fn multiplicative_order_oracle(h: &HopfData, v: &[FieldElement], cap: u64) -> Option<u64> {
    let parts = h.to_parts();
    let spec = parts.spec;
    let d = parts.unit.len();
    let mul = |a: &[FieldElement], b: &[FieldElement]| {
        let mut out = vec![FieldElement::zero(spec); d];
        for (i, j, k, c) in &parts.mult {
            if a[*i].is_zero() || b[*j].is_zero() {
                continue;
            }
            out[*k] = &out[*k] + &(&(&a[*i] * &b[*j]) * c);
        }
        out
    };
    let mut p = v.to_vec();
    for k in 1..=cap {
        if p == parts.unit {
            return Some(k);
        }
        p = mul(&p, v);
    }
    None
}

fn criterion_1() -> Outcome {
    let t0 = Instant::now();
    let names = ["group:Z2", "group:Z3", "group:S3", "double:Z2", "double:Z3", "double:S3", "sweedler", "double:sweedler", "symmetric:Z2"];
    let mut axioms = 0;
    for name in names {
        let h = get(name);
        let r = h.validate_with(CheckMode::Auto);
        ensure(r.passed(), format!("{name}: {}", r.failures_summary()))?;
        ensure(h.r_matrix().is_none() || r.axioms.iter().any(|a| a.name.contains("R_13 R_23")), format!("{name}: R not checked"))?;
        ensure(h.ribbon().is_none() || r.axioms.iter().any(|a| a.name == "v central"), format!("{name}: ribbon not checked"))?;
        axioms += r.axioms.len();
    }
    let elapsed = t0.elapsed();
    ensure(elapsed < Duration::from_secs(60), format!("took {elapsed:?}"))?;
    Ok(format!("{} algebras, {axioms} axiom checks, {:.1} s", names.len(), elapsed.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let pinned = [("double:Z2", 2u64), ("double:Z3", 3), ("double:S3", 6), ("symmetric:Z2", 1)];
    let mut seen = Vec::new();
    for name in CATALOG_NAMES {
        let h = get(name);
        let Some(v) = h.ribbon() else { continue };
        let oracle = multiplicative_order_oracle(&h, v, 10_000).ok_or(format!("{name}: oracle found no finite order"))?;
        if let Some((_, n)) = pinned.iter().find(|(p, _)| p == name) {
            ensure(oracle == *n, format!("{name}: oracle {oracle}, pinned {n}"))?;
        }
        let op = operator_order(&twist(&regular_module(&h)).unwrap()).unwrap().gl_order;
        let rib = h.ribbon_order().unwrap().gl_order;
        ensure(op == OrderVerdict::Finite(oracle), format!("{name}: twist on regular {op}, oracle {oracle}"))?;
        ensure(rib == OrderVerdict::Finite(oracle), format!("{name}: ribbon order {rib}, oracle {oracle}"))?;
        seen.push(format!("{name} {oracle}"));
    }
    for (p, _) in pinned {
        ensure(seen.iter().any(|s| s.starts_with(p)), format!("{p} has no ribbon element"))?;
    }
    Ok(seen.join(", "))
}

fn criterion_3() -> Outcome {
    let mut parts = Vec::new();
    let mut failures = Vec::new();
    for (name, gmax) in [("double:Z2", 3usize), ("double:Z3", 3), ("double:S3", 2), ("double:sweedler", 2)] {
        let h = get(name);
        let theta = match h.ribbon_order() {
            Ok(c) => c.gl_order,
            Err(e) => {
                failures.push(format!("{name}: |θ| undefined ({}: {e})", e.code()));
                continue;
            }
        };
        for g in 1..=gmax {
            let b = BlockSpace::new(&h, g, BlockModel::Direct).map_err(|e| format!("{name} g={g}: {e}"))?;
            for i in 1..=g {
                let op = b.nonseparating_twist(i).map_err(|e| format!("{name} g={g} i={i}: {e}"))?;
                let pgl = &op.certificate.pgl_order;
                let ok = if theta.is_infinite() { pgl.is_infinite() } else { *pgl == theta };
                if !ok {
                    failures.push(format!("{name} g={g} i={i}: pgl {pgl} vs |θ| {theta}"));
                }
            }
        }
        parts.push(format!("{name} |θ|={theta} g≤{gmax}"));
    }
    if failures.is_empty() {
        Ok(parts.join(", "))
    } else {
        Err(format!("{}; passed: {}", failures.join("; "), parts.join(", ")))
    }
}

fn factorizable_entries() -> Vec<Arc<HopfData>> {
    CATALOG_NAMES.iter().map(|n| get(n)).filter(|h| harness::hypotheses(h).factorizable).collect()
}

fn criterion_4() -> Outcome {
    let mut parts = Vec::new();
    for h in factorizable_entries() {
        if h.ribbon().is_none() {
            parts.push(format!("{} outside the ribbon hypothesis", h.name()));
            continue;
        }
        let mut shapes = vec![(1, 1)];
        if h.dim() <= 8 {
            shapes.push((1, 2));
        }
        for (a, b) in shapes {
            let s = separating_twist_op(&h, a, b, BlockOptions::default()).map_err(|e| e.to_string())?;
            let lhs = s.operator.certificate.pgl_order.clone();
            let rhs = match (s.source_twist.gl_order.finite(), s.target_twist.gl_order.finite()) {
                (Some(x), Some(y)) => OrderVerdict::Finite(x.min(y)),
                _ => return Err(format!("{}: infinite twist on a tensor power of the end", h.name())),
            };
            ensure(lhs == rhs, format!("{} ({a},{b}): {lhs} vs {rhs}", h.name()))?;
            parts.push(format!("{} ({a},{b}) {lhs}", h.name()));
        }
    }
    Ok(parts.join(", "))
}

fn criterion_5() -> Outcome {
    let mut parts = Vec::new();
    for h in factorizable_entries() {
        for g in 1..=2 {
            let d = BlockSpace::new(&h, g, BlockModel::Direct).map_err(|e| e.to_string())?;
            let c = BlockSpace::new(&h, g, BlockModel::RelativeCenter).map_err(|e| e.to_string())?;
            ensure(d.dim() == c.dim(), format!("{} g={g}: dims {} vs {}", h.name(), d.dim(), c.dim()))?;
            if h.ribbon().is_some() {
                for i in 1..=g {
                    let (x, y) = (d.nonseparating_twist(i).unwrap().certificate, c.nonseparating_twist(i).unwrap().certificate);
                    ensure(x.same_orders(&y), format!("{} g={g} i={i}: {}/{} vs {}/{}", h.name(), x.gl_order, x.pgl_order, y.gl_order, y.pgl_order))?;
                }
            }
            parts.push(format!("{} g={g} dim {}", h.name(), d.dim()));
        }
    }
    Ok(parts.join(", ") + "; twists compared where a ribbon element exists")
}

fn criterion_6() -> Outcome {
    let z = get("double:Z2");
    let a = adjoint_module(&z);
    ensure(twist(&a).unwrap().is_identity(), "D(Z2): twist of the end is not the identity")?;
    ensure(monodromy(&a, &a).unwrap().is_identity(), "D(Z2): monodromy of the end is not the identity")?;
    let sz = separating_twist_op(&z, 1, 1, BlockOptions::default()).unwrap();
    ensure(sz.operator.matrix.is_identity(), "D(Z2): separating operator is not the identity")?;
    let s = get("double:S3");
    let a = adjoint_module(&s);
    let criterion = twist(&a).unwrap().is_identity() && monodromy(&a, &a).unwrap().is_identity();
    ensure(!criterion, "D(S3) satisfies the annihilation criterion")?;
    let ss = separating_twist_op(&s, 1, 1, BlockOptions::default()).unwrap();
    ensure(!ss.operator.matrix.is_identity(), "D(S3): separating operator is the identity")?;
    Ok("D(Z2) annihilated with identity operator; D(S3) not, operator ≠ id".into())
}

fn criterion_7() -> Outcome {
    let pinned = [("double:Z2", true), ("double:Z3", true), ("double:S3", false), ("double:sweedler", false), ("symmetric:Z2", true)];
    let mut checked = 0;
    for name in CATALOG_NAMES {
        let h = get(name);
        if h.r_matrix().is_none() {
            continue;
        }
        let central = muger_central(&adjoint_module(&h)).unwrap();
        let commutative = h.is_commutative().value;
        ensure(central == commutative, format!("{name}: Müger central {central}, commutative {commutative}"))?;
        if let Some((_, e)) = pinned.iter().find(|(p, _)| p == name) {
            ensure(central == *e, format!("{name}: expected {e}"))?;
        }
        checked += 1;
    }
    ensure(checked == pinned.len(), format!("{checked} entries with R, expected {}", pinned.len()))?;
    Ok(format!("{checked} entries; positives D(Z2), D(Z3), symmetric Z2; negatives D(S3), D(H4)"))
}

fn kernel_points(h: &Arc<HopfData>, g: usize, window: i64) -> Vec<Vec<i64>> {
    let b = BlockSpace::new(h, g, BlockModel::Direct).unwrap();
    let ops: Vec<Matrix> = (1..=g).map(|i| b.nonseparating_twist(i).unwrap().matrix).collect();
    let invs: Vec<Matrix> = ops.iter().map(|m| m.inverse().unwrap()).collect();
    let power = |t: usize, e: i64| if e >= 0 { ops[t].pow(e as u64) } else { invs[t].pow(e.unsigned_abs()) };
    let side = 2 * window + 1;
    let mut found = Vec::new();
    for idx in 0..side.pow(g as u32) {
        let point: Vec<i64> = (0..g).map(|t| idx / side.pow(t as u32) % side - window).collect();
        let m = point.iter().enumerate().fold(Matrix::identity(h.spec(), b.dim()), |acc, (t, &e)| acc.mul(&power(t, e)));
        if m.is_identity() {
            found.push(point);
        }
    }
    found
}

fn lattice(n: i64, g: usize, window: i64) -> Vec<Vec<i64>> {
    let side = 2 * window + 1;
    (0..side.pow(g as u32))
        .map(|idx| (0..g).map(|t| idx / side.pow(t as u32) % side - window).collect::<Vec<i64>>())
        .filter(|p| p.iter().all(|e| e % n == 0))
        .collect()
}

fn criterion_8() -> Outcome {
    let z = get("double:Z2");
    let kz = kernel_points(&z, 2, 4);
    ensure(kz == lattice(2, 2, 4), format!("D(Z2): {} trivial points", kz.len()))?;
    let s = get("double:S3");
    let ks = kernel_points(&s, 2, 6);
    ensure(ks == lattice(6, 2, 6), format!("D(S3): {} trivial points", ks.len()))?;
    Ok(format!("D(Z2) g=2 w=4: {} points = 2Z²; D(S3) g=2 w=6: {} points = 6Z²", kz.len(), ks.len()))
}

fn criterion_9() -> Outcome {
    let mut identities = 0;
    for name in CATALOG_NAMES {
        let h = get(name);
        let a = adjoint_module(&h);
        let mut ms = vec![trivial_module(&h), a.clone()];
        ms.extend(h.characters().iter().take(2).map(|c| character_module(&h, c)));
        // invariants of the monoidal square
        let one = invariants_dim(&a).unwrap();
        let two = invariants_dim(&tensor_power(&a, 2)).unwrap();
        ensure(two >= one * one, format!("{name}: {two} < {one}²"))?;
        identities += 1;
        if h.r_matrix().is_none() {
            continue;
        }
        for m in &ms {
            for n in &ms {
                let mn = tensor_module(m, n).unwrap();
                let q = monodromy(m, n).unwrap();
                for gen in h.generators() {
                    ensure(q.mul(mn.action(gen)) == mn.action(gen).mul(&q), format!("{name}: monodromy is not an intertwiner"))?;
                }
                identities += 1;
                if h.ribbon().is_none() {
                    continue;
                }
                let balanced = monodromy(m, n).unwrap().mul(&twist(m).unwrap().kron(&twist(n).unwrap()));
                ensure(twist(&mn).unwrap() == balanced, format!("{name}: balancing fails"))?;
                let hom = hom_space(m, n).unwrap();
                ensure(twist_is_natural(m, n, &hom).unwrap(), format!("{name}: twist is not natural"))?;
                identities += 2;
            }
        }
    }
    // field laws on a fixed grid of elements
    for spec in [FieldSpec::Rational, FieldSpec::Cyclotomic(12), FieldSpec::Prime(13)] {
        let elems: Vec<FieldElement> = match spec {
            FieldSpec::Cyclotomic(n) => (0..5).map(|k| &FieldElement::zeta(n).pow(k) + &FieldElement::from_i64(spec, k as i64 - 2)).collect(),
            _ => (-2..3).map(|k| FieldElement::from_i64(spec, k * 3 + 1)).collect(),
        };
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    ensure(&(a * b) * c == a * &(b * c), "associativity")?;
                    ensure(a * &(b + c) == &(a * b) + &(a * c), "distributivity")?;
                    ensure(a * b == b * a, "commutativity")?;
                }
                if !a.is_zero() {
                    ensure((a * &a.inv().unwrap()).is_one(), "inverse")?;
                }
            }
        }
        identities += 1;
    }
    Ok(format!("{identities} identity families green"))
}

fn criterion_10() -> Outcome {
    let q = FieldSpec::Rational;
    let unipotent = operator_order(&Matrix::from_i64(q, &[&[1, 1], &[0, 1]])).unwrap();
    ensure(unipotent.gl_order == OrderVerdict::Infinite(InfiniteReason::NotSemisimple), format!("unipotent: {}", unipotent.gl_order))?;
    let companion = operator_order(&Matrix::from_i64(q, &[&[0, 2], &[1, 0]])).unwrap();
    ensure(companion.gl_order == OrderVerdict::Infinite(InfiniteReason::RootNotUnity), format!("x²-2: {}", companion.gl_order))?;
    let c12 = FieldSpec::Cyclotomic(12);
    let z = FieldElement::zeta(12);
    let d = operator_order(&Matrix::diagonal(c12, &[z.pow(4), z.pow(3)])).unwrap();
    ensure(d.gl_order == OrderVerdict::Finite(12), format!("diag(ζ3, ζ4): {}", d.gl_order))?;
    let c3 = FieldSpec::Cyclotomic(3);
    let s = operator_order(&Matrix::scalar(3, &FieldElement::zeta(3))).unwrap();
    ensure(s.gl_order == OrderVerdict::Finite(3) && s.pgl_order == OrderVerdict::Finite(1), "ζ3·I")?;
    let base = Matrix::diagonal(c3, &[FieldElement::one(c3), -FieldElement::one(c3)]);
    let b = operator_order(&base).unwrap();
    ensure(b.gl_order == OrderVerdict::Finite(2) && b.pgl_order == OrderVerdict::Finite(2), "diag(1,-1)")?;
    for (c, gl) in [
        (FieldElement::zeta(3), OrderVerdict::Finite(6)),
        (-FieldElement::one(c3), OrderVerdict::Finite(2)),
        (FieldElement::from_i64(c3, 2), OrderVerdict::Infinite(InfiniteReason::RootNotUnity)),
    ] {
        let t = base.scale(&c);
        let cert = operator_order(&t).unwrap();
        ensure(cert.gl_order == gl, format!("{c}·diag(1,-1): gl {}", cert.gl_order))?;
        ensure(cert.pgl_order == OrderVerdict::Finite(2), format!("{c}·diag(1,-1): pgl {}", cert.pgl_order))?;
        // PGL order is the GL order of conjugation X ↦ T X T^{-1}, i.e. T ⊗ T^{-T}
        let conj = t.kron(&t.inverse().unwrap().transpose());
        ensure(operator_order(&conj).unwrap().gl_order == cert.pgl_order, "conjugation operator disagrees")?;
    }
    Ok("unipotent, x²-2, diag(ζ3, ζ4), scalar multiples".into())
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    for (n, f) in criteria {
        let t0 = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = t0.elapsed().as_secs_f64();
        match outcome {
            Ok(d) => println!("criterion {n:>2}: PASS ({secs:.1} s) {d}"),
            Err(d) => {
                failed += 1;
                println!("criterion {n:>2}: FAIL ({secs:.1} s) {d}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
