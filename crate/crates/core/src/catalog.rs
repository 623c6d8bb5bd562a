//! Shipped example algebras and the JSON algebra file format.
//!
//! Catalog names: `group:Z2`, `group:Z3`, `group:S3`, `double:Z2`, `double:Z3`,
//! `double:S3`, `sweedler`, `double:sweedler`, and `symmetric:Z2` (the group algebra of
//! `Z/2` with `R = 1 ⊗ 1` and `v = 1`, which is not factorizable).

use std::collections::HashMap;
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hopf::{CheckMode, HopfData, HopfParts};
use crate::scalar::{parse_rational, FieldElement, FieldSpec};

pub const CATALOG_NAMES: &[&str] = &[
    "group:Z2",
    "group:Z3",
    "group:S3",
    "double:Z2",
    "double:Z3",
    "double:S3",
    "sweedler",
    "double:sweedler",
    "symmetric:Z2",
];

/// A finite group by its multiplication table.
#[derive(Debug, Clone)]
pub struct Group {
    pub name: String,
    pub labels: Vec<String>,
    /// `table[a][b]` is the index of `ab`.
    pub table: Vec<Vec<usize>>,
}

impl Group {
    pub fn new(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let g = Group { name: name.into(), labels, table };
        g.check()?;
        Ok(g)
    }

    fn check(&self) -> Result<()> {
        let n = self.labels.len();
        if n == 0 || self.table.len() != n || self.table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::NotAGroup("table shape".into()));
        }
        let e = self.identity().ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| self.table[a][b] == e && self.table[b][a] == e) {
                return Err(Error::NotAGroup(format!("{} has no inverse", self.labels[a])));
            }
            for b in 0..n {
                for c in 0..n {
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                        return Err(Error::NotAGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|a| self.table[e][a] == a && self.table[a][e] == a))
    }

    pub fn inverse(&self, a: usize) -> usize {
        let e = self.identity().expect("checked");
        (0..self.order()).find(|&b| self.table[a][b] == e).expect("checked")
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|k| if k == 0 { "e".to_string() } else { format!("c{k}") }).collect();
        Group::new(format!("Z{n}"), labels, table).expect("cyclic group")
    }

    /// `S_3` as permutations of `{0, 1, 2}`, composed as functions (`(ab)(x) = a(b(x))`).
    pub fn s3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let labels = ["e", "(01)", "(12)", "(02)", "(012)", "(021)"].map(String::from).to_vec();
        let find = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        let table = (0..6)
            .map(|a| (0..6).map(|b| find([0, 1, 2].map(|x| perms[a][perms[b][x]]))).collect())
            .collect();
        Group::new("S3", labels, table).expect("S3")
    }
}

fn q(x: i64) -> FieldElement {
    FieldElement::from_i64(FieldSpec::Rational, x)
}

pub fn group_algebra(g: &Group) -> Result<HopfData> {
    g.check()?;
    let n = g.order();
    let e = g.identity().expect("checked");
    let mut unit = vec![q(0); n];
    unit[e] = q(1);
    HopfData::new(HopfParts {
        name: g.name.clone(),
        spec: FieldSpec::Rational,
        basis_labels: g.labels.clone(),
        mult: (0..n).flat_map(|a| (0..n).map(move |b| (a, b, g.table[a][b], q(1)))).collect(),
        unit,
        comult: (0..n).map(|a| (a, a, a, q(1))).collect(),
        counit: vec![q(1); n],
        antipode: (0..n).map(|a| (a, g.inverse(a), q(1))).collect(),
        r_matrix: None,
        ribbon: None,
        generators: None,
        simple_characters: Vec::new(),
    })
}

/// `D(k[G])` with the ribbon element `v = Σ_g δ_g ⊗ g` (so `v^{-1} = Σ_g δ_g ⊗ g^{-1}`).
/// The candidate is machine-checked; on failure its inverse is tried, then a search.
pub fn double_of_group(g: &Group) -> Result<HopfData> {
    let n = g.order();
    let d = group_algebra(g)?.drinfeld_double()?.with_name(format!("double:{}", g.name));
    let spec = d.spec();
    let element = |f: &dyn Fn(usize) -> usize| {
        let mut v = vec![FieldElement::zero(spec); n * n];
        for x in 0..n {
            v[x * n + f(x)] = FieldElement::one(spec);
        }
        v
    };
    let shipped = element(&|x| x);
    let inverse = element(&|x| g.inverse(x));
    let d = attach_ribbon(d, &[shipped, inverse])?;
    let chars = d.characters();
    Ok(d.with_simple_characters(chars))
}

/// Attaches the first candidate passing the ribbon axioms, falling back to
/// [`HopfData::find_ribbon`].
pub fn attach_ribbon(h: HopfData, candidates: &[Vec<FieldElement>]) -> Result<HopfData> {
    for v in candidates {
        if h.check_ribbon(v).iter().all(|a| a.passed) {
            return Ok(h.with_ribbon(Some(v.clone())));
        }
    }
    let v = h.find_ribbon()?;
    Ok(h.with_ribbon(Some(v)))
}

/// Sweedler's algebra on `{1, g, x, gx}`: `g² = 1`, `x² = 0`, `xg = -gx`,
/// `Δg = g ⊗ g`, `Δx = x ⊗ 1 + g ⊗ x`, `S(g) = g`, `S(x) = -gx`.
pub fn sweedler() -> HopfData {
    let (one, g, x, gx) = (0, 1, 2, 3);
    let mut mult = Vec::new();
    for b in 0..4 {
        mult.push((one, b, b, q(1)));
        if b != one {
            mult.push((b, one, b, q(1)));
        }
    }
    mult.extend([
        (g, g, one, q(1)),
        (g, x, gx, q(1)),
        (g, gx, x, q(1)),
        (x, g, gx, q(-1)),
        (gx, g, x, q(-1)),
    ]);
    let comult = vec![
        (one, one, one, q(1)),
        (g, g, g, q(1)),
        (x, x, one, q(1)),
        (x, g, x, q(1)),
        (gx, gx, g, q(1)),
        (gx, one, gx, q(1)),
    ];
    HopfData::new(HopfParts {
        name: "sweedler".into(),
        spec: FieldSpec::Rational,
        basis_labels: ["1", "g", "x", "gx"].map(String::from).to_vec(),
        mult,
        unit: vec![q(1), q(0), q(0), q(0)],
        comult,
        counit: vec![q(1), q(1), q(0), q(0)],
        antipode: vec![(one, one, q(1)), (g, g, q(1)), (x, gx, q(-1)), (gx, x, q(1))],
        r_matrix: None,
        ribbon: None,
        generators: Some(vec![g, x]),
        simple_characters: Vec::new(),
    })
    .expect("well-formed")
}

/// `D(H_4)` together with the outcome of the ribbon search. No element is shipped: the
/// search over `u l^{±1}` is exhaustive here since all grouplikes are rational.
pub fn sweedler_double_with_status() -> (HopfData, Option<Error>) {
    let d = sweedler().drinfeld_double().expect("antipode invertible").with_name("double:sweedler");
    let chars = d.characters();
    let d = d.with_simple_characters(chars);
    match d.find_ribbon() {
        Ok(v) => (d.with_ribbon(Some(v)), None),
        Err(e) => (d, Some(e)),
    }
}

pub fn sweedler_double() -> HopfData {
    sweedler_double_with_status().0
}

/// `Q[Z/2]` with `R = 1 ⊗ 1` and `v = 1`: ribbon but symmetric, hence not factorizable.
pub fn symmetric_z2() -> HopfData {
    let h = group_algebra(&Group::cyclic(2)).expect("Z2");
    let spec = h.spec();
    let unit = h.unit().to_vec();
    h.with_name("symmetric:Z2")
        .with_r_matrix(Some(vec![(0, FieldElement::one(spec))]))
        .with_ribbon(Some(unit))
}

fn build(name: &str) -> Result<HopfData> {
    let with_chars = |h: HopfData| {
        let c = h.characters();
        h.with_simple_characters(c)
    };
    let named = |h: HopfData, n: &str| h.with_name(n);
    Ok(match name {
        "group:Z2" => with_chars(named(group_algebra(&Group::cyclic(2))?, name)),
        "group:Z3" => with_chars(named(group_algebra(&Group::cyclic(3))?, name)),
        "group:S3" => with_chars(named(group_algebra(&Group::s3())?, name)),
        "double:Z2" => double_of_group(&Group::cyclic(2))?,
        "double:Z3" => double_of_group(&Group::cyclic(3))?,
        "double:S3" => double_of_group(&Group::s3())?,
        "sweedler" => with_chars(sweedler()),
        "double:sweedler" => sweedler_double(),
        "symmetric:Z2" => with_chars(symmetric_z2()),
        _ => return Err(Error::parse("algebra", format!("unknown catalog name `{name}`"))),
    })
}

static CACHE: OnceLock<Mutex<HashMap<String, Arc<HopfData>>>> = OnceLock::new();

/// A catalog entry by name, built once per process.
pub fn get(name: &str) -> Result<Arc<HopfData>> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(h) = cache.lock().expect("cache").get(name) {
        return Ok(h.clone());
    }
    let h = Arc::new(build(name)?);
    cache.lock().expect("cache").insert(name.to_string(), h.clone());
    Ok(h)
}

/// A catalog name or the path of an algebra file.
pub fn resolve(spec: &str, mode: CheckMode) -> Result<Arc<HopfData>> {
    if CATALOG_NAMES.contains(&spec) {
        get(spec)
    } else {
        load_with(spec, mode).map(Arc::new)
    }
}

// -------------------------------------------------------------------------
// file format

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDecl {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Flags {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub simple_modules: Option<Vec<Vec<Value>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub field: FieldDecl,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<Value>,
    pub mult: Vec<Vec<Value>>,
    pub comult: Vec<Vec<Value>>,
    pub counit: Vec<Value>,
    pub antipode: Vec<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r_matrix: Option<Vec<Vec<Value>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ribbon: Option<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generators: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub flags: Option<Flags>,
}

fn field_decl(spec: FieldSpec) -> FieldDecl {
    match spec {
        FieldSpec::Rational => FieldDecl { kind: "Q".into(), n: None, p: None },
        FieldSpec::Cyclotomic(n) => FieldDecl { kind: "cyclotomic".into(), n: Some(n), p: None },
        FieldSpec::Prime(p) => FieldDecl { kind: "Fp".into(), n: None, p: Some(p) },
    }
}

fn field_spec(decl: &FieldDecl) -> Result<FieldSpec> {
    let missing = |what: &str| Error::parse("field", format!("missing `{what}`"));
    Ok(match decl.kind.as_str() {
        "Q" => FieldSpec::Rational,
        "cyclotomic" => FieldSpec::cyclotomic(decl.n.ok_or_else(|| missing("n"))?)?,
        "Fp" => FieldSpec::prime(decl.p.ok_or_else(|| missing("p"))?)?,
        other => return Err(Error::parse("field.kind", format!("unknown field kind `{other}`"))),
    })
}

/// Rationals and prime-field values as strings, cyclotomic values as coefficient arrays.
pub fn scalar_to_json(x: &FieldElement) -> Value {
    match x {
        FieldElement::Rational(r) => Value::String(r.to_string()),
        FieldElement::Prime { value, .. } => Value::String(value.to_string()),
        FieldElement::Cyclotomic { coeffs, .. } => Value::Array(coeffs.iter().map(|c| Value::String(c.to_string())).collect()),
    }
}

pub fn scalar_from_json(spec: FieldSpec, v: &Value, location: &str) -> Result<FieldElement> {
    let bad = |m: &str| Error::parse(location, m.to_string());
    match (spec, v) {
        (FieldSpec::Cyclotomic(n), Value::Array(items)) => {
            let coeffs = items
                .iter()
                .map(|c| match c {
                    Value::String(s) => parse_rational(s).map_err(|e| bad(&e.to_string())),
                    _ => Err(bad("expected a rational string")),
                })
                .collect::<Result<Vec<_>>>()?;
            if coeffs.len() > spec.degree() {
                return Err(bad("too many cyclotomic coefficients"));
            }
            Ok(FieldElement::cyclotomic_from_coeffs(n, &coeffs))
        }
        (_, Value::String(s)) => FieldElement::parse_rational(spec, s).map_err(|e| bad(&e.to_string())),
        (_, Value::Number(num)) if num.is_i64() => Ok(FieldElement::from_i64(spec, num.as_i64().expect("i64"))),
        _ => Err(bad("expected an exact scalar")),
    }
}

fn index_from_json(v: &Value, location: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::parse(location, "expected a non-negative index"))
}

fn vector(spec: FieldSpec, v: &[Value], loc: &str) -> Result<Vec<FieldElement>> {
    v.iter().enumerate().map(|(i, x)| scalar_from_json(spec, x, &format!("{loc}[{i}]"))).collect()
}

fn entries<const K: usize>(spec: FieldSpec, v: &[Vec<Value>], loc: &str) -> Result<Vec<([usize; K], FieldElement)>> {
    v.iter()
        .enumerate()
        .map(|(n, row)| {
            let here = format!("{loc}[{n}]");
            if row.len() != K + 1 {
                return Err(Error::parse(&here, format!("expected {} entries", K + 1)));
            }
            let mut idx = [0usize; K];
            for (t, slot) in idx.iter_mut().enumerate() {
                *slot = index_from_json(&row[t], &here)?;
            }
            Ok((idx, scalar_from_json(spec, &row[K], &here)?))
        })
        .collect()
}

impl AlgebraFile {
    pub fn from_hopf(h: &HopfData) -> Self {
        let p = h.to_parts();
        let sc = scalar_to_json;
        let mut mult: Vec<([usize; 3], Value)> = p.mult.iter().map(|(i, j, k, c)| ([*i, *j, *k], sc(c))).collect();
        let mut comult: Vec<([usize; 3], Value)> = p.comult.iter().map(|(i, j, k, c)| ([*i, *j, *k], sc(c))).collect();
        let mut antipode: Vec<([usize; 2], Value)> = p.antipode.iter().map(|(i, j, c)| ([*i, *j], sc(c))).collect();
        mult.sort_by_key(|e| e.0);
        comult.sort_by_key(|e| e.0);
        antipode.sort_by_key(|e| e.0);
        let rows3 = |v: Vec<([usize; 3], Value)>| {
            v.into_iter()
                .map(|(i, c)| i.iter().map(|&x| Value::from(x)).chain([c]).collect())
                .collect::<Vec<Vec<Value>>>()
        };
        let rows2 = |v: Vec<([usize; 2], Value)>| {
            v.into_iter()
                .map(|(i, c)| i.iter().map(|&x| Value::from(x)).chain([c]).collect())
                .collect::<Vec<Vec<Value>>>()
        };
        let r_matrix = p.r_matrix.as_ref().map(|r| {
            let mut r: Vec<([usize; 2], Value)> = r.iter().map(|(i, j, c)| ([*i, *j], sc(c))).collect();
            r.sort_by_key(|e| e.0);
            rows2(r)
        });
        let flags = (!p.simple_characters.is_empty()).then(|| Flags {
            simple_modules: Some(p.simple_characters.iter().map(|c| c.iter().map(sc).collect()).collect()),
        });
        AlgebraFile {
            name: p.name,
            field: field_decl(p.spec),
            dim: p.basis_labels.len(),
            basis: p.basis_labels,
            unit: p.unit.iter().map(sc).collect(),
            mult: rows3(mult),
            comult: rows3(comult),
            counit: p.counit.iter().map(sc).collect(),
            antipode: rows2(antipode),
            r_matrix,
            ribbon: p.ribbon.as_ref().map(|v| v.iter().map(sc).collect()),
            generators: p.generators,
            flags,
        }
    }

    /// Builds the algebra without validating it.
    pub fn to_hopf(&self) -> Result<HopfData> {
        let spec = field_spec(&self.field)?;
        if self.basis.len() != self.dim {
            return Err(Error::parse("basis", format!("{} labels for dim {}", self.basis.len(), self.dim)));
        }
        let mult = entries::<3>(spec, &self.mult, "mult")?;
        let comult = entries::<3>(spec, &self.comult, "comult")?;
        let antipode = entries::<2>(spec, &self.antipode, "antipode")?;
        let r_matrix = match &self.r_matrix {
            Some(r) => Some(entries::<2>(spec, r, "r_matrix")?.into_iter().map(|([i, j], c)| (i, j, c)).collect()),
            None => None,
        };
        let ribbon = match &self.ribbon {
            Some(v) => Some(vector(spec, v, "ribbon")?),
            None => None,
        };
        let simple_characters = match self.flags.as_ref().and_then(|f| f.simple_modules.as_ref()) {
            Some(list) => list
                .iter()
                .enumerate()
                .map(|(n, c)| vector(spec, c, &format!("flags.simple_modules[{n}]")))
                .collect::<Result<_>>()?,
            None => Vec::new(),
        };
        HopfData::new(HopfParts {
            name: self.name.clone(),
            spec,
            basis_labels: self.basis.clone(),
            mult: mult.into_iter().map(|([i, j, k], c)| (i, j, k, c)).collect(),
            unit: vector(spec, &self.unit, "unit")?,
            comult: comult.into_iter().map(|([i, j, k], c)| (i, j, k, c)).collect(),
            counit: vector(spec, &self.counit, "counit")?,
            antipode: antipode.into_iter().map(|([i, j], c)| (i, j, c)).collect(),
            r_matrix,
            ribbon,
            generators: self.generators.clone(),
            simple_characters,
        })
    }
}

/// Canonical JSON text of an algebra.
pub fn to_json(h: &HopfData) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraFile::from_hopf(h)).expect("serializable");
    s.push('\n');
    s
}

/// Parses and validates an algebra from JSON text.
pub fn from_json(text: &str, mode: CheckMode) -> Result<HopfData> {
    let file: AlgebraFile = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    let h = file.to_hopf()?;
    let report = h.validate_with(mode);
    if !report.passed() {
        return Err(Error::ValidationFailed(Box::new(report)));
    }
    Ok(h)
}

pub fn load(path: impl AsRef<Path>) -> Result<HopfData> {
    load_with(path, CheckMode::Auto)
}

pub fn load_with(path: impl AsRef<Path>, mode: CheckMode) -> Result<HopfData> {
    from_json(&std::fs::read_to_string(path)?, mode)
}

pub fn save(h: &HopfData, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_json(h))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_are_groups() {
        for g in [Group::cyclic(2), Group::cyclic(3), Group::s3()] {
            assert!(g.check().is_ok());
        }
        let bad = Group::new("bad", vec!["a".into(), "b".into()], vec![vec![0, 0], vec![0, 0]]);
        assert!(matches!(bad, Err(Error::NotAGroup(_))));
    }

    #[test]
    fn s3_is_noncommutative() {
        let h = group_algebra(&Group::s3()).unwrap();
        assert_eq!(h.dim(), 6);
        assert!(!h.is_commutative().value);
        assert!(h.validate().passed());
    }

    #[test]
    fn sweedler_is_not_unimodular() {
        let h = sweedler();
        let rep = h.validate();
        assert!(rep.passed(), "{}", rep.failures_summary());
        assert!(!rep.is_unimodular.value);
        assert!(!h.is_semisimple());
    }

    #[test]
    fn json_round_trip() {
        let h = get("double:Z2").unwrap();
        let text = to_json(&h);
        let back = from_json(&text, CheckMode::Full).unwrap();
        assert_eq!(to_json(&back), text);
    }

    #[test]
    fn group_doubles_carry_the_shipped_ribbon() {
        for g in [Group::cyclic(3), Group::s3()] {
            let n = g.order();
            let d = double_of_group(&g).unwrap();
            let v = d.ribbon().unwrap();
            for x in 0..n {
                for y in 0..n {
                    assert_eq!(v[x * n + y].is_one(), y == x);
                }
            }
        }
    }

    #[test]
    fn unknown_name() {
        assert!(get("double:Z7").is_err());
    }
}
