use hopf_blocks::catalog::{self, CATALOG_NAMES};
use hopf_blocks::error::Error;
use hopf_blocks::hopf::{CheckMode, HopfData};
use hopf_blocks::scalar::{FieldElement, FieldSpec};

#[test]
fn every_entry_round_trips_byte_for_byte() {
    for name in CATALOG_NAMES {
        let h = catalog::get(name).unwrap();
        let text = catalog::to_json(&h);
        let back = catalog::from_json(&text, CheckMode::Auto).unwrap();
        assert_eq!(catalog::to_json(&back), text, "{name}");
        assert_eq!(back.dim(), h.dim());
    }
}

#[test]
fn save_and_load() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    let h = catalog::get("double:Z3").unwrap();
    catalog::save(&h, &path).unwrap();
    let back = catalog::load(&path).unwrap();
    assert_eq!(back.to_parts().mult, h.to_parts().mult);
    let resolved = catalog::resolve(path.to_str().unwrap(), CheckMode::Auto).unwrap();
    assert_eq!(resolved.name(), h.name());
}

#[test]
fn corrupted_structure_constant_fails_validation() {
    let text = catalog::to_json(&catalog::get("double:Z2").unwrap());
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["mult"][0][3] = serde_json::json!("2");
    let err = catalog::from_json(&doc.to_string(), CheckMode::Auto).unwrap_err();
    match err {
        Error::ValidationFailed(report) => assert!(report.failures().count() > 0),
        other => panic!("expected a validation failure, got {other}"),
    }
}

#[test]
fn malformed_documents_report_positions() {
    let err = catalog::from_json("{\n  \"name\": \"x\",\n  \"dim\": }", CheckMode::Auto).unwrap_err();
    assert_eq!(err.code(), "ParseError");
    assert!(err.to_string().contains("line 3"), "{err}");

    let text = catalog::to_json(&catalog::get("group:Z2").unwrap());
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["colour"] = serde_json::json!(1);
    assert_eq!(catalog::from_json(&doc.to_string(), CheckMode::Auto).unwrap_err().code(), "ParseError");

    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["mult"][1][3] = serde_json::json!("1/0");
    assert_eq!(catalog::from_json(&doc.to_string(), CheckMode::Auto).unwrap_err().code(), "ParseError");
}

#[test]
fn cyclotomic_files_round_trip() {
    // Q(ζ_3)[Z/3] on the group basis
    let spec = FieldSpec::Cyclotomic(3);
    let lift = |c: &FieldElement| FieldElement::from_rational(spec, &c.to_rational().unwrap()).unwrap();
    let mut p = catalog::get("group:Z3").unwrap().to_parts();
    p.spec = spec;
    p.name = "group:Z3 over Q(z3)".into();
    p.mult.iter_mut().for_each(|t| t.3 = lift(&t.3));
    p.comult.iter_mut().for_each(|t| t.3 = lift(&t.3));
    p.antipode.iter_mut().for_each(|t| t.2 = lift(&t.2));
    p.unit = p.unit.iter().map(lift).collect();
    p.counit = p.counit.iter().map(lift).collect();
    p.simple_characters.clear();
    let h = HopfData::new(p).unwrap();
    assert!(h.validate().passed());
    // over Q(ζ_3) all three characters of Z/3 are defined
    assert_eq!(h.characters().len(), 3);
    let text = catalog::to_json(&h);
    assert!(text.contains("\"cyclotomic\""));
    let back = catalog::from_json(&text, CheckMode::Auto).unwrap();
    assert_eq!(back.spec(), spec);
    assert_eq!(catalog::to_json(&back), text);
}
