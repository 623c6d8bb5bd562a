//! Validates every built-in algebra and prints its structural predicates.

use hopf_blocks::catalog::{self, CATALOG_NAMES};

fn main() {
    for name in CATALOG_NAMES {
        let h = catalog::get(name).unwrap();
        let r = h.validate();
        let factorizable = r.is_factorizable.as_ref().map_or("-".to_string(), |p| p.value.to_string());
        println!(
            "{name:<16} dim {:>2}  axioms {:>2} ({})  commutative {:<5}  unimodular {:<5}  factorizable {:<5}  ribbon {}",
            h.dim(),
            r.axioms.len(),
            if r.passed() { "ok" } else { "FAIL" },
            r.is_commutative.value,
            r.is_unimodular.value,
            factorizable,
            h.ribbon().is_some()
        );
    }
}
