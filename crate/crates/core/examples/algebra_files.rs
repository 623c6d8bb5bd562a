//! JSON round trip of a catalog algebra, then rejection of a corrupted copy.

use hopf_blocks::catalog;
use hopf_blocks::hopf::CheckMode;

fn main() {
    let h = catalog::get("double:Z2").unwrap();
    let text = catalog::to_json(&h);
    println!("{} bytes of JSON, first lines:", text.len());
    for line in text.lines().take(8) {
        println!("  {line}");
    }
    let back = catalog::from_json(&text, CheckMode::Auto).unwrap();
    println!("round trip identical: {}", catalog::to_json(&back) == text);

    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["antipode"][0][2] = serde_json::json!("5");
    match catalog::from_json(&doc.to_string(), CheckMode::Auto) {
        Ok(_) => println!("corrupted file accepted?"),
        Err(e) => println!("corrupted file: error[{}] {e}", e.code()),
    }
}
