//! Runs every instance check on one algebra (default double:S3) and prints the report.
//!
//! `cargo run --release --example theorem_report -- double:Z3 json`

use hopf_blocks::blocks::BlockOptions;
use hopf_blocks::catalog;
use hopf_blocks::harness::run_all;

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "double:S3".into());
    let h = catalog::get(&name).unwrap();
    let report = run_all(&h, 2, 6, BlockOptions::default());
    if args.next().as_deref() == Some("json") {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_table());
    }
}
