//! Block spaces in both models for the catalog doubles.

use hopf_blocks::blocks::{BlockModel, BlockSpace};
use hopf_blocks::catalog;

fn main() {
    for name in ["double:Z2", "double:Z3", "double:S3", "double:sweedler"] {
        let h = catalog::get(name).unwrap();
        for g in 0..=2 {
            let direct = BlockSpace::new(&h, g, BlockModel::Direct).unwrap();
            let center = if g > 0 { BlockSpace::new(&h, g, BlockModel::RelativeCenter).ok().map(|b| b.dim()) } else { None };
            println!("{name:<16} genus {g}: direct {:>4}  center {}", direct.dim(), center.map_or("-".into(), |d| format!("{d:>4}")));
        }
    }
}
