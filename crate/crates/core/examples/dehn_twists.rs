//! Dehn twists of each supported kind with their order certificates.

use hopf_blocks::blocks::{bounding_pair_op, separating_twist_op, BlockModel, BlockOptions, BlockSpace};
use hopf_blocks::catalog;
use hopf_blocks::linalg::DEFAULT_ORDER_CAP;
use hopf_blocks::repcat::regular_module;

fn main() {
    for name in ["double:Z2", "double:Z3", "double:S3"] {
        let h = catalog::get(name).unwrap();
        println!("{name}: |θ| = {}", h.ribbon_order().unwrap().gl_order);
        let b = BlockSpace::new(&h, 2, BlockModel::Direct).unwrap();
        for i in 1..=2 {
            let op = b.nonseparating_twist(i).unwrap();
            println!("  {} on dim {}: GL {} PGL {}", op.kind, op.dim(), op.certificate.gl_order, op.certificate.pgl_order);
        }
        let s = separating_twist_op(&h, 1, 1, BlockOptions::default()).unwrap();
        println!(
            "  {}: PGL {}, |θ on 𝔸| = {}",
            s.operator.kind, s.operator.certificate.pgl_order, s.target_twist.gl_order
        );
        let r = regular_module(&h);
        let bp = bounding_pair_op(&h, &r, &r, DEFAULT_ORDER_CAP).unwrap();
        println!("  {}: identity {}, GL {}", bp.kind, bp.matrix.is_identity(), bp.certificate.gl_order);
    }
}
