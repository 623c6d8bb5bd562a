//! Intertwiners and twists in the module category of the double of S3.

use hopf_blocks::catalog;
use hopf_blocks::linalg::operator_order;
use hopf_blocks::repcat::*;

fn main() {
    let h = catalog::get("double:S3").unwrap();
    let end = adjoint_module(&h);
    let reg = regular_module(&h);
    println!("dim Hom(I, 𝔸) = {}", invariants_dim(&end).unwrap());
    println!("dim Hom(𝔸, 𝔸) = {}", hom_space(&end, &end).unwrap().dim());
    println!("θ_𝔸 order: {}", operator_order(&twist(&end).unwrap()).unwrap().gl_order);
    println!("θ on the regular module: {}", operator_order(&twist(&reg).unwrap()).unwrap().gl_order);
    println!("c² on 𝔸 ⊗ G trivial: {}", monodromy(&end, &reg).unwrap().is_identity());
    println!("𝔸 Müger central: {}", muger_central(&end).unwrap());
    for chi in h.characters() {
        let m = character_module(&h, &chi);
        println!("character θ = {}", twist(&m).unwrap().as_scalar().unwrap());
    }
}
