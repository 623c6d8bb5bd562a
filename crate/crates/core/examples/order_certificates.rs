//! Exact order certificates in GL and PGL.

use hopf_blocks::linalg::{operator_order, operator_order_with_cap, Matrix};
use hopf_blocks::scalar::{FieldElement, FieldSpec};

fn show(label: &str, m: &Matrix) {
    let c = operator_order(m).unwrap();
    println!("{label:<24} GL {:<28} PGL {:<28} minpoly {:?}", c.gl_order.to_string(), c.pgl_order.to_string(), c.minpoly);
}

fn main() {
    let q = FieldSpec::Rational;
    show("diag(1, -1)", &Matrix::from_i64(q, &[&[1, 0], &[0, -1]]));
    show("Jordan block", &Matrix::from_i64(q, &[&[1, 1], &[0, 1]]));
    show("companion of x^2 - 2", &Matrix::from_i64(q, &[&[0, 2], &[1, 0]]));
    let z = FieldElement::zeta(12);
    show("diag(ζ3, ζ4)", &Matrix::diagonal(z.spec(), &[z.pow(4), z.pow(3)]));
    show("ζ3 · I", &Matrix::scalar(3, &FieldElement::zeta(3)));

    let f = FieldSpec::prime(7).unwrap();
    let t = Matrix::scalar(1, &FieldElement::from_i64(f, 3));
    println!("3 in F_7 with cap 4: {}", operator_order_with_cap(&t, 4).unwrap().gl_order);
}
