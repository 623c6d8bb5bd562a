//! Exact arithmetic in cyclotomic fields and prime fields.

use hopf_blocks::scalar::{cyclotomic_polynomial, FieldElement, FieldSpec};

fn main() {
    let z = FieldElement::zeta(12);
    let spec = z.spec();
    println!("field {spec}, degree {}", spec.degree());
    println!("Φ_12 coefficients: {:?}", cyclotomic_polynomial(12));
    let a = &z.pow(4) + &FieldElement::from_i64(spec, 1);
    println!("ζ^4 + 1 = {a}");
    println!("(ζ^4 + 1)^-1 = {}", a.inv().unwrap());
    println!("ζ^12 = {}", z.pow(12));
    println!("galois ζ ↦ ζ^5 of ζ^4 + 1: {}", a.galois(5));

    let q = FieldElement::parse_rational(FieldSpec::Rational, "-7/21").unwrap();
    println!("-7/21 normalizes to {q}");

    let f = FieldSpec::prime(101).unwrap();
    let x = FieldElement::from_i64(f, 7);
    println!("7^-1 in F_101 = {}", x.inv().unwrap());
}
