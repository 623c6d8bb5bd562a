//! Builds the double of Sweedler's algebra and searches for a ribbon element.

use hopf_blocks::catalog;

fn main() {
    let h = catalog::sweedler();
    let d = h.drinfeld_double().unwrap();
    println!("{}: dim {}", d.name(), d.dim());
    println!("validates: {}", d.validate().passed());
    println!("factorizable: {}", d.is_factorizable().unwrap().value);
    println!("grouplikes: {}", d.grouplikes().len());
    match d.find_ribbon() {
        Ok(v) => println!("ribbon element found: {v:?}"),
        Err(e) => println!("ribbon search: {e}"),
    }

    let s3 = catalog::get("double:S3").unwrap();
    let cert = s3.ribbon_order().unwrap();
    println!("{}: ribbon order GL {} / PGL {}", s3.name(), cert.gl_order, cert.pgl_order);
    let u = s3.drinfeld_element().unwrap();
    println!("Drinfeld element central: {}", s3.left_mult_matrix(&u) == s3.right_mult_matrix(&u));
}
