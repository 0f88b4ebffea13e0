//! Arithmetic in GF(p^e): moduli, inverses and the Frobenius map.

use dense_matroids::{FieldSpec, Result};

pub fn run_example() -> Result<()> {
    let gf4 = FieldSpec::of_order(4)?;
    let gf9 = FieldSpec::of_order(9)?;
    println!("GF(4) modulus {:?}, GF(9) modulus {:?}", gf4.modulus(), gf9.modulus());
    assert_eq!(gf4.modulus(), &[1, 1, 1]);
    assert_eq!(gf9.modulus(), &[1, 0, 1]);

    // ω is the class of x; ω^2 = ω + 1 and ω^3 = 1
    let w = gf4.element(&[0, 1])?;
    let w2 = w.mul(&w)?;
    assert_eq!(w2, w.add(&gf4.one())?);
    assert_eq!(w.pow(3), gf4.one());
    println!("in GF(4): ω^2 = {:?}, ω^-1 = {:?}", w2.coeffs(), w.inv()?.coeffs());

    // every nonzero element of GF(9) has an inverse, and x^9 = x
    for a in gf9.elements().into_iter().filter(|a| !a.is_zero()) {
        assert_eq!(a.mul(&a.inv()?)?, gf9.one());
        assert_eq!(a.pow(9), a);
    }
    println!("GF(9): all 8 inverses check out, Frobenius has order 2");

    assert!(FieldSpec::of_order(6).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
