//! Finding a dense subset of A skew to B.

use num_bigint::BigInt;
use num_rational::BigRational;

use dense_matroids::analysis::{skew_dense_subset, SkewParams};
use dense_matroids::geometry::ProjectiveGeometry;
use dense_matroids::{ElemSet, Evidence, FieldSpec, Result, VerdictKind};

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn run_example() -> Result<()> {
    let g = ProjectiveGeometry::new(4, &FieldSpec::of_order(2)?)?;
    let m = g.matroid();

    // A a plane with 7 points, B a point off it: 7 > λ μ^3 = 4
    let a = g.coordinate_flat(&[0, 1, 2])?.members;
    let b = ElemSet::singleton(g.unit(3));
    let params = SkewParams::new(ratio(1, 2), ratio(2, 1), 2, 1)?;
    println!("required coefficient λ((μ-1)/ℓ)^t = {}", params.target_coefficient());
    let v = skew_dense_subset(m, &a, &b, &params, true)?;
    let Some(Evidence::Subset { set, rank, points }) = v.witness else {
        unreachable!("a plane has points skew to an outside point")
    };
    println!("skew subset {set}: rank {rank}, {points} points");
    assert!(m.skew(&set, &b)?);

    // when A lies in cl(B) nothing nonempty is skew to B
    let b = ElemSet::singleton(g.unit(0)).with(g.unit(1));
    let a = m.closure(&b)?.members - b;
    let params = SkewParams::new(ratio(1, 4), ratio(2, 1), 2, 2)?;
    let v = skew_dense_subset(m, &a, &b, &params, false)?;
    println!("A = {a} inside cl(B): {:?}", v.kind);
    assert_eq!(v.kind, VerdictKind::Refuted);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
