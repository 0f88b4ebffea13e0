//! (q,k)-fullness, critical elements and the lines through them.

use dense_matroids::analysis::{critical_dichotomy_check, critical_elements, fullness, Fullness, FullnessParams};
use dense_matroids::geometry::{principal_extension, truncate, ProjectiveGeometry};
use dense_matroids::{FieldSpec, Result, VerdictKind};

pub fn run_example() -> Result<()> {
    let gf2 = FieldSpec::of_order(2)?;
    let t = truncate(ProjectiveGeometry::new(4, &gf2)?.matroid(), 1)?;
    let p = FullnessParams::new(2, 1)?;
    println!("truncated PG(3, 2): ε = {}, t(3) = {}", t.epsilon(), p.threshold(3));
    assert_eq!(fullness(&t, p), Fullness::Overfull);
    assert!(critical_elements(&t, p)?.is_empty());

    // PG(2, 2) plus a point on a line is (2,0)-overfull
    let g = ProjectiveGeometry::new(3, &gf2)?;
    let line = g.coordinate_flat(&[0, 1])?.members;
    let (m, _) = principal_extension(g.matroid(), &line)?;
    let p0 = FullnessParams::new(2, 0)?;
    let crit = critical_elements(&m, p0)?;
    println!("critical elements: {crit}");
    for e in crit.iter() {
        let v = critical_dichotomy_check(&m, p0, e)?;
        assert_eq!(v.kind, VerdictKind::Witness);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
