//! A 6-point line and one more point in a binary frame force a U_{2,7}-minor.

use dense_matroids::analysis::long_line_checks;
use dense_matroids::geometry::{principal_extension, ProjectiveGeometry};
use dense_matroids::{FieldSpec, Result, VerdictKind};

pub fn run_example() -> Result<()> {
    let g = ProjectiveGeometry::new(7, &FieldSpec::of_order(2)?)?;
    let r = g.matroid().ground();
    let line = g.coordinate_flat(&[0, 1])?.members;
    let mut m = g.matroid().clone();
    for _ in 0..3 {
        let flat = m.closure(&line)?.members;
        m = principal_extension(&m, &flat)?.0;
    }
    let long = m.closure(&line)?;
    println!("long line {} with {} points", long.members, m.epsilon_of(&long.members)?);

    // without a further point the statement is vacuous
    let v = long_line_checks(&m, &r, 2)?;
    println!("6-point line alone: {:?}", v.witness);
    assert_eq!(v.kind, VerdictKind::BoundHolds);

    let m = principal_extension(&m, &g.coordinate_flat(&[2, 3])?.members)?.0;
    let v = long_line_checks(&m, &r, 2)?;
    println!("with a point on a skew line: {:?}", v.witness);
    assert_eq!(v.kind, VerdictKind::MinorFound);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
