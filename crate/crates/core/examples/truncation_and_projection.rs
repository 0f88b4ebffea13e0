//! Truncations and principal-extension projections of PG(3, 2).

use dense_matroids::analysis::GrowthRateOracle;
use dense_matroids::geometry::{project, truncate, ProjectionSpec, ProjectiveGeometry};
use dense_matroids::{FieldSpec, Result};

pub fn run_example() -> Result<()> {
    let g = ProjectiveGeometry::new(4, &FieldSpec::of_order(2)?)?;

    // truncating keeps every point distinct but drops the rank
    let t = truncate(g.matroid(), 1)?;
    println!("truncation of PG(3, 2): rank {}, {} points", t.rank(), t.epsilon());
    assert_eq!((t.rank(), t.epsilon()), (3, 15));
    let oracle = GrowthRateOracle::new(2, 1);
    assert_eq!(oracle.truncation(3), 15);
    assert_eq!(oracle.h(3), 13);

    // projecting from a point placed freely on a line merges that line
    let line = g.coordinate_flat(&[0, 1])?.members;
    let p = project(&ProjectionSpec::new(g.clone()).step(line))?;
    println!(
        "projection from a line: {} elements, {} points",
        p.result.len(),
        p.result.epsilon()
    );
    assert_eq!(p.result.epsilon(), 13);

    // placing freely on the whole space gives back the truncation
    let all = g.matroid().ground();
    let free = project(&ProjectionSpec::new(g).step(all))?;
    assert_eq!(free.result.epsilon(), 15);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
