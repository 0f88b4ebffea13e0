//! Projective geometries as matroids: points, lines and modular flats.

use dense_matroids::geometry::ProjectiveGeometry;
use dense_matroids::{ElemSet, FieldSpec, Result};

pub fn run_example() -> Result<()> {
    for (q, n) in [(2, 3), (3, 3), (2, 4), (4, 3)] {
        let g = ProjectiveGeometry::new(n, &FieldSpec::of_order(q)?)?;
        println!("PG({}, {q}): {} points, rank {}", n - 1, g.matroid().epsilon(), g.rank());
    }

    let fano = ProjectiveGeometry::new(3, &FieldSpec::of_order(2)?)?;
    let lines = fano.matroid().flats_of_rank(2)?;
    assert_eq!(lines.len(), 7);
    assert!(lines.iter().all(|l| l.members.len() == 3));

    // coordinates are normalised, so (0,2,2) over GF(3) names the point (0,1,1)
    let g = ProjectiveGeometry::new(3, &FieldSpec::of_order(3)?)?;
    let p = g.point_index(&[0, 2, 2]).expect("a point");
    assert_eq!(g.point_index(&[0, 1, 1]), Some(p));
    let line = g.line_through(g.unit(1), g.unit(2))?;
    assert!(line.members.contains(p));
    println!("the line through e2 and e3 of PG(2, 3) is {} and contains (0,1,1)", line.members);

    // every flat of a projective geometry is modular
    let m = g.matroid();
    assert!(m.is_modular_flat(&line.members)?);
    let point = ElemSet::singleton(g.unit(0));
    assert_eq!(m.local_connectivity(&line.members, &point)?, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
