//! Deciding U_{2,m}-minors, long lines and Kung's bound.

use dense_matroids::analysis::{has_line_restriction, kung_bound_check, line_minor, line_minor_points};
use dense_matroids::geometry::{principal_extension, ProjectiveGeometry};
use dense_matroids::{ElemSet, Evidence, FieldSpec, Result, VerdictKind};

pub fn run_example() -> Result<()> {
    let fano = ProjectiveGeometry::new(3, &FieldSpec::of_order(2)?)?;
    assert_eq!(line_minor(fano.matroid(), 4)?.kind, VerdictKind::Refuted);
    println!("PG(2, 2) has no U_(2,4)-minor");

    // a point placed freely on a line of PG(3, 2), then contracted
    let g = ProjectiveGeometry::new(4, &FieldSpec::of_order(2)?)?;
    let line = g.coordinate_flat(&[0, 1])?.members;
    let (m, e) = principal_extension(g.matroid(), &line)?;
    let me = m.contract(&ElemSet::singleton(e))?;
    let v = line_minor(&me, 5)?;
    let Some(Evidence::LineMinor { contracted, covering, points }) = v.witness else {
        unreachable!("the projection has a five-point line minor")
    };
    println!("U_(2,5)-minor: contract {contracted}, restrict to {covering}, {points} points");
    assert_eq!(line_minor_points(&me, &contracted, &covering)?, points);
    assert_eq!(has_line_restriction(&me, 5)?.kind, VerdictKind::Witness);

    // binary matroids satisfy Kung's bound with ℓ = 2, tightly on PG
    let k = kung_bound_check(g.matroid(), 2, true)?;
    println!("Kung with ℓ = 2 on PG(3, 2): {:?}", k.witness);
    assert_eq!(k.kind, VerdictKind::BoundHolds);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
