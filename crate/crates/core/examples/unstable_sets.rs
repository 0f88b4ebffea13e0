//! Unstable sets: extra points whose spanning lines in a PG-restriction are
//! mutually skew, and the full minors obtained by contracting them.

use dense_matroids::analysis::{contract_unstable_check, find_unstable, unstable_lines};
use dense_matroids::geometry::{principal_extension, ProjectiveGeometry};
use dense_matroids::{ElemSet, Evidence, FieldElement, FieldSpec, Matroid, Result};

/// PG(4, 2) written over GF(4), plus u + ωv for the lines {e0, e1} and {e2, e3}.
fn two_placements() -> Result<(Matroid, ElemSet, ElemSet)> {
    let gf2 = FieldSpec::of_order(2)?;
    let gf4 = FieldSpec::of_order(4)?;
    let pg = ProjectiveGeometry::new(5, &gf2)?;
    let lift = |coords: &[u8]| -> Vec<FieldElement> {
        coords.iter().map(|&c| if c == 0 { gf4.zero() } else { gf4.one() }).collect()
    };
    let mut cols: Vec<Vec<FieldElement>> = pg.points().iter().map(|p| lift(p)).collect();
    let w = gf4.element(&[0, 1])?;
    for (u, v) in [(0, 1), (2, 3)] {
        let mut col = vec![gf4.zero(); 5];
        col[u] = gf4.one();
        col[v] = w.clone();
        cols.push(col);
    }
    let m = Matroid::from_columns(&gf4, 5, &cols)?;
    let r = pg.matroid().ground();
    Ok((m.clone(), r, m.ground() - r))
}

pub fn run_example() -> Result<()> {
    // one placement on a line of PG(3, 2)
    let g = ProjectiveGeometry::new(4, &FieldSpec::of_order(2)?)?;
    let r = g.matroid().ground();
    let (m, e) = principal_extension(g.matroid(), &g.coordinate_flat(&[0, 1])?.members)?;
    let v = find_unstable(&m, &r, 1)?;
    let Some(Evidence::Matching { lines, elements }) = &v.witness else {
        unreachable!("a single placement is unstable")
    };
    println!("PG(3, 2) + 1: unstable element {:?} on line {}", elements, lines[0]);
    assert_eq!(elements, &vec![e]);
    let check = contract_unstable_check(&m, &r, &ElemSet::singleton(e), 3, 2)?;
    println!("  rank-3 minor: {:?}", check.witness);
    assert!(check.holds());

    // two placements on skew lines of PG(4, 2)
    let (m, r, x) = two_placements()?;
    let lines = unstable_lines(&m, &r, &x)?.expect("X is unstable");
    for l in &lines {
        println!("PG(4, 2) + 2: spanning line {}", l.members);
    }
    let check = contract_unstable_check(&m, &r, &x, 3, 2)?;
    println!("  rank-3 minor: {:?}", check.witness);
    assert!(check.holds());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
