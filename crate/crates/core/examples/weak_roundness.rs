//! Weak roundness and dense weakly round restrictions.

use dense_matroids::analysis::{dense_round_restriction, round_restriction_bound, weakly_round};
use dense_matroids::geometry::ProjectiveGeometry;
use dense_matroids::{Evidence, FieldSpec, Result};

pub fn run_example() -> Result<()> {
    let fano = ProjectiveGeometry::new(3, &FieldSpec::of_order(2)?)?;
    assert!(weakly_round(fano.matroid())?.holds());

    // two disjoint Fano planes are covered by a hyperplane and the other plane
    let two = fano.matroid().direct_sum(fano.matroid())?;
    let v = weakly_round(&two)?;
    let Some(Evidence::Cover { a, b }) = v.witness else {
        unreachable!("a direct sum of planes is not weakly round")
    };
    println!("cover of PG(2,2) + PG(2,2): A = {a}, B = {b}");

    let n = dense_round_restriction(&two)?;
    println!("dense weakly round restriction: rank {}, {} points", n.rank(), n.epsilon());
    assert!(weakly_round(&n)?.holds());
    assert!(round_restriction_bound(&two, &n));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
