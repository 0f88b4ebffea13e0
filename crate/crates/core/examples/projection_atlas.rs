//! Which values d = (ε(N\C) - ε(N/C))/q small projections actually reach.

use dense_matroids::harness::projection_atlas;
use dense_matroids::Result;

pub fn run_example() -> Result<()> {
    for (q, k, budget) in [(2, 1, usize::MAX), (3, 1, usize::MAX), (2, 2, 150)] {
        let atlas = projection_atlas(q, k, budget, 11)?;
        let ds: Vec<usize> = atlas.iter().map(|e| e.d).collect();
        println!("q = {q}, k = {k}: d in {ds:?}");
        for e in &atlas {
            assert_eq!(e.eps_deleted - e.eps_contracted, q as usize * e.d);
        }
        if k == 1 {
            assert_eq!(ds, vec![0, 1]);
        }
    }
    assert!(projection_atlas(5, 1, 10, 0).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
