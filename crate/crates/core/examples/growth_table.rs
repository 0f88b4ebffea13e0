//! The extremal function h(n) next to the density of truncated geometries.

use dense_matroids::harness::growth_table;
use dense_matroids::Result;

pub fn run_example() -> Result<()> {
    for (q, k) in [(2, 1), (3, 1), (2, 2)] {
        println!("q = {q}, k = {k}");
        println!("{:>3} {:>8} {:>11} {:>9} {:>4}", "n", "h(n)", "truncation", "measured", "gap");
        for row in growth_table(q, k, 5) {
            let measured = row.measured.map_or("-".into(), |m| m.to_string());
            println!(
                "{:>3} {:>8} {:>11} {:>9} {:>4}",
                row.n, row.h, row.truncation_formula, measured, row.gap
            );
            if let Some(m) = row.measured {
                assert_eq!(m as i128, row.truncation_formula);
            }
            assert!(row.gap > 0);
        }
        println!();
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
