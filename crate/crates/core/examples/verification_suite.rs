//! Running a seeded verification suite and reading its report.

use dense_matroids::harness::{run_suite, SuiteConfig, SUITES};
use dense_matroids::Result;

pub fn run_example() -> Result<()> {
    for (name, about) in SUITES {
        println!("{name:<24} {about}");
    }
    println!();

    let config = SuiteConfig::new(7);
    let report = run_suite("truncation-spectrum", &config)?;
    print!("{}", report.to_table(false));
    assert!(report.passed());

    // same seed, same bytes
    let again = run_suite("truncation-spectrum", &config)?;
    assert_eq!(report.to_json(false), again.to_json(false));

    let sampled = SuiteConfig {
        samples: Some(20),
        ..SuiteConfig::new(3)
    };
    let r = run_suite("projection-quantization", &sampled)?;
    println!("projection-quantization, 20 samples: {:?}", r.summary);
    assert_eq!(r.instances.len(), 20);
    assert!(r.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
