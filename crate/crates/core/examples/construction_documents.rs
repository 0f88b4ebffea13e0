//! Construction documents: canonical JSON that replays to a matroid.

use dense_matroids::geometry::{ProjectionSpec, ProjectiveGeometry};
use dense_matroids::io::ConstructionDocument;
use dense_matroids::{Error, FieldSpec, Result};

pub fn run_example() -> Result<()> {
    let gf3 = FieldSpec::of_order(3)?;
    let g = ProjectiveGeometry::new(3, &gf3)?;
    let line = g.line_through(g.unit(0), g.unit(1))?.members;
    let doc = ConstructionDocument::from_projection(&ProjectionSpec::new(g).step(line))?;
    let text = doc.to_canonical_json();
    println!("{text}");

    let back = ConstructionDocument::parse(&text)?;
    assert_eq!(back, doc);
    assert_eq!(back.to_canonical_json(), text);
    let m = back.replay()?.matroid;
    println!("replayed: rank {}, {} points", m.rank(), m.epsilon());
    assert_eq!(m.rank(), 2);

    // errors name the offending path
    let bad = text.replacen("\"ops\"", "\"operations\"", 1);
    match ConstructionDocument::parse(&bad) {
        Err(e @ Error::Parse { .. }) => println!("rejected: {e}"),
        other => unreachable!("unknown fields are rejected, got {other:?}"),
    }

    // a named rank function that violates submodularity
    let fixture = ConstructionDocument::fixture("corrupt-submodular").replay()?.matroid;
    match fixture.axiom_check(256, 1) {
        Err(e @ Error::AxiomViolation { .. }) => println!("corrupt fixture: {e}"),
        other => unreachable!("the fixture breaks an axiom, got {other:?}"),
    }
    let pg = ProjectiveGeometry::new(3, &gf3)?;
    assert!(pg.matroid().axiom_check(256, 1)?.holds());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
