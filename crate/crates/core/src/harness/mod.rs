//! Reproducible experiment suites.
//!
//! A suite generates its instances from a seeded ChaCha8 stream, evaluates
//! them on a worker pool and reports them in generation order, so the same
//! name, seed and configuration always give the same report bytes.

mod atlas;
mod corpus;
mod suites;

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::ConstructionDocument;
use crate::verdict::Evidence;

pub use atlas::{growth_table, projection_atlas, AtlasEntry, GrowthRow};
pub use corpus::corpus;

/// Every suite name accepted by [`run_suite`], with a one-line summary.
pub const SUITES: &[(&str, &str)] = &[
    ("pg-density", "point counts of projective geometries"),
    ("truncation-spectrum", "densities of k-fold truncations"),
    ("projection-quantization", "ε(N\\C) - ε(N/C) = q d for k-element projections"),
    ("pgframe", "single placements: spanning flat and the forced line minor"),
    ("singleproj", "line placements in binary geometries"),
    ("kung", "Kung's bound on U_{2,ℓ+2}-free matroids"),
    ("getdenserestriction", "dense weakly round restrictions"),
    ("roundconnectivity", "weak roundness survives contraction"),
    ("contractunstable", "full minors from unstable sets"),
    ("skewsubset", "dense subsets skew to a small set"),
    ("longlinewin", "a long line and an extra point force a large line minor"),
    ("longlinewin2", "a dense low-rank set forces a large line minor"),
    ("criticallines", "lines through critical elements"),
    ("axioms", "rank axioms of corpus matroids and supplied documents"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub label: String,
    pub status: Status,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Evidence>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub big: bool,
    pub instances: Vec<InstanceRecord>,
    pub summary: Summary,
    #[serde(skip)]
    pub wall_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    /// Pretty JSON. Wall time is added only on request, since it is the one
    /// field that differs between identical runs.
    pub fn to_json(&self, include_timing: bool) -> String {
        let mut value = serde_json::to_value(self).expect("reports serialise");
        if include_timing {
            value["wall_ms"] = serde_json::json!(self.wall_ms as u64);
        }
        serde_json::to_string_pretty(&value).expect("reports serialise") + "\n"
    }

    /// Aligned text. With timing, the first line is a `# wall` header.
    pub fn to_table(&self, include_timing: bool) -> String {
        let mut out = String::new();
        if include_timing {
            let _ = writeln!(out, "# wall {} ms", self.wall_ms);
        }
        let _ = writeln!(out, "suite {}  seed {}  big {}", self.suite, self.seed, self.big);
        let width = self.instances.iter().map(|i| i.label.chars().count()).max().unwrap_or(5).max(5);
        let _ = writeln!(out, "{:>5}  {:<6}  {:<width$}  detail", "#", "status", "label");
        for i in &self.instances {
            let _ = writeln!(
                out,
                "{:>5}  {:<6}  {:<width$}  {}",
                i.index,
                i.status.label(),
                i.label,
                i.detail
            );
        }
        let s = self.summary;
        let _ = writeln!(out, "pass {}  fail {}  skip {}", s.pass, s.fail, s.skip);
        out
    }
}

/// Seed, scale and extra inputs for a suite run. `samples` overrides the
/// instance count of sampled suites.
#[derive(Debug, Clone, Default)]
pub struct SuiteConfig {
    pub seed: u64,
    pub big: bool,
    pub samples: Option<usize>,
    pub inputs: Vec<ConstructionDocument>,
}

impl SuiteConfig {
    pub fn new(seed: u64) -> Self {
        SuiteConfig {
            seed,
            ..Default::default()
        }
    }

    pub(crate) fn count(&self, default: usize) -> usize {
        self.samples.unwrap_or(if self.big { 4 * default } else { default })
    }
}

/// What an instance check concluded.
pub(crate) struct Outcome {
    status: Status,
    detail: String,
    witness: Option<Evidence>,
    construction: Option<ConstructionDocument>,
}

impl Outcome {
    fn new(status: Status, detail: impl Into<String>) -> Self {
        Outcome {
            status,
            detail: detail.into(),
            witness: None,
            construction: None,
        }
    }

    pub fn pass(detail: impl Into<String>) -> Self {
        Self::new(Status::Pass, detail)
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Self::new(Status::Fail, detail)
    }

    pub fn skip(detail: impl Into<String>) -> Self {
        Self::new(Status::Skip, detail)
    }

    pub fn witness(mut self, w: Option<Evidence>) -> Self {
        self.witness = w;
        self
    }

    /// Replaces the instance document, for checks that derive a new matroid.
    pub fn construction(mut self, doc: ConstructionDocument) -> Self {
        self.construction = Some(doc);
        self
    }
}

type Job = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

pub(crate) struct Case {
    label: String,
    doc: Option<ConstructionDocument>,
    job: Job,
}

impl Case {
    pub fn new(
        label: impl Into<String>,
        doc: Option<ConstructionDocument>,
        job: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        Case {
            label: label.into(),
            doc,
            job: Box::new(job),
        }
    }

    fn evaluate(self, index: usize) -> InstanceRecord {
        let (status, detail, witness, construction) = match (self.job)() {
            Ok(o) => (o.status, o.detail, o.witness, o.construction.or(self.doc)),
            Err(e) if e.is_resource_exceeded() => (Status::Skip, e.to_string(), None, self.doc),
            Err(e) => (Status::Fail, e.to_string(), None, self.doc),
        };
        InstanceRecord {
            index,
            label: self.label,
            status,
            detail,
            construction,
            witness,
        }
    }
}

/// Runs a named suite. Instances that hit a search cap are SKIP, any other
/// error is a FAIL of that instance.
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<Report> {
    let start = Instant::now();
    let cases = suites::generate(name, config)?;
    let instances: Vec<InstanceRecord> = cases
        .into_par_iter()
        .enumerate()
        .map(|(i, c)| c.evaluate(i))
        .collect();
    let mut summary = Summary::default();
    for i in &instances {
        match i.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skip => summary.skip += 1,
        }
    }
    Ok(Report {
        suite: name.to_string(),
        seed: config.seed,
        big: config.big,
        instances,
        summary,
        wall_ms: start.elapsed().as_millis(),
    })
}

pub(crate) fn unknown(name: &str) -> Error {
    Error::UnknownSuite(name.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(matches!(
            run_suite("nope", &SuiteConfig::new(1)),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn pg_density_passes_and_is_deterministic() {
        let a = run_suite("pg-density", &SuiteConfig::new(3)).unwrap();
        assert!(a.passed(), "{}", a.to_table(false));
        assert_eq!(a.summary.pass, a.instances.len());
        let b = run_suite("pg-density", &SuiteConfig::new(3)).unwrap();
        assert_eq!(a.to_json(false), b.to_json(false));
        assert!(a.to_table(true).starts_with("# wall"));
    }

    #[test]
    fn report_json_round_trips() {
        let r = run_suite("truncation-spectrum", &SuiteConfig::new(1)).unwrap();
        let back: Report = serde_json::from_str(&r.to_json(true)).unwrap();
        assert_eq!(back.instances, r.instances);
    }
}
