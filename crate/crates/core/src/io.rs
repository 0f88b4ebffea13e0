//! Construction documents: a base matroid and a list of operations, stored
//! as strict JSON so every instance can be rebuilt exactly.
//!
//! ```json
//! {"version":1,"field":{"p":2,"e":1,"modulus":[0,1]},"base":{"pg":{"n":4}},
//!  "ops":[{"extend":{"flat":[0,1,2]}},{"contract":{"set":[15]}}]}
//! ```

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::field::{FieldRecord, FieldSpec};
use crate::geometry::{truncate, ProjectiveGeometry, ProjectionSpec, MAX_PG_RANK};
use crate::kernel::Matroid;

pub const FORMAT_VERSION: u32 = 1;

/// Named rank oracles that are not matroids, kept as negative controls.
pub const FIXTURES: &[&str] = &["corrupt-submodular"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructionDocument {
    pub version: u32,
    pub field: FieldRecord,
    pub base: Base,
    pub ops: Vec<Op>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum Base {
    Pg { n: usize },
    /// Row-major entries, each a coefficient list over Z_p.
    Matrix {
        rows: usize,
        cols: usize,
        entries: Vec<Vec<u32>>,
    },
    Fixture { name: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum Op {
    Extend { flat: Vec<usize> },
    Truncate {},
    Delete { set: Vec<usize> },
    Contract { set: Vec<usize> },
}

/// The result of replaying a document.
#[derive(Clone, Debug)]
pub struct Replayed {
    pub matroid: Matroid,
    /// Ground set of the base before any operation.
    pub base: ElemSet,
    /// Elements added by `extend` that are still in the ground set.
    pub added: ElemSet,
}

fn sorted(set: &ElemSet) -> Vec<usize> {
    set.to_vec()
}

impl ConstructionDocument {
    pub fn new(field: &FieldSpec, base: Base) -> Self {
        ConstructionDocument {
            version: FORMAT_VERSION,
            field: field.record(),
            base,
            ops: Vec::new(),
        }
    }

    pub fn pg(field: &FieldSpec, n: usize) -> Self {
        Self::new(field, Base::Pg { n })
    }

    pub fn fixture(name: &str) -> Self {
        Self::new(
            &FieldSpec::new(2, 1).expect("GF(2)"),
            Base::Fixture { name: name.into() },
        )
    }

    pub fn extend(mut self, flat: &ElemSet) -> Self {
        self.ops.push(Op::Extend { flat: sorted(flat) });
        self
    }

    pub fn truncate(mut self, k: usize) -> Self {
        self.ops.extend((0..k).map(|_| Op::Truncate {}));
        self
    }

    pub fn delete(mut self, set: &ElemSet) -> Self {
        self.ops.push(Op::Delete { set: sorted(set) });
        self
    }

    pub fn contract(mut self, set: &ElemSet) -> Self {
        self.ops.push(Op::Contract { set: sorted(set) });
        self
    }

    /// The document of a projection: its extensions, then contraction of the
    /// added elements.
    pub fn from_projection(spec: &ProjectionSpec) -> Result<Self> {
        let mut doc = Self::pg(spec.base.field(), spec.base.rank());
        for step in &spec.steps {
            doc = doc.extend(step);
        }
        let added = doc.replay()?.added;
        Ok(doc.contract(&added))
    }

    /// Parses strict JSON. Unknown fields are rejected; errors carry the line
    /// and the path of the offending value.
    pub fn parse(text: &str) -> Result<Self> {
        let mut de = serde_json::Deserializer::from_str(text);
        let doc: Self = serde_path_to_error::deserialize(&mut de).map_err(|err| {
            let path = err.path().to_string();
            let inner = err.into_inner();
            Error::Parse {
                line: inner.line(),
                path,
                message: inner.to_string(),
            }
        })?;
        de.end().map_err(|err| Error::Parse {
            line: err.line(),
            path: ".".into(),
            message: err.to_string(),
        })?;
        if doc.version != FORMAT_VERSION {
            return Err(Error::Parse {
                line: 1,
                path: "version".into(),
                message: format!("unsupported version {}", doc.version),
            });
        }
        Ok(doc)
    }

    /// Compact JSON with every element list sorted and deduplicated.
    pub fn to_canonical_json(&self) -> String {
        let mut doc = self.clone();
        for op in &mut doc.ops {
            match op {
                Op::Extend { flat: s } | Op::Delete { set: s } | Op::Contract { set: s } => {
                    s.sort_unstable();
                    s.dedup();
                }
                Op::Truncate {} => {}
            }
        }
        serde_json::to_string(&doc).expect("documents serialise")
    }

    fn build_base(&self) -> Result<Matroid> {
        match &self.base {
            Base::Fixture { name } => fixture(name),
            Base::Pg { n } => {
                let field = FieldSpec::from_record(&self.field)?;
                if *n > MAX_PG_RANK {
                    return Err(Error::UnsupportedSize(format!("rank {n}")));
                }
                let max_q = field.q();
                Ok(ProjectiveGeometry::with_max_q(*n, &field, max_q)?.matroid().clone())
            }
            Base::Matrix {
                rows,
                cols,
                entries,
            } => {
                let field = FieldSpec::from_record(&self.field)?;
                if entries.len() != rows * cols {
                    return Err(Error::Parse {
                        line: 1,
                        path: "base.matrix.entries".into(),
                        message: format!("{} entries for a {rows}x{cols} matrix", entries.len()),
                    });
                }
                let elems = entries
                    .iter()
                    .map(|c| field.element(c))
                    .collect::<Result<Vec<_>>>()?;
                let matrix: Vec<Vec<_>> = elems.chunks(*cols.max(&1)).map(|r| r.to_vec()).collect();
                if *rows == 0 {
                    return Matroid::from_columns(&field, 0, &vec![Vec::new(); *cols]);
                }
                Matroid::from_matrix(&field, &matrix)
            }
        }
    }

    /// Rebuilds the matroid. A failing operation is reported with its index.
    pub fn replay(&self) -> Result<Replayed> {
        let mut m = self.build_base()?;
        let base = m.ground();
        let mut added = ElemSet::new();
        for (step, op) in self.ops.iter().enumerate() {
            let wrap = |cause: Error| Error::Replay {
                step,
                cause: Box::new(cause),
            };
            let set = |v: &[usize]| -> Result<ElemSet> {
                let mut s = ElemSet::new();
                for &e in v {
                    if e >= crate::bitset::CAPACITY {
                        return Err(Error::UnknownElement(e));
                    }
                    s.insert(e);
                }
                Ok(s)
            };
            m = match op {
                Op::Extend { flat } => {
                    let (ext, e) = m.principal_extension(&set(flat).map_err(wrap)?).map_err(wrap)?;
                    added.insert(e);
                    ext
                }
                Op::Truncate {} => truncate(&m, 1).map_err(wrap)?,
                Op::Delete { set: s } => m.delete(&set(s).map_err(wrap)?).map_err(wrap)?,
                Op::Contract { set: s } => m.contract(&set(s).map_err(wrap)?).map_err(wrap)?,
            };
            added = added & m.ground();
        }
        Ok(Replayed {
            matroid: m,
            base,
            added,
        })
    }
}

/// Builds a named fixture oracle.
pub fn fixture(name: &str) -> Result<Matroid> {
    match name {
        // pairs have rank 1 but triples rank 3: r({a,b}) + r({b,c}) < r({a,b,c}) + r({b})
        "corrupt-submodular" => Matroid::from_rank_fn(
            4,
            3,
            Arc::new(|x: &ElemSet| match x.len() {
                0 | 1 => x.len(),
                2 => 1,
                _ => 3,
            }),
        ),
        other => Err(Error::PreconditionFailed(format!(
            "unknown fixture `{other}`; known: {}",
            FIXTURES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> FieldSpec {
        FieldSpec::new(2, 1).unwrap()
    }

    #[test]
    fn pg_document() {
        let doc = ConstructionDocument::pg(&gf2(), 3);
        let json = doc.to_canonical_json();
        assert_eq!(
            json,
            r#"{"version":1,"field":{"p":2,"e":1,"modulus":[0,1]},"base":{"pg":{"n":3}},"ops":[]}"#
        );
        let back = ConstructionDocument::parse(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.replay().unwrap().matroid.epsilon(), 7);
    }

    #[test]
    fn extend_on_non_flat_names_step() {
        let doc = ConstructionDocument::pg(&gf2(), 3)
            .extend(&ElemSet::range(7))
            .extend(&[0, 1].iter().collect());
        match doc.replay() {
            Err(Error::Replay { step, cause }) => {
                assert_eq!(step, 1);
                assert!(matches!(*cause, Error::NotAFlat(_)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_fields_are_rejected_with_path() {
        let text = r#"{"version":1,"field":{"p":2,"e":1,"modulus":[0,1]},
"base":{"pg":{"n":3,"q":2}},"ops":[]}"#;
        match ConstructionDocument::parse(text) {
            Err(Error::Parse { line, path, .. }) => {
                assert_eq!(line, 2);
                assert!(path.starts_with("base"), "{path}");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            ConstructionDocument::parse(r#"{"version":1}"#),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn canonical_round_trip_sorts_sets() {
        let text = r#"{"version":1,"field":{"p":2,"e":1,"modulus":[0,1]},"base":{"pg":{"n":4}},"ops":[{"extend":{"flat":[2,1,0]}},{"contract":{"set":[15]}}]}"#;
        let doc = ConstructionDocument::parse(text).unwrap();
        let canon = doc.to_canonical_json();
        assert!(canon.contains("[0,1,2]"));
        let again = ConstructionDocument::parse(&canon).unwrap().to_canonical_json();
        assert_eq!(canon, again);
        let r = doc.replay().unwrap();
        assert_eq!(r.matroid.epsilon(), 13);
        assert!(r.added.is_empty());
    }

    #[test]
    fn matrix_base() {
        // U_{2,3} over GF(3): columns (1,0), (0,1), (1,1)
        let f = FieldSpec::new(3, 1).unwrap();
        let entries = [1, 0, 1, 0, 1, 1].iter().map(|&c| vec![c]).collect();
        let doc = ConstructionDocument::new(
            &f,
            Base::Matrix {
                rows: 2,
                cols: 3,
                entries,
            },
        );
        let m = doc.replay().unwrap().matroid;
        assert_eq!((m.rank(), m.epsilon()), (2, 3));
    }

    #[test]
    fn fixtures() {
        let m = ConstructionDocument::fixture("corrupt-submodular").replay().unwrap().matroid;
        assert!(m.axiom_check(1, 0).is_err());
        assert!(fixture("nope").is_err());
    }

    #[test]
    fn projection_documents() {
        let g = ProjectiveGeometry::new(4, &gf2()).unwrap();
        let line = g.coordinate_flat(&[0, 1]).unwrap().members;
        let doc = ConstructionDocument::from_projection(&ProjectionSpec::new(g).step(line)).unwrap();
        assert_eq!(doc.ops.len(), 2);
        assert_eq!(doc.replay().unwrap().matroid.epsilon(), 13);
    }
}
