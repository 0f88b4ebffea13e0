//! Matroid computations over projective geometries.
//!
//! The crate builds PG(n-1, q) over small finite fields, principal
//! extensions, truncations and projections of them, and answers density and
//! minor questions about the results exactly. See the `examples/` directory
//! for one runnable program per capability.

pub mod analysis;
pub mod bitset;
pub mod error;
pub mod field;
pub mod geometry;
pub mod harness;
pub mod io;
pub mod kernel;
pub mod verdict;

pub use bitset::ElemSet;
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
pub use kernel::{Flat, Matroid};
pub use verdict::{AnalysisVerdict, Evidence, VerdictKind};
