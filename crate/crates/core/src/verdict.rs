//! Outcomes of the decision procedures, with evidence that can be replayed.

use serde::{Deserialize, Serialize};

use crate::bitset::ElemSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictKind {
    MinorFound,
    BoundHolds,
    Witness,
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Evidence {
    /// (M / F) | G is a rank-2 matroid with `points` points.
    LineMinor {
        contracted: ElemSet,
        covering: ElemSet,
        points: usize,
    },
    /// A line of M with `points` points.
    Line { line: ElemSet, points: usize },
    /// A ∪ B = E(M) with r(A) <= r - 2 and r(B) <= r - 1.
    Cover { a: ElemSet, b: ElemSet },
    /// Mutually skew lines, with the elements that induced them when they
    /// come from an unstable set.
    Matching {
        lines: Vec<ElemSet>,
        elements: Vec<usize>,
    },
    /// An exact comparison `value` against `bound`.
    Bound { value: i64, bound: i64 },
    /// A subset of the ground set with its rank and point count.
    Subset {
        set: ElemSet,
        rank: usize,
        points: usize,
    },
    /// The lines through an element, each with its point count.
    LinesThrough {
        element: usize,
        lines: Vec<(ElemSet, usize)>,
    },
    Note { text: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisVerdict {
    pub kind: VerdictKind,
    pub witness: Option<Evidence>,
}

impl Evidence {
    /// A comparison, saturated to the i64 range used on the wire.
    pub fn bound(value: i128, bound: i128) -> Self {
        let clamp = |x: i128| x.clamp(i64::MIN as i128, i64::MAX as i128) as i64;
        Evidence::Bound {
            value: clamp(value),
            bound: clamp(bound),
        }
    }
}

impl AnalysisVerdict {
    pub fn new(kind: VerdictKind, witness: Evidence) -> Self {
        AnalysisVerdict {
            kind,
            witness: Some(witness),
        }
    }

    pub fn refuted() -> Self {
        AnalysisVerdict {
            kind: VerdictKind::Refuted,
            witness: None,
        }
    }

    pub fn refuted_with(witness: Evidence) -> Self {
        Self::new(VerdictKind::Refuted, witness)
    }

    pub fn holds(&self) -> bool {
        self.kind != VerdictKind::Refuted
    }
}
