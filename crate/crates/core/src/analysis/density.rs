//! (q,k)-fullness, growth-rate formulas and critical elements.

use serde::{Deserialize, Serialize};

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::kernel::Matroid;
use crate::verdict::{AnalysisVerdict, Evidence, VerdictKind};

fn pow(q: u64, n: u32) -> i128 {
    (q as i128).checked_pow(n).expect("power fits in i128")
}

/// (q^n - 1)/(q - 1), the number of points of PG(n-1, q).
pub fn pg_count(q: u64, n: u32) -> i128 {
    (pow(q, n) - 1) / (q as i128 - 1)
}

/// (q^{2k} - 1)/(q^2 - 1).
pub fn matching_bound(q: u64, k: u32) -> i128 {
    (pow(q, 2 * k) - 1) / (pow(q, 2) - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullnessParams {
    pub q: u64,
    pub k: u32,
}

impl FullnessParams {
    pub fn new(q: u64, k: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::PreconditionFailed(format!("q = {q} below 2")));
        }
        Ok(FullnessParams { q, k })
    }

    /// t(r) = (q^{r+k} - 1)/(q - 1) - q(q^{2k} - 1)/(q^2 - 1). Negative for
    /// small r when k > 0.
    pub fn threshold(&self, r: usize) -> i128 {
        pg_count(self.q, r as u32 + self.k) - self.gap()
    }

    /// q(q^{2k} - 1)/(q^2 - 1).
    pub fn gap(&self) -> i128 {
        self.q as i128 * matching_bound(self.q, self.k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fullness {
    Underfull,
    /// Meets the threshold exactly.
    Full,
    Overfull,
}

impl Fullness {
    pub fn is_full(self) -> bool {
        self != Fullness::Underfull
    }
}

/// Exact comparison of ε(M) with t(r(M)).
pub fn fullness(m: &Matroid, params: FullnessParams) -> Fullness {
    classify(m.epsilon(), m.rank(), params)
}

fn classify(eps: usize, rank: usize, params: FullnessParams) -> Fullness {
    let t = params.threshold(rank);
    match (eps as i128).cmp(&t) {
        std::cmp::Ordering::Less => Fullness::Underfull,
        std::cmp::Ordering::Equal => Fullness::Full,
        std::cmp::Ordering::Greater => Fullness::Overfull,
    }
}

/// Closed-form densities: the projective-geometry count, the truncation
/// count (q^{n+k} - 1)/(q - 1), and the (q,k)-full threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthRateOracle {
    pub q: u64,
    pub k: u32,
}

impl GrowthRateOracle {
    pub fn new(q: u64, k: u32) -> Self {
        GrowthRateOracle { q, k }
    }

    pub fn h(&self, n: usize) -> i128 {
        FullnessParams { q: self.q, k: self.k }.threshold(n)
    }

    pub fn projective(&self, n: usize) -> i128 {
        pg_count(self.q, n as u32)
    }

    pub fn truncation(&self, n: usize) -> i128 {
        pg_count(self.q, n as u32 + self.k)
    }

    /// truncation(n) - h(n), independent of n.
    pub fn gap(&self) -> i128 {
        FullnessParams { q: self.q, k: self.k }.gap()
    }
}

/// Elements e for which M / e is not (q,k)-overfull. Loops never qualify,
/// since contracting one changes neither ε nor the rank.
pub fn critical_elements(m: &Matroid, params: FullnessParams) -> Result<ElemSet> {
    if fullness(m, params) != Fullness::Overfull {
        return Err(Error::NotOverfull);
    }
    let mut out = ElemSet::new();
    for e in m.ground().iter() {
        let me = m.contract(&ElemSet::singleton(e))?;
        if fullness(&me, params) != Fullness::Overfull {
            out.insert(e);
        }
    }
    Ok(out)
}

/// The lines of M through the non-loop `e`, each with its point count.
pub fn lines_through(m: &Matroid, e: usize) -> Result<Vec<(ElemSet, usize)>> {
    let point = m.closure(&ElemSet::singleton(e))?;
    if point.rank == 0 {
        return Err(Error::PreconditionFailed(format!("element {e} is a loop")));
    }
    if m.rank() < 2 {
        return Ok(Vec::new());
    }
    Ok(m.flats_above(&point, 2)?
        .into_iter()
        .map(|l| (l.members, m.eps(l.members)))
        .collect())
}

/// For a critical `e` of an overfull M: either some line through e has at
/// least q^2 + 2 points, or at least (q^{2k} - 1)/(q^2 - 1) + 1 lines through
/// e have at least q + 2 points each.
pub fn critical_dichotomy_check(m: &Matroid, params: FullnessParams, e: usize) -> Result<AnalysisVerdict> {
    m.check_subset(&ElemSet::singleton(e))?;
    if fullness(m, params) != Fullness::Overfull {
        return Err(Error::PreconditionFailed("matroid is not overfull".into()));
    }
    let me = m.contract(&ElemSet::singleton(e))?;
    if fullness(&me, params) == Fullness::Overfull {
        return Err(Error::PreconditionFailed(format!(
            "element {e} is not critical"
        )));
    }
    let q = params.q as usize;
    let lines = lines_through(m, e)?;
    let long = lines.iter().any(|&(_, n)| n >= q * q + 2);
    let rich = lines.iter().filter(|&&(_, n)| n >= q + 2).count() as i128;
    let witness = Evidence::LinesThrough { element: e, lines };
    Ok(if long || rich > matching_bound(params.q, params.k) {
        AnalysisVerdict::new(VerdictKind::Witness, witness)
    } else {
        AnalysisVerdict::refuted_with(witness)
    })
}
