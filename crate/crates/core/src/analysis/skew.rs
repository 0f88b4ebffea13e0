//! Dense subsets skew to a given set.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::lines::line_minor;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::kernel::Matroid;
use crate::verdict::{AnalysisVerdict, Evidence, VerdictKind};

/// λ > 0, μ > 1, ℓ >= 2 and the rank budget t for B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewParams {
    pub lambda: BigRational,
    pub mu: BigRational,
    pub ell: usize,
    pub t: usize,
}

impl SkewParams {
    pub fn new(lambda: BigRational, mu: BigRational, ell: usize, t: usize) -> Result<Self> {
        if lambda <= BigRational::zero() || mu <= BigRational::one() || ell < 2 {
            return Err(Error::PreconditionFailed(format!(
                "need λ > 0, μ > 1 and ℓ >= 2, got λ = {lambda}, μ = {mu}, ℓ = {ell}"
            )));
        }
        Ok(SkewParams { lambda, mu, ell, t })
    }

    /// λ ((μ - 1)/ℓ)^t, the coefficient required of the skew subset.
    pub fn target_coefficient(&self) -> BigRational {
        let shrink = (&self.mu - BigRational::one()) / BigRational::from_integer(BigInt::from(self.ell));
        &self.lambda * pow(&shrink, self.t)
    }
}

fn pow(x: &BigRational, n: usize) -> BigRational {
    (0..n).fold(BigRational::one(), |acc, _| acc * x)
}

fn exceeds(points: usize, coefficient: &BigRational, mu: &BigRational, rank: usize) -> bool {
    BigRational::from_integer(BigInt::from(points)) > coefficient * pow(mu, rank)
}

/// Searches the flats of M|A, lowest rank first, for one skew to B with
/// ε > λ ((μ - 1)/ℓ)^t μ^r.
///
/// The hypotheses r(B) <= t < r(M) and ε(M|A) > λ μ^{r(A)} are checked, and
/// with `verify_membership` so is the absence of a U_{2,ℓ+2}-minor. Closing
/// a skew subset inside A keeps it skew and adds points, so flats suffice.
pub fn skew_dense_subset(
    m: &Matroid,
    a: &ElemSet,
    b: &ElemSet,
    params: &SkewParams,
    verify_membership: bool,
) -> Result<AnalysisVerdict> {
    m.check_subset(&(*a | *b))?;
    if !a.is_disjoint(b) {
        return Err(Error::PreconditionFailed(format!("{a} meets {b}")));
    }
    let rb = m.rk(*b);
    if rb > params.t || params.t >= m.rank() {
        return Err(Error::PreconditionFailed(format!(
            "need r(B) <= t < r(M), got r(B) = {rb}, t = {}, r(M) = {}",
            params.t,
            m.rank()
        )));
    }
    if !exceeds(m.eps(*a), &params.lambda, &params.mu, m.rk(*a)) {
        return Err(Error::PreconditionFailed(format!(
            "ε(M|A) = {} does not exceed λ μ^{}",
            m.eps(*a),
            m.rk(*a)
        )));
    }
    if verify_membership && line_minor(m, params.ell + 2)?.kind == VerdictKind::MinorFound {
        return Err(Error::PreconditionFailed(format!(
            "matroid has a U_{{2,{}}}-minor",
            params.ell + 2
        )));
    }
    let coefficient = params.target_coefficient();
    let restricted = m.restrict(a)?;
    for f in restricted.all_flats()? {
        let set = f.members;
        if m.rk(set | *b) != f.rank + rb {
            continue;
        }
        let points = m.eps(set);
        if exceeds(points, &coefficient, &params.mu, f.rank) {
            return Ok(AnalysisVerdict::new(
                VerdictKind::Witness,
                Evidence::Subset {
                    set,
                    rank: f.rank,
                    points,
                },
            ));
        }
    }
    Ok(AnalysisVerdict::refuted())
}
