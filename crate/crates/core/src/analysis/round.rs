//! Weak roundness and dense weakly round restrictions.

use crate::bitset::ElemSet;
use crate::error::Result;
use crate::kernel::Matroid;
use crate::verdict::{AnalysisVerdict, Evidence, VerdictKind};

/// (L_s, F_s): Lucas and Fibonacci numbers, so that φ^s = (L_s + F_s √5)/2.
fn lucas_fib(s: usize) -> (i128, i128) {
    let (mut l, mut f) = (2i128, 0i128);
    for _ in 0..s {
        // φ^{s+1} = φ^s φ gives L' = (L + 5F)/2 and F' = (L + F)/2
        (l, f) = ((l + 5 * f) / 2, (l + f) / 2);
    }
    (l, f)
}

/// Whether `small` · φ^s >= `big`, decided in integers.
pub fn phi_bound_holds(small: usize, s: usize, big: usize) -> bool {
    let (l, f) = lucas_fib(s);
    let a = small as i128 * l;
    let b = small as i128 * f;
    let c = 2 * big as i128;
    // a + b√5 >= c
    let rhs = c - a;
    rhs <= 0 || 5 * b * b >= rhs * rhs
}

/// Searches for sets A, B with A ∪ B = E, r(A) <= r - 2 and r(B) <= r - 1.
///
/// B can always be enlarged to a hyperplane, shrinking A = E - B, so only
/// hyperplanes are tried. The refutation carries the first cover found.
pub fn weakly_round(m: &Matroid) -> Result<AnalysisVerdict> {
    let r = m.rank();
    if r <= 2 {
        return Ok(round_verdict());
    }
    for h in m.flats_of_rank(r - 1)? {
        let a = m.ground() - h.members;
        if m.rk(a) <= r - 2 {
            return Ok(AnalysisVerdict::refuted_with(Evidence::Cover { a, b: h.members }));
        }
    }
    Ok(round_verdict())
}

fn round_verdict() -> AnalysisVerdict {
    AnalysisVerdict::new(
        VerdictKind::BoundHolds,
        Evidence::Note {
            text: "weakly round".into(),
        },
    )
}

/// A weakly round restriction N of M with ε(N) >= φ^{r(N) - r(M)} ε(M).
///
/// While the current restriction has a cover (A, B), A is closed and padded
/// with the smallest elements of B until r(A) = r - 2. The search moves to
/// M|A when ε(M|A) φ^2 >= ε, and to M|B otherwise.
pub fn dense_round_restriction(m: &Matroid) -> Result<Matroid> {
    let mut cur = m.clone();
    loop {
        let v = weakly_round(&cur)?;
        let Some(Evidence::Cover { a, b }) = v.witness else {
            return Ok(cur);
        };
        let r = cur.rank();
        let mut a = cur.cl(a);
        for y in b.iter() {
            if cur.rk(a) >= r - 2 {
                break;
            }
            if !a.contains(y) && cur.rk(a.with(y)) > cur.rk(a) {
                a = cur.cl(a.with(y));
            }
        }
        let eps = cur.epsilon();
        let next = if phi_bound_holds(cur.eps(a), 2, eps) { a } else { b };
        cur = cur.restrict(&next)?;
    }
}

/// Checks ε(N) φ^{r(M) - r(N)} >= ε(M) for a restriction N of M.
pub fn round_restriction_bound(m: &Matroid, n: &Matroid) -> bool {
    phi_bound_holds(n.epsilon(), m.rank() - n.rank(), m.epsilon())
}

/// Whether (A, B) is a cover showing that M is not weakly round.
pub fn cover_is_valid(m: &Matroid, a: &ElemSet, b: &ElemSet) -> bool {
    let r = m.rank();
    (*a | *b) == m.ground() && r >= 2 && m.rk(*a) + 2 <= r && m.rk(*b) < r
}
