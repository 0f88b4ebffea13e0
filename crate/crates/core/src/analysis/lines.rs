//! Line minors, long lines and Kung's bound.

use std::collections::HashSet;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::kernel::{flat_cap, Matroid};
use crate::verdict::{AnalysisVerdict, Evidence, VerdictKind};

/// Rank-(r(F)+1) flats containing the flat `f`. They partition E - F.
pub(crate) fn covers(m: &Matroid, f: ElemSet) -> Vec<ElemSet> {
    let basis = m.basis_of(f);
    let mut covered = f;
    let mut out = Vec::new();
    for y in (m.ground() - f).iter() {
        if covered.contains(y) {
            continue;
        }
        let g = m.cl_of_basis(basis.with(y), f.with(y));
        covered = covered | g;
        out.push(g);
    }
    out
}

/// ε((M / F) | G) for flats F ⊆ G: the covers of F inside G.
pub fn line_minor_points(m: &Matroid, contracted: &ElemSet, covering: &ElemSet) -> Result<usize> {
    m.check_subset(covering)?;
    if !contracted.is_subset(covering) {
        return Err(Error::PreconditionFailed(format!(
            "{contracted} is not inside {covering}"
        )));
    }
    let minor = m.restrict(covering)?.contract(contracted)?;
    Ok(minor.epsilon())
}

/// Decides whether M has a U_{2,m}-minor.
///
/// Flats F are visited bottom-up. The points of M / F are the covers of F,
/// and a line of M / F is a flat G with r(G) = r(F) + 2, so a minor exists
/// iff some G contains at least `m` covers of some F. Since ε(M / F) can
/// only drop as F grows, flats with fewer than `m` covers are not expanded.
pub fn line_minor(m: &Matroid, points: usize) -> Result<AnalysisVerdict> {
    line_minor_capped(m, points, flat_cap())
}

pub fn line_minor_capped(m: &Matroid, points: usize, cap: usize) -> Result<AnalysisVerdict> {
    if points < 2 {
        return Err(Error::PreconditionFailed(format!(
            "a line minor needs at least 2 points, got {points}"
        )));
    }
    if m.rank() < 2 {
        return Ok(AnalysisVerdict::refuted());
    }
    let mut level = vec![m.cl(ElemSet::new())];
    let mut generated = 0usize;
    for rank in 0..=m.rank() - 2 {
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for &f in &level {
            let cov = covers(m, f);
            generated += cov.len();
            if cov.len() < points {
                continue;
            }
            let mut lines_seen = HashSet::new();
            for (i, &a) in cov.iter().enumerate() {
                for &b in &cov[i + 1..] {
                    let basis = m.basis_of(a | b);
                    let g = m.cl_of_basis(basis, a | b);
                    generated += 1;
                    if !lines_seen.insert(g) {
                        continue;
                    }
                    let count = cov.iter().filter(|c| c.is_subset(&g)).count();
                    if count >= points {
                        return Ok(AnalysisVerdict::new(
                            VerdictKind::MinorFound,
                            Evidence::LineMinor {
                                contracted: f,
                                covering: g,
                                points: count,
                            },
                        ));
                    }
                }
            }
            if generated > cap {
                return Err(Error::ResourceExceeded(format!(
                    "line-minor search passed {cap} closures at rank {rank}"
                )));
            }
            if rank + 2 < m.rank() {
                for c in cov {
                    if seen.insert(c) {
                        next.push(c);
                    }
                }
            }
        }
        next.sort();
        level = next;
    }
    Ok(AnalysisVerdict::refuted())
}

/// The lines of M through pairs of points, with their point counts, in
/// lexicographic order of the line.
pub fn lines_with_points(m: &Matroid) -> Result<Vec<(ElemSet, usize)>> {
    if m.rank() < 2 {
        return Ok(Vec::new());
    }
    Ok(m.flats_of_rank(2)?
        .into_iter()
        .map(|l| (l.members, m.eps(l.members)))
        .collect())
}

/// The first longest line of M, if M has rank at least 2.
pub fn longest_line(m: &Matroid) -> Result<Option<(ElemSet, usize)>> {
    let mut best: Option<(ElemSet, usize)> = None;
    for (l, n) in lines_with_points(m)? {
        if best.is_none_or(|(_, b)| n > b) {
            best = Some((l, n));
        }
    }
    Ok(best)
}

/// Whether some line of M (a restriction, no contraction) has at least `m`
/// points.
pub fn has_line_restriction(m: &Matroid, points: usize) -> Result<AnalysisVerdict> {
    if points < 2 {
        return Err(Error::PreconditionFailed(format!(
            "a line needs at least 2 points, got {points}"
        )));
    }
    for (line, n) in lines_with_points(m)? {
        if n >= points {
            return Ok(AnalysisVerdict::new(
                VerdictKind::Witness,
                Evidence::Line { line, points: n },
            ));
        }
    }
    Ok(AnalysisVerdict::refuted())
}

/// (ℓ^r - 1)/(ℓ - 1).
pub fn kung_bound(ell: u64, r: usize) -> i128 {
    let mut total: i128 = 0;
    let mut power: i128 = 1;
    for _ in 0..r {
        total += power;
        power *= ell as i128;
    }
    total
}

/// Checks ε(M) <= (ℓ^r - 1)/(ℓ - 1) for a matroid with no U_{2,ℓ+2}-minor.
///
/// With `verify_membership` the minor is searched for first and its presence
/// is a `PreconditionFailed`. A violated bound comes back as `Refuted`.
pub fn kung_bound_check(m: &Matroid, ell: usize, verify_membership: bool) -> Result<AnalysisVerdict> {
    if ell < 2 {
        return Err(Error::PreconditionFailed(format!("ℓ = {ell} below 2")));
    }
    if verify_membership {
        let minor = line_minor(m, ell + 2)?;
        if minor.kind == VerdictKind::MinorFound {
            return Err(Error::PreconditionFailed(format!(
                "matroid has a U_{{2,{}}}-minor: {:?}",
                ell + 2,
                minor.witness
            )));
        }
    }
    let value = m.epsilon() as i128;
    let bound = kung_bound(ell as u64, m.rank());
    let evidence = Evidence::bound(value, bound);
    Ok(if value <= bound {
        AnalysisVerdict::new(VerdictKind::BoundHolds, evidence)
    } else {
        AnalysisVerdict::refuted_with(evidence)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::geometry::{principal_extension, truncate, ProjectiveGeometry};

    fn pg(n: usize, q: u32) -> ProjectiveGeometry {
        ProjectiveGeometry::new(n, &FieldSpec::of_order(q).unwrap()).unwrap()
    }

    #[test]
    fn fano_has_no_four_point_line_minor() {
        let m = pg(3, 2);
        assert_eq!(line_minor(m.matroid(), 4).unwrap(), AnalysisVerdict::refuted());
        let v = line_minor(m.matroid(), 3).unwrap();
        assert_eq!(v.kind, VerdictKind::MinorFound);
    }

    #[test]
    fn rank_one_has_no_line_minor() {
        let m = pg(1, 2);
        assert_eq!(line_minor(m.matroid(), 2).unwrap(), AnalysisVerdict::refuted());
        assert!(line_minor(m.matroid(), 1).is_err());
    }

    #[test]
    fn line_placement_gives_five_point_minor() {
        let g = pg(4, 2);
        let line = g.coordinate_flat(&[0, 1]).unwrap().members;
        let (m, e) = principal_extension(g.matroid(), &line).unwrap();
        let me = m.contract(&ElemSet::singleton(e)).unwrap();
        let v = line_minor(&me, 5).unwrap();
        let Some(Evidence::LineMinor {
            contracted,
            covering,
            points,
        }) = v.witness
        else {
            panic!("{v:?}");
        };
        assert!(points >= 5);
        assert_eq!(line_minor_points(&me, &contracted, &covering).unwrap(), points);
        assert_eq!(line_minor(&me, 6).unwrap().kind, VerdictKind::Refuted);
        assert_eq!(has_line_restriction(&me, 5).unwrap().kind, VerdictKind::Witness);
    }

    #[test]
    fn line_restrictions_in_pg23() {
        let m = pg(3, 3);
        assert_eq!(has_line_restriction(m.matroid(), 4).unwrap().kind, VerdictKind::Witness);
        assert_eq!(has_line_restriction(m.matroid(), 5).unwrap().kind, VerdictKind::Refuted);
        assert_eq!(longest_line(m.matroid()).unwrap().unwrap().1, 4);
    }

    #[test]
    fn kung_examples() {
        let fano = pg(3, 2);
        let v = kung_bound_check(fano.matroid(), 2, true).unwrap();
        assert_eq!(v.witness, Some(Evidence::Bound { value: 7, bound: 7 }));
        let t = truncate(pg(4, 2).matroid(), 1).unwrap();
        // contracting a point leaves a 7-point line
        assert!(matches!(
            kung_bound_check(&t, 4, true),
            Err(Error::PreconditionFailed(_))
        ));
        let v = kung_bound_check(&t, 6, true).unwrap();
        assert_eq!(v.witness, Some(Evidence::Bound { value: 15, bound: 43 }));
        let v = kung_bound_check(pg(1, 2).matroid(), 2, true).unwrap();
        assert_eq!(v.witness, Some(Evidence::Bound { value: 1, bound: 1 }));
    }
}
