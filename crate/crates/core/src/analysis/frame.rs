//! Matroids with a spanning projective-geometry restriction R: matchings,
//! R-unstable sets and the long-line checks.

use serde::{Deserialize, Serialize};

use super::density::{fullness, matching_bound, pg_count, FullnessParams};
use super::lines::{has_line_restriction, line_minor_capped};
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::geometry::spanning_flat;
use crate::kernel::{Flat, Matroid};
use crate::verdict::{AnalysisVerdict, Evidence, VerdictKind};

/// Search nodes visited by [`max_matching`] before giving up.
pub const MATCHING_NODE_CAP: usize = 5_000_000;
/// Closures a long-line conclusion search may generate.
pub const LONG_LINE_CAP: usize = 400_000;

/// Checks that `r` spans M and is a copy of PG(r(M) - 1, q).
pub fn check_pg_restriction(m: &Matroid, r: &ElemSet, q: u64) -> Result<()> {
    m.check_subset(r)?;
    let rank = m.rank();
    if m.rk(*r) != rank {
        return Err(Error::PreconditionFailed(format!("{r} does not span")));
    }
    let want = pg_count(q, rank as u32);
    if r.len() as i128 != want || m.eps(*r) as i128 != want {
        return Err(Error::PreconditionFailed(format!(
            "restriction has {} elements and {} points, PG({}, {q}) has {want}",
            r.len(),
            m.eps(*r),
            rank.saturating_sub(1)
        )));
    }
    Ok(())
}

/// Largest mutually skew subfamily of `lines` (as indices), found by
/// branch and bound. Stops early once `target` lines are found.
pub fn max_matching(m: &Matroid, lines: &[ElemSet], target: usize) -> Result<Vec<usize>> {
    struct Search<'a> {
        m: &'a Matroid,
        lines: &'a [ElemSet],
        target: usize,
        best: Vec<usize>,
        nodes: usize,
    }
    impl Search<'_> {
        fn go(&mut self, start: usize, chosen: &mut Vec<usize>, union: ElemSet) -> Result<()> {
            self.nodes += 1;
            if self.nodes > MATCHING_NODE_CAP {
                return Err(Error::ResourceExceeded(format!(
                    "matching search passed {MATCHING_NODE_CAP} nodes"
                )));
            }
            if chosen.len() > self.best.len() {
                self.best = chosen.clone();
            }
            if self.best.len() >= self.target {
                return Ok(());
            }
            let room = (self.m.rank() - 2 * chosen.len()) / 2;
            let left = self.lines.len() - start;
            if chosen.len() + room.min(left) <= self.best.len() {
                return Ok(());
            }
            for i in start..self.lines.len() {
                let u = union | self.lines[i];
                if self.m.rk(u) == 2 * chosen.len() + 2 {
                    chosen.push(i);
                    self.go(i + 1, chosen, u)?;
                    chosen.pop();
                    if self.best.len() >= self.target {
                        return Ok(());
                    }
                }
            }
            Ok(())
        }
    }
    for l in lines {
        m.check_subset(l)?;
        if m.rk(*l) != 2 {
            return Err(Error::PreconditionFailed(format!("{l} is not a line")));
        }
    }
    let mut s = Search {
        m,
        lines,
        target,
        best: Vec::new(),
        nodes: 0,
    };
    s.go(0, &mut Vec::new(), ElemSet::new())?;
    Ok(s.best)
}

/// Looks for `k` mutually skew lines among `lines`. The refutation carries
/// the largest matching found.
pub fn find_matching(m: &Matroid, lines: &[Flat], k: usize) -> Result<AnalysisVerdict> {
    let sets: Vec<ElemSet> = lines.iter().map(|l| l.members).collect();
    let best = max_matching(m, &sets, k)?;
    let witness = Evidence::Matching {
        lines: best.iter().map(|&i| sets[i]).collect(),
        elements: Vec::new(),
    };
    Ok(if best.len() >= k {
        AnalysisVerdict::new(VerdictKind::Witness, witness)
    } else {
        AnalysisVerdict::refuted_with(witness)
    })
}

/// One row of the cover report: the lowest-rank flat that meets all but at
/// most `allowed_misses` of the lines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverRow {
    pub allowed_misses: usize,
    pub flat: Flat,
    pub missed: usize,
}

/// For j = 0..=5, the first flat of least rank meeting all but j lines.
/// Exploratory only: no bound on the number of missed lines is implied.
pub fn matching_cover_report(m: &Matroid, lines: &[Flat]) -> Result<Vec<CoverRow>> {
    let flats = m.all_flats()?;
    let mut rows = Vec::new();
    for j in 0..=5usize.min(lines.len()) {
        for f in &flats {
            let missed = lines
                .iter()
                .filter(|l| l.members.is_disjoint(&f.members))
                .count();
            if missed <= j {
                rows.push(CoverRow {
                    allowed_misses: j,
                    flat: *f,
                    missed,
                });
                break;
            }
        }
    }
    Ok(rows)
}

/// L_x for every x outside R, each of which must be spanned by a line of R.
pub fn spanning_lines(m: &Matroid, r: &ElemSet) -> Result<Vec<(usize, Flat)>> {
    let mut out = Vec::new();
    for x in (m.ground() - *r).iter() {
        let lx = spanning_flat(m, r, x)?;
        if lx.rank != 2 {
            return Err(Error::StructureViolation(format!(
                "element {x} is spanned by {} of rank {}",
                lx.members, lx.rank
            )));
        }
        out.push((x, lx));
    }
    Ok(out)
}

/// An R-unstable set of size `k`: elements outside R whose spanning lines
/// form a k-matching of R.
pub fn find_unstable(m: &Matroid, r: &ElemSet, k: usize) -> Result<AnalysisVerdict> {
    let mut reps: Vec<(usize, ElemSet)> = Vec::new();
    for (x, l) in spanning_lines(m, r)? {
        if !reps.iter().any(|(_, seen)| *seen == l.members) {
            reps.push((x, l.members));
        }
    }
    let restriction = m.restrict(r)?;
    let lines: Vec<ElemSet> = reps.iter().map(|(_, l)| *l).collect();
    let best = max_matching(&restriction, &lines, k)?;
    let witness = Evidence::Matching {
        lines: best.iter().map(|&i| reps[i].1).collect(),
        elements: best.iter().map(|&i| reps[i].0).collect(),
    };
    Ok(if best.len() >= k {
        AnalysisVerdict::new(VerdictKind::Witness, witness)
    } else {
        AnalysisVerdict::refuted_with(witness)
    })
}

/// Whether `x` is R-unstable, returning its spanning lines.
pub fn unstable_lines(m: &Matroid, r: &ElemSet, x: &ElemSet) -> Result<Option<Vec<Flat>>> {
    m.check_subset(x)?;
    if !x.is_disjoint(r) {
        return Ok(None);
    }
    let local = m.restrict(&(*r | *x))?;
    let mut lines = Vec::new();
    for e in x.iter() {
        let l = spanning_flat(&local, r, e)?;
        if l.rank != 2 {
            return Ok(None);
        }
        lines.push(l);
    }
    let union = lines.iter().fold(ElemSet::new(), |u, l| u | l.members);
    Ok((m.rk(union) == 2 * lines.len()).then_some(lines))
}

/// The minor N = (M | (G ∪ X)) / X, where G is the flat of R spanned by the
/// lines L_x, padded with elements of R in identifier order to rank n + |X|.
pub fn unstable_contraction(m: &Matroid, r: &ElemSet, x: &ElemSet, n: usize) -> Result<Matroid> {
    let lines = unstable_lines(m, r, x)?
        .ok_or_else(|| Error::PreconditionFailed(format!("{x} is not R-unstable")))?;
    let k = x.len();
    let target = n + k;
    let mut g = lines.iter().fold(ElemSet::new(), |u, l| u | l.members);
    let mut rank = m.rk(g);
    for y in r.iter() {
        if rank >= target {
            break;
        }
        if !g.contains(y) && m.rk(g.with(y)) > rank {
            g.insert(y);
            rank += 1;
        }
    }
    let g = m.cl(g) & *r;
    m.restrict(&(g | *x))?.contract(x)
}

/// For an R-unstable X of size k with n > k and r(M) >= n + k: the rank-n
/// minor built by [`unstable_contraction`] is (q,k)-full with a
/// (q^2 + 1)-point line, and cl_M(X) misses R.
pub fn contract_unstable_check(m: &Matroid, r: &ElemSet, x: &ElemSet, n: usize, q: u64) -> Result<AnalysisVerdict> {
    let k = x.len();
    if k == 0 {
        return Ok(AnalysisVerdict::new(
            VerdictKind::BoundHolds,
            Evidence::Note {
                text: "empty unstable set".into(),
            },
        ));
    }
    if n <= k || m.rank() < n + k {
        return Err(Error::PreconditionFailed(format!(
            "need n > k and r(M) >= n + k, got n = {n}, k = {k}, r = {}",
            m.rank()
        )));
    }
    let clx = m.cl(*x) & *r;
    if !clx.is_empty() {
        return Ok(AnalysisVerdict::refuted_with(Evidence::Subset {
            set: clx,
            rank: m.rk(*x),
            points: m.eps(clx),
        }));
    }
    let minor = unstable_contraction(m, r, x, n)?;
    let params = FullnessParams::new(q, k as u32)?;
    let value = minor.epsilon() as i128;
    let bound = params.threshold(minor.rank());
    if minor.rank() != n || !fullness(&minor, params).is_full() {
        return Ok(AnalysisVerdict::refuted_with(Evidence::bound(value, bound)));
    }
    let q = q as usize;
    let line = has_line_restriction(&minor, q * q + 1)?;
    if !line.holds() {
        return Ok(AnalysisVerdict::refuted_with(Evidence::Note {
            text: format!("no line with {} points in the rank-{n} minor", q * q + 1),
        }));
    }
    Ok(AnalysisVerdict::new(VerdictKind::BoundHolds, Evidence::bound(value, bound)))
}

/// The first line of M with at least `points` points that contains two
/// elements outside R. A line meets R in at most q + 1 points, so lines
/// longer than that always have such a pair.
fn long_line_off(m: &Matroid, r: &ElemSet, points: usize) -> Option<(ElemSet, usize)> {
    let outside = (m.ground() - *r).to_vec();
    let mut seen = std::collections::HashSet::new();
    for (i, &a) in outside.iter().enumerate() {
        for &b in &outside[i + 1..] {
            let pair = ElemSet::singleton(a).with(b);
            if m.rk(pair) < 2 {
                continue;
            }
            let l = m.cl(pair);
            if seen.insert(l) {
                let n = m.eps(l);
                if n >= points {
                    return Some((l, n));
                }
            }
        }
    }
    None
}

/// Smallest flat of R whose closure in M contains `x`.
fn spanning_flat_of_set(m: &Matroid, r: &ElemSet, x: &ElemSet) -> Result<ElemSet> {
    let mut union = *x & *r;
    for e in (*x - *r).iter() {
        union = union | spanning_flat(m, r, e)?.members;
    }
    Ok(m.cl(union) & *r)
}

/// Searches for a U_{2,points}-minor, first inside restrictions to
/// cl(F ∪ y) for points y of R outside the flat F, then in M itself.
/// Witnesses found in a restriction are witnesses in M.
fn local_line_minor(m: &Matroid, r: &ElemSet, f: ElemSet, points: usize) -> Result<AnalysisVerdict> {
    let spanned = m.cl(f);
    let mut tried = 0;
    for y in (*r - spanned).iter() {
        let s = m.cl(spanned.with(y));
        let v = line_minor_capped(&m.restrict(&s)?, points, LONG_LINE_CAP)?;
        if v.kind == VerdictKind::MinorFound {
            return Ok(v);
        }
        tried += 1;
        if tried == 3 {
            break;
        }
    }
    line_minor_capped(m, points, LONG_LINE_CAP)
}

/// If M is simple of rank at least 7 with spanning PG-restriction R, a line
/// with at least q^2 + 2 points, and an element off both R and that line,
/// then M has a U_{2,q^2+q+1}-minor. Instances lacking the line or the extra
/// element pass vacuously.
pub fn long_line_checks(m: &Matroid, r: &ElemSet, q: u64) -> Result<AnalysisVerdict> {
    if m.rank() < 7 {
        return Err(Error::PreconditionFailed(format!(
            "rank {} below 7",
            m.rank()
        )));
    }
    if !m.is_simple() {
        return Err(Error::PreconditionFailed("matroid is not simple".into()));
    }
    check_pg_restriction(m, r, q)?;
    let q = q as usize;
    let Some((line, _)) = long_line_off(m, r, q * q + 2) else {
        return Ok(vacuous("no line with q^2 + 2 points"));
    };
    let Some(z) = (m.ground() - (*r | line)).first() else {
        return Ok(vacuous("every element lies in R or on the long line"));
    };
    let f = spanning_flat_of_set(m, r, &line.with(z))?;
    local_line_minor(m, r, f, q * q + q + 1)
}

/// If r(M) >= k + 7 with a spanning PG-restriction R, and X has rank at most
/// k with ε(M|X) > (q^{2k} - 1)/(q^2 - 1), then M has a
/// U_{2,q^2+q+1}-minor. Requires k >= 3.
pub fn long_line_set_check(m: &Matroid, r: &ElemSet, x: &ElemSet, q: u64, k: usize) -> Result<AnalysisVerdict> {
    if k < 3 || m.rank() < k + 7 {
        return Err(Error::PreconditionFailed(format!(
            "need k >= 3 and rank >= k + 7, got k = {k}, rank {}",
            m.rank()
        )));
    }
    check_pg_restriction(m, r, q)?;
    m.check_subset(x)?;
    if m.rk(*x) > k || m.eps(*x) as i128 <= matching_bound(q, k as u32) {
        return Ok(vacuous("X is not dense enough"));
    }
    let f = spanning_flat_of_set(m, r, x)?;
    let q = q as usize;
    local_line_minor(m, r, f, q * q + q + 1)
}

fn vacuous(why: &str) -> AnalysisVerdict {
    AnalysisVerdict::new(
        VerdictKind::BoundHolds,
        Evidence::Note {
            text: format!("hypotheses absent: {why}"),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::geometry::ProjectiveGeometry;

    fn pg(n: usize) -> ProjectiveGeometry {
        ProjectiveGeometry::new(n, &FieldSpec::of_order(2).unwrap()).unwrap()
    }

    fn place(m: &Matroid, g: &ProjectiveGeometry, axes: &[usize]) -> (Matroid, usize) {
        let f = m.cl(g.coordinate_flat(axes).unwrap().members);
        m.principal_extension(&f).unwrap()
    }

    #[test]
    fn matchings_in_pg() {
        let g = pg(4);
        let lines = g.matroid().flats_of_rank(2).unwrap();
        assert_eq!(find_matching(g.matroid(), &lines, 2).unwrap().kind, VerdictKind::Witness);
        let v = find_matching(g.matroid(), &lines, 3).unwrap();
        assert_eq!(v.kind, VerdictKind::Refuted);
        let Some(Evidence::Matching { lines: best, .. }) = v.witness else {
            panic!()
        };
        assert_eq!(best.len(), 2);
        let g6 = pg(6);
        let coords: Vec<Flat> = [[0, 1], [2, 3], [4, 5]]
            .iter()
            .map(|a| g6.coordinate_flat(a).unwrap())
            .collect();
        assert_eq!(find_matching(g6.matroid(), &coords, 3).unwrap().kind, VerdictKind::Witness);
    }

    #[test]
    fn cover_report_on_two_lines() {
        let g = pg(4);
        let lines = vec![g.coordinate_flat(&[0, 1]).unwrap(), g.coordinate_flat(&[2, 3]).unwrap()];
        let rows = matching_cover_report(g.matroid(), &lines).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].flat.rank, 2);
        assert_eq!(rows[1].flat.rank, 1);
        assert_eq!(rows[2].flat.rank, 0);
    }

    #[test]
    fn unstable_sets() {
        let g = pg(5);
        let r = g.matroid().ground();
        let (m, _) = place(g.matroid(), &g, &[0, 1]);
        let (skew, _) = place(&m, &g, &[2, 3]);
        assert_eq!(find_unstable(&skew, &r, 2).unwrap().kind, VerdictKind::Witness);
        let (meet, _) = place(&m, &g, &[1, 2]);
        assert_eq!(find_unstable(&meet, &r, 2).unwrap().kind, VerdictKind::Refuted);
        assert_eq!(find_unstable(&meet, &r, 1).unwrap().kind, VerdictKind::Witness);
        assert_eq!(find_unstable(&meet, &r, 0).unwrap().kind, VerdictKind::Witness);
        let (plane, _) = place(&m, &g, &[1, 2, 3]);
        assert!(matches!(find_unstable(&plane, &r, 1), Err(Error::StructureViolation(_))));
    }

    #[test]
    fn contract_unstable_examples() {
        let g = pg(5);
        let r = g.matroid().ground();
        let (m, a) = place(g.matroid(), &g, &[0, 1]);
        let (m, b) = place(&m, &g, &[2, 3]);
        let x = ElemSet::singleton(a).with(b);
        let n = unstable_contraction(&m, &r, &x, 3).unwrap();
        assert_eq!(n.rank(), 3);
        assert!(n.epsilon() >= 21);
        let v = contract_unstable_check(&m, &r, &x, 3, 2).unwrap();
        assert_eq!(v.kind, VerdictKind::BoundHolds, "{v:?}");
        for n in 2..=4 {
            let v = contract_unstable_check(&m, &r, &ElemSet::singleton(a), n, 2).unwrap();
            assert_eq!(v.kind, VerdictKind::BoundHolds, "n = {n}: {v:?}");
        }
        assert!(contract_unstable_check(&m, &r, &ElemSet::new(), 3, 2).unwrap().holds());
        assert!(matches!(
            contract_unstable_check(&m, &r, &x, 2, 2),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn long_line_preconditions() {
        let g = pg(4);
        let r = g.matroid().ground();
        assert!(matches!(
            long_line_checks(g.matroid(), &r, 2),
            Err(Error::PreconditionFailed(_))
        ));
    }
}
