//! Closure, flats, parallel classes and simplification.

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};

use super::Matroid;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};

/// Closures generated per handle before flat enumeration gives up.
pub const DEFAULT_FLAT_CAP: usize = 2_000_000;

static FLAT_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_FLAT_CAP);

/// Sets the closure cap used by [`Matroid::flats_of_rank`] and the searches
/// built on it, for the whole process.
pub fn set_flat_cap(cap: usize) {
    FLAT_CAP.store(cap, Ordering::Relaxed);
}

pub fn flat_cap() -> usize {
    FLAT_CAP.load(Ordering::Relaxed)
}

/// A closed set together with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Flat {
    pub members: ElemSet,
    pub rank: usize,
}

#[derive(Default)]
pub(crate) struct FlatCache {
    levels: Vec<Vec<ElemSet>>,
    generated: usize,
}

impl Matroid {
    pub(crate) fn cl(&self, x: ElemSet) -> ElemSet {
        let basis = self.basis_of(x);
        self.cl_of_basis(basis, x)
    }

    /// Closure of `x`, given an independent set spanning it.
    pub(crate) fn cl_of_basis(&self, basis: ElemSet, x: ElemSet) -> ElemSet {
        let r = basis.len();
        let mut out = x | basis;
        for y in (self.ground() - out).iter() {
            if self.rk(basis.with(y)) == r {
                out.insert(y);
            }
        }
        out
    }

    /// cl_M(X).
    pub fn closure(&self, x: &ElemSet) -> Result<Flat> {
        self.check_subset(x)?;
        let basis = self.basis_of(*x);
        Ok(Flat {
            members: self.cl_of_basis(basis, *x),
            rank: basis.len(),
        })
    }

    pub fn is_flat(&self, x: &ElemSet) -> bool {
        x.is_subset(&self.ground()) && self.cl(*x) == *x
    }

    /// Checks that `x` is a flat and wraps it.
    pub fn flat(&self, x: &ElemSet) -> Result<Flat> {
        self.check_subset(x)?;
        if !self.is_flat(x) {
            return Err(Error::NotAFlat(*x));
        }
        Ok(Flat {
            members: *x,
            rank: self.rk(*x),
        })
    }

    /// Every rank-`k` flat, sorted lexicographically.
    pub fn flats_of_rank(&self, k: usize) -> Result<Vec<Flat>> {
        self.flats_of_rank_capped(k, flat_cap())
    }

    /// As [`Matroid::flats_of_rank`], failing with `ResourceExceeded` once
    /// more than `cap` closures have been generated on this handle.
    pub fn flats_of_rank_capped(&self, k: usize, cap: usize) -> Result<Vec<Flat>> {
        if k > self.rank() {
            return Err(Error::RankOutOfRange {
                requested: k,
                rank: self.rank(),
            });
        }
        let mut cache = self.node.flat_cache.lock().unwrap();
        if cache.levels.is_empty() {
            cache.levels.push(vec![self.cl(ElemSet::new())]);
        }
        while cache.levels.len() <= k {
            let j = cache.levels.len() - 1;
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            let mut generated = cache.generated;
            for f in &cache.levels[j] {
                let basis = self.basis_of(*f);
                let mut covered = *f;
                for y in (self.ground() - *f).iter() {
                    if covered.contains(y) {
                        continue;
                    }
                    let g = self.cl_of_basis(basis.with(y), f.with(y));
                    covered = covered | g;
                    generated += 1;
                    if generated > cap {
                        return Err(Error::ResourceExceeded(format!(
                            "flat enumeration passed {cap} closures at rank {}",
                            j + 1
                        )));
                    }
                    if seen.insert(g) {
                        next.push(g);
                    }
                }
            }
            next.sort();
            cache.generated = generated;
            cache.levels.push(next);
        }
        Ok(cache.levels[k]
            .iter()
            .map(|&members| Flat { members, rank: k })
            .collect())
    }

    /// All flats of every rank, sorted by (rank, members).
    pub fn all_flats(&self) -> Result<Vec<Flat>> {
        let mut out = Vec::new();
        for k in 0..=self.rank() {
            out.extend(self.flats_of_rank(k)?);
        }
        Ok(out)
    }

    /// Flats of rank `k` that contain `inside`, found by walking covers
    /// upward from `inside` rather than enumerating the whole lattice.
    pub fn flats_above(&self, inside: &Flat, k: usize) -> Result<Vec<Flat>> {
        if k < inside.rank || k > self.rank() {
            return Err(Error::RankOutOfRange {
                requested: k,
                rank: self.rank(),
            });
        }
        let mut level = vec![inside.members];
        for _ in inside.rank..k {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for f in &level {
                let basis = self.basis_of(*f);
                let mut covered = *f;
                for y in (self.ground() - *f).iter() {
                    if covered.contains(y) {
                        continue;
                    }
                    let g = self.cl_of_basis(basis.with(y), f.with(y));
                    covered = covered | g;
                    if seen.insert(g) {
                        next.push(g);
                    }
                }
            }
            level = next;
        }
        level.sort();
        Ok(level
            .into_iter()
            .map(|members| Flat { members, rank: k })
            .collect())
    }

    /// Parallel classes of the non-loops in X, each sorted by smallest member.
    pub fn parallel_classes(&self, x: &ElemSet) -> Result<Vec<ElemSet>> {
        self.check_subset(x)?;
        Ok(self.classes(*x))
    }

    pub(crate) fn classes(&self, x: ElemSet) -> Vec<ElemSet> {
        let mut classes: Vec<ElemSet> = Vec::new();
        let mut reps: Vec<usize> = Vec::new();
        'outer: for e in x.iter() {
            if self.rk(ElemSet::singleton(e)) == 0 {
                continue;
            }
            for (i, &r) in reps.iter().enumerate() {
                if self.rk(ElemSet::singleton(r).with(e)) == 1 {
                    classes[i].insert(e);
                    continue 'outer;
                }
            }
            reps.push(e);
            classes.push(ElemSet::singleton(e));
        }
        classes
    }

    /// ε(M|X): the number of points of the restriction.
    pub fn epsilon_of(&self, x: &ElemSet) -> Result<usize> {
        self.check_subset(x)?;
        Ok(self.eps(*x))
    }

    /// ε(M).
    pub fn epsilon(&self) -> usize {
        self.eps(self.ground())
    }

    pub(crate) fn eps(&self, x: ElemSet) -> usize {
        self.classes(x).len()
    }

    /// si(M): the restriction to the smallest member of each parallel class.
    pub fn simplify(&self) -> Matroid {
        let keep: ElemSet = self
            .classes(self.ground())
            .iter()
            .map(|c| c.first().unwrap())
            .collect();
        self.restrict(&keep).expect("representatives lie in the ground set")
    }

    pub fn is_simple(&self) -> bool {
        self.eps(self.ground()) == self.len()
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::fano;
    use super::*;

    #[test]
    fn fano_lattice() {
        let m = fano();
        assert_eq!(m.flats_of_rank(0).unwrap().len(), 1);
        assert!(m.flats_of_rank(0).unwrap()[0].members.is_empty());
        assert_eq!(m.flats_of_rank(1).unwrap().len(), 7);
        assert_eq!(m.flats_of_rank(2).unwrap().len(), 7);
        assert_eq!(m.flats_of_rank(3).unwrap().len(), 1);
        assert!(matches!(
            m.flats_of_rank(4),
            Err(Error::RankOutOfRange { requested: 4, rank: 3 })
        ));
        for f in m.flats_of_rank(2).unwrap() {
            assert_eq!(f.members.len(), 3);
            assert!(m.is_flat(&f.members));
        }
    }

    #[test]
    fn closure_examples() {
        let m = fano();
        assert!(m.closure(&ElemSet::new()).unwrap().members.is_empty());
        let two: ElemSet = [0, 1].iter().collect();
        let line = m.closure(&two).unwrap();
        assert_eq!(line.members, [0, 1, 2].iter().collect());
        assert_eq!(line.rank, 2);
        assert_eq!(m.closure(&m.ground()).unwrap().members, m.ground());
    }

    #[test]
    fn flat_cap_is_reported() {
        let m = fano();
        assert!(matches!(
            m.flats_of_rank_capped(2, 5),
            Err(Error::ResourceExceeded(_))
        ));
    }

    #[test]
    fn simplification_keeps_smallest() {
        let m = fano();
        let (ext, e) = m.principal_extension(&ElemSet::singleton(3)).unwrap();
        assert_eq!(ext.epsilon(), 7);
        let si = ext.simplify();
        assert_eq!(si.ground(), m.ground());
        assert!(!si.ground().contains(e));
        assert!(m.simplify().ground() == m.ground());
    }

    #[test]
    fn flats_above_a_point() {
        let m = fano();
        let p = m.flat(&ElemSet::singleton(0)).unwrap();
        let lines = m.flats_above(&p, 2).unwrap();
        assert_eq!(lines.len(), 3);
        assert!(lines.iter().all(|l| l.members.contains(0)));
    }

    #[test]
    fn loops_only() {
        let m = Matroid::from_column_codes(&super::super::tests::gf(2), 1, &[vec![0], vec![0]]).unwrap();
        assert_eq!(m.epsilon(), 0);
        assert_eq!(m.flats_of_rank(0).unwrap()[0].members, m.ground());
    }
}
