use super::{Flat, Matroid};
use crate::bitset::ElemSet;
use crate::error::{Error, Result};

impl Matroid {
    /// ⊓(X, Y) = r(X) + r(Y) - r(X ∪ Y).
    pub fn local_connectivity(&self, x: &ElemSet, y: &ElemSet) -> Result<usize> {
        self.check_subset(x)?;
        self.check_subset(y)?;
        Ok(self.sqcap(*x, *y))
    }

    pub(crate) fn sqcap(&self, x: ElemSet, y: ElemSet) -> usize {
        self.rk(x) + self.rk(y) - self.rk(x | y)
    }

    pub fn skew(&self, x: &ElemSet, y: &ElemSet) -> Result<bool> {
        Ok(self.local_connectivity(x, y)? == 0)
    }

    /// Each set is skew to the union of the others.
    pub fn mutually_skew(&self, sets: &[ElemSet]) -> Result<bool> {
        for s in sets {
            self.check_subset(s)?;
        }
        Ok((0..sets.len()).all(|i| {
            let rest = sets
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(ElemSet::new(), |acc, (_, s)| acc | *s);
            self.sqcap(sets[i], rest) == 0
        }))
    }

    fn require_flat(&self, f: &ElemSet) -> Result<()> {
        self.check_subset(f)?;
        if self.is_flat(f) {
            Ok(())
        } else {
            Err(Error::NotAFlat(*f))
        }
    }

    /// ⊓(F1, F2) = r(F1 ∩ F2).
    pub fn is_modular_pair(&self, f1: &ElemSet, f2: &ElemSet) -> Result<bool> {
        self.require_flat(f1)?;
        self.require_flat(f2)?;
        Ok(self.sqcap(*f1, *f2) == self.rk(*f1 & *f2))
    }

    /// F forms a modular pair with every flat of the matroid.
    pub fn is_modular_flat(&self, f: &ElemSet) -> Result<bool> {
        self.require_flat(f)?;
        let flats = self.all_flats()?;
        Ok(self.first_non_modular_partner(*f, &flats).is_none())
    }

    pub(crate) fn first_non_modular_partner(&self, f: ElemSet, flats: &[Flat]) -> Option<Flat> {
        flats
            .iter()
            .find(|g| self.sqcap(f, g.members) != self.rk(f & g.members))
            .copied()
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::fano;
    use super::*;

    #[test]
    fn fano_connectivity() {
        let m = fano();
        let lines = m.flats_of_rank(2).unwrap();
        assert_eq!(
            m.local_connectivity(&lines[0].members, &lines[1].members).unwrap(),
            1
        );
        let l = lines[0].members;
        assert_eq!(m.local_connectivity(&l, &l).unwrap(), 2);
        let p: ElemSet = ElemSet::singleton(6);
        assert!(m.skew(&ElemSet::new(), &p).unwrap());
        assert!(!m.mutually_skew(&[lines[0].members, lines[1].members]).unwrap());
        let a = ElemSet::singleton(0);
        let b = ElemSet::singleton(1);
        let c = ElemSet::singleton(3);
        assert!(m.mutually_skew(&[a, b, c]).unwrap());
    }

    #[test]
    fn projective_planes_are_modular() {
        let m = fano();
        let flats = m.all_flats().unwrap();
        for f in &flats {
            assert!(m.is_modular_flat(&f.members).unwrap());
            for g in &flats {
                assert!(m.is_modular_pair(&f.members, &g.members).unwrap());
            }
        }
        let not_flat: ElemSet = [0, 1].iter().collect();
        assert_eq!(
            m.is_modular_flat(&not_flat).unwrap_err(),
            Error::NotAFlat(not_flat)
        );
    }
}
