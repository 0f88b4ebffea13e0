use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Matroid;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::verdict::{AnalysisVerdict, Evidence, VerdictKind};

/// Ground sets this small are checked on every subset.
pub const EXHAUSTIVE_AXIOM_LIMIT: usize = 12;

fn violation(axiom: &str, witness: Vec<ElemSet>) -> Error {
    Error::AxiomViolation {
        axiom: axiom.to_string(),
        witness,
    }
}

impl Matroid {
    /// Checks boundedness, monotonicity, unit increase and submodularity of
    /// the rank oracle. Exhaustive (local submodularity on every subset) for
    /// ground sets of at most 12 elements; otherwise `trials` seeded samples.
    pub fn axiom_check(&self, trials: usize, seed: u64) -> Result<AnalysisVerdict> {
        let elems = self.ground().to_vec();
        let declared = self.rank();
        let full = self.rk(self.ground());
        if full != declared {
            return Err(violation("declared rank", vec![self.ground()]));
        }
        if self.rk(ElemSet::new()) != 0 {
            return Err(violation("empty set has rank 0", vec![ElemSet::new()]));
        }
        let subset = |mask: u64| -> ElemSet {
            elems
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        };
        let mut checked = 0u64;
        let mut local = |x: ElemSet, y: usize, z: usize| -> Result<()> {
            let rx = self.rk(x);
            if rx > x.len() {
                return Err(violation("r(X) <= |X|", vec![x]));
            }
            let xy = x.with(y);
            let rxy = self.rk(xy);
            if rxy < rx || rxy > rx + 1 {
                return Err(violation("r(X) <= r(X+y) <= r(X)+1", vec![x, xy]));
            }
            if y != z {
                let xz = x.with(z);
                let xyz = xy.with(z);
                if rxy + self.rk(xz) < self.rk(xyz) + rx {
                    return Err(violation("submodularity", vec![xy, xz]));
                }
            }
            checked += 1;
            Ok(())
        };
        if elems.len() <= EXHAUSTIVE_AXIOM_LIMIT {
            for mask in 0..1u64 << elems.len() {
                let x = subset(mask);
                let outside: Vec<usize> = elems.iter().copied().filter(|e| !x.contains(*e)).collect();
                if self.rk(x) > x.len() {
                    return Err(violation("r(X) <= |X|", vec![x]));
                }
                for (i, &y) in outside.iter().enumerate() {
                    for &z in &outside[i..] {
                        local(x, y, z)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials.max(1) {
                let x: ElemSet = elems.iter().copied().filter(|_| rng.gen_bool(0.4)).collect();
                let y = elems[rng.gen_range(0..elems.len())];
                let z = elems[rng.gen_range(0..elems.len())];
                local(x.without(y).without(z), y, z)?;
                let a: ElemSet = elems.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
                let b: ElemSet = elems.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
                if self.rk(a) + self.rk(b) < self.rk(a | b) + self.rk(a & b) {
                    return Err(violation("submodularity", vec![a, b]));
                }
                if self.rk(a & b) > self.rk(a) {
                    return Err(violation("monotonicity", vec![a & b, a]));
                }
            }
        }
        Ok(AnalysisVerdict::new(
            VerdictKind::BoundHolds,
            Evidence::Note {
                text: format!("{checked} local checks on {} elements", elems.len()),
            },
        ))
    }
}
