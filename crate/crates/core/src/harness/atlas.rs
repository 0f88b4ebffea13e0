//! The projection atlas and the growth-rate table.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::corpus::{sample_projection, Builder};
use crate::analysis::GrowthRateOracle;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::geometry::{pg_points, ProjectiveGeometry, MAX_PG_RANK};
use crate::io::ConstructionDocument;

/// One achieved value of d = (ε(N\C) - ε(N/C))/q.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasEntry {
    pub q: u32,
    pub k: usize,
    pub construction: ConstructionDocument,
    pub eps_deleted: usize,
    pub eps_contracted: usize,
    pub d: usize,
}

fn entry(q: u32, k: usize, b: &Builder) -> Result<AtlasEntry> {
    let c: ElemSet = b.added.iter().collect();
    let eps_deleted = b.m.delete(&c)?.epsilon();
    let eps_contracted = b.m.contract(&c)?.epsilon();
    Ok(AtlasEntry {
        q,
        k,
        construction: b.doc.clone(),
        eps_deleted,
        eps_contracted,
        d: (eps_deleted - eps_contracted) / q as usize,
    })
}

/// The values of d reached by k-element projections of small geometries,
/// one entry per value in increasing order, from at most `budget`
/// constructions. For k = 1 every flat of rank at least 2 in PG(n-1, q),
/// n <= 4, is tried; for k = 2 flat pairs are sampled from `seed`. The list
/// says nothing about values that were not reached.
pub fn projection_atlas(q: u32, k: usize, budget: usize, seed: u64) -> Result<Vec<AtlasEntry>> {
    if !(q == 2 || q == 3) || k > 2 {
        return Err(Error::UnsupportedSize(format!("atlas needs q in {{2, 3}} and k <= 2, got q = {q}, k = {k}")));
    }
    let mut found: BTreeMap<usize, AtlasEntry> = BTreeMap::new();
    let mut record = |e: AtlasEntry| {
        found.entry(e.d).or_insert(e);
    };
    let field = FieldSpec::of_order(q)?;
    match k {
        0 => record(entry(q, 0, &Builder::pg(q, 3)?)?),
        1 => {
            let mut spent = 0;
            'outer: for n in 2..=4 {
                let g = ProjectiveGeometry::new(n, &field)?;
                for rank in 2..=n {
                    for f in g.matroid().flats_of_rank(rank)? {
                        if spent == budget {
                            break 'outer;
                        }
                        spent += 1;
                        let mut b = Builder::pg(q, n)?;
                        b.place(f.members)?;
                        record(entry(q, 1, &b)?);
                    }
                }
            }
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let top = if q == 2 { 5 } else { 4 };
            for _ in 0..budget {
                let n0 = rng.gen_range(3..=top);
                if let Some((b, _)) = sample_projection(q, n0, 2, &mut rng)? {
                    record(entry(q, 2, &b)?);
                }
            }
        }
    }
    Ok(found.into_values().collect())
}

/// One row of the growth table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthRow {
    pub n: usize,
    /// (q^{n+k} - 1)/(q - 1) - q (q^{2k} - 1)/(q^2 - 1).
    pub h: i128,
    /// (q^{n+k} - 1)/(q - 1).
    pub truncation_formula: i128,
    /// ε of the k-fold truncation of PG(n+k-1, q), where it is small enough
    /// to build.
    pub measured: Option<usize>,
    pub gap: i128,
}

/// Both growth formulas for n = 1..=n_max, with measured truncation
/// densities for n >= 2 when PG(n+k-1, q) has at most 130 points.
pub fn growth_table(q: u32, k: usize, n_max: usize) -> Vec<GrowthRow> {
    let oracle = GrowthRateOracle::new(q as u64, k as u32);
    (1..=n_max)
        .map(|n| {
            let small = n >= 2 && n + k <= MAX_PG_RANK && pg_points(q as u64, (n + k) as u32) <= 130;
            let measured = small.then(|| measure(q, k, n)).flatten();
            GrowthRow {
                n,
                h: oracle.h(n),
                truncation_formula: oracle.truncation(n),
                measured,
                gap: oracle.truncation(n) - oracle.h(n),
            }
        })
        .collect()
}

fn measure(q: u32, k: usize, n: usize) -> Option<usize> {
    let mut b = Builder::pg(q, n + k).ok()?;
    b.truncate(k).ok()?;
    Some(b.m.epsilon())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_single_element_atlas() {
        let atlas = projection_atlas(2, 1, usize::MAX, 0).unwrap();
        let ds: Vec<usize> = atlas.iter().map(|e| e.d).collect();
        assert_eq!(ds, vec![0, 1]);
        for e in &atlas {
            assert_eq!(e.construction.replay().unwrap().matroid.len(), e.eps_deleted + 1);
        }
        assert_eq!(projection_atlas(2, 0, 10, 0).unwrap()[0].d, 0);
        assert!(projection_atlas(5, 1, 10, 0).is_err());
    }

    #[test]
    fn ternary_line_placement() {
        let atlas = projection_atlas(3, 1, usize::MAX, 0).unwrap();
        let one = atlas.iter().find(|e| e.d == 1).unwrap();
        assert_eq!(one.eps_deleted - one.eps_contracted, 3);
    }

    #[test]
    fn growth_rows() {
        let rows = growth_table(2, 1, 4);
        let r3 = &rows[2];
        assert_eq!((r3.h, r3.truncation_formula, r3.measured, r3.gap), (13, 15, Some(15), 2));
        assert_eq!(rows[0].measured, None);
        assert_eq!(growth_table(2, 0, 4)[3].h, 15);
        assert_eq!(growth_table(3, 0, 3)[2].h, 13);
    }
}
