//! Brute-force oracles over prime fields, written without the library's
//! rank machinery.

#![allow(dead_code)]

use std::collections::HashSet;

use dense_matroids::{ElemSet, FieldSpec, Matroid};
use rand::Rng;

/// Column vectors over Z_p.
#[derive(Debug, Clone)]
pub struct Columns {
    pub p: u32,
    pub rows: usize,
    pub cols: Vec<Vec<u32>>,
}

impl Columns {
    pub fn random(p: u32, rows: usize, n: usize, rng: &mut impl Rng) -> Self {
        let cols = (0..n)
            .map(|_| (0..rows).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        Columns { p, rows, cols }
    }

    pub fn matroid(&self) -> Matroid {
        let field = FieldSpec::of_order(self.p).unwrap();
        let cols: Vec<_> = self
            .cols
            .iter()
            .map(|c| c.iter().map(|&x| field.element(&[x]).unwrap()).collect())
            .collect();
        Matroid::from_columns(&field, self.rows, &cols).unwrap()
    }

    fn pick(&self, x: ElemSet) -> Vec<&Vec<u32>> {
        x.iter().map(|i| &self.cols[i]).collect()
    }

    /// log_p of the size of the span, which is enumerated.
    pub fn span_rank(&self, x: ElemSet) -> usize {
        let mut span: HashSet<Vec<u32>> = HashSet::new();
        span.insert(vec![0; self.rows]);
        for v in self.pick(x) {
            let current: Vec<Vec<u32>> = span.iter().cloned().collect();
            for s in current {
                for c in 1..self.p {
                    span.insert(s.iter().zip(v).map(|(a, b)| (a + c * b) % self.p).collect());
                }
            }
        }
        let mut size = span.len();
        let mut r = 0;
        while size > 1 {
            size /= self.p as usize;
            r += 1;
        }
        r
    }

    /// Row reduction mod p.
    pub fn gauss_rank(&self, x: ElemSet) -> usize {
        let p = self.p as u64;
        let mut m: Vec<Vec<u64>> = self.pick(x).iter().map(|c| c.iter().map(|&v| v as u64).collect()).collect();
        let inv = |a: u64| (1..p).find(|b| a * b % p == 1).unwrap();
        let mut rank = 0;
        for col in 0..self.rows {
            let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let scale = inv(m[rank][col]);
            let pivot: Vec<u64> = m[rank].iter().map(|v| v * scale % p).collect();
            for (i, row) in m.iter_mut().enumerate() {
                if i != rank && row[col] != 0 {
                    let f = row[col];
                    for (a, b) in row.iter_mut().zip(&pivot) {
                        *a = (*a + p * p - f * b) % p;
                    }
                }
            }
            m[rank] = pivot;
            rank += 1;
        }
        rank
    }
}

pub fn subsets(ground: ElemSet) -> impl Iterator<Item = ElemSet> {
    let elems = ground.to_vec();
    (0u32..1 << elems.len()).map(move |mask| {
        elems
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    })
}

/// The largest m such that M has a U_{2,m}-minor (0 below rank 2), found by
/// contracting every independent set and counting parallel classes on every
/// line of the contraction.
pub fn max_line_minor(n: usize, rank: impl Fn(ElemSet) -> usize) -> usize {
    let ground = ElemSet::range(n);
    let r = rank(ground);
    let mut best = 0;
    for c in subsets(ground) {
        if c.len() + 2 > r || rank(c) != c.len() {
            continue;
        }
        let rc = c.len();
        let rel = |x: ElemSet| rank(x | c) - rc;
        let nonloops: Vec<usize> = (ground - c).iter().filter(|&e| rel(ElemSet::singleton(e)) == 1).collect();
        for (i, &a) in nonloops.iter().enumerate() {
            for &b in &nonloops[i + 1..] {
                let pair = ElemSet::singleton(a).with(b);
                if rel(pair) != 2 {
                    continue;
                }
                let mut reps: Vec<usize> = Vec::new();
                for &x in &nonloops {
                    if rel(pair.with(x)) == 2 && reps.iter().all(|&y| rel(ElemSet::singleton(x).with(y)) == 2) {
                        reps.push(x);
                    }
                }
                best = best.max(reps.len());
            }
        }
    }
    best
}

/// Weak roundness by trying every B with r(B) <= r - 1.
pub fn brute_weakly_round(m: &Matroid) -> bool {
    let r = m.rank();
    if r <= 2 {
        return true;
    }
    let ground = m.ground();
    !subsets(ground).any(|b| {
        m.rank_of(&b).unwrap() < r && m.rank_of(&(ground - b)).unwrap() + 2 <= r
    })
}
