//! Seeded instance builders shared by the suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::ElemSet;
use crate::error::Result;
use crate::field::FieldSpec;
use crate::geometry::ProjectiveGeometry;
use crate::io::{Base, ConstructionDocument};
use crate::kernel::Matroid;

/// A matroid under construction together with the document that rebuilds
/// it. `base` is the ground set of the starting geometry.
#[derive(Clone)]
pub(crate) struct Builder {
    pub doc: ConstructionDocument,
    pub m: Matroid,
    pub base: ElemSet,
    pub added: Vec<usize>,
}

impl Builder {
    pub fn pg(q: u32, n: usize) -> Result<Self> {
        let field = FieldSpec::of_order(q)?;
        let g = ProjectiveGeometry::with_max_q(n, &field, q)?;
        Ok(Builder {
            doc: ConstructionDocument::pg(&field, n),
            m: g.matroid().clone(),
            base: g.matroid().ground(),
            added: Vec::new(),
        })
    }

    pub fn from_doc(doc: ConstructionDocument) -> Result<Self> {
        let r = doc.replay()?;
        Ok(Builder {
            doc,
            m: r.matroid,
            base: r.base,
            added: r.added.to_vec(),
        })
    }

    /// Extends on the closure of `set` in the current matroid.
    pub fn place(&mut self, set: ElemSet) -> Result<usize> {
        let flat = self.m.cl(set);
        let (m, e) = self.m.principal_extension(&flat)?;
        self.doc = self.doc.clone().extend(&flat);
        self.m = m;
        self.added.push(e);
        Ok(e)
    }

    pub fn delete(&mut self, set: ElemSet) -> Result<()> {
        self.m = self.m.delete(&set)?;
        self.doc = self.doc.clone().delete(&set);
        Ok(())
    }

    pub fn contract(&mut self, set: ElemSet) -> Result<()> {
        self.m = self.m.contract(&set)?;
        self.doc = self.doc.clone().contract(&set);
        Ok(())
    }

    pub fn truncate(&mut self, k: usize) -> Result<()> {
        self.m = crate::geometry::truncate(&self.m, k)?;
        self.doc = self.doc.clone().truncate(k);
        Ok(())
    }

    /// An independent subset of the base of the given rank, chosen at random
    /// among the elements still present.
    pub fn random_independent(&self, rank: usize, rng: &mut ChaCha8Rng) -> ElemSet {
        let mut elems = (self.base & self.m.ground()).to_vec();
        elems.shuffle(rng);
        let mut set = ElemSet::new();
        let mut r = 0;
        for e in elems {
            if r == rank {
                break;
            }
            if self.m.rk(set.with(e)) > r {
                set.insert(e);
                r += 1;
            }
        }
        set
    }

    /// A random flat of the current matroid spanned by base elements.
    pub fn random_flat(&self, rank: usize, rng: &mut ChaCha8Rng) -> ElemSet {
        self.m.cl(self.random_independent(rank, rng))
    }
}

/// A document whose base is the matrix with the given columns (element
/// codes).
pub(crate) fn matrix_doc(field: &FieldSpec, rows: usize, columns: &[Vec<u8>]) -> ConstructionDocument {
    let cols = columns.len();
    let mut entries = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for c in columns {
            entries.push(field.from_code(c[i]).coeffs().to_vec());
        }
    }
    ConstructionDocument::new(field, Base::Matrix { rows, cols, entries })
}

/// Direct sum of PG(a-1, q) and PG(b-1, q), as a matrix document.
pub(crate) fn pg_sum_doc(q: u32, a: usize, b: usize) -> Result<ConstructionDocument> {
    let field = FieldSpec::of_order(q)?;
    let ga = ProjectiveGeometry::with_max_q(a, &field, q)?;
    let gb = ProjectiveGeometry::with_max_q(b, &field, q)?;
    let mut cols = Vec::new();
    for p in ga.points() {
        let mut v = p.clone();
        v.resize(a + b, 0);
        cols.push(v);
    }
    for p in gb.points() {
        let mut v = vec![0; a];
        v.extend_from_slice(p);
        cols.push(v);
    }
    Ok(matrix_doc(&field, a + b, &cols))
}

/// A random subset keeping each element with probability `keep`.
pub(crate) fn random_subset(set: ElemSet, keep: f64, rng: &mut ChaCha8Rng) -> ElemSet {
    set.iter().filter(|_| rng.gen_bool(keep)).collect()
}

/// Restriction of PG(n-1, q) to a random spanning subset.
pub(crate) fn random_pg_restriction(q: u32, n: usize, keep: f64, rng: &mut ChaCha8Rng) -> Result<Builder> {
    let mut b = Builder::pg(q, n)?;
    let ground = b.m.ground();
    let mut kept = random_subset(ground, keep, rng);
    // keep a basis so the rank does not drop
    kept = kept | b.random_independent(n, rng);
    b.delete(ground - kept)?;
    Ok(b)
}

/// The mixed corpus used by the density, roundness and axiom suites:
/// geometries, random restrictions, projections, truncations and direct
/// sums over small fields. Every fourth instance has at most 10 elements.
pub(crate) fn mixed_corpus(count: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(String, Builder)>> {
    let mut out = Vec::with_capacity(count);
    let shapes = [(2u32, 3usize), (2, 4), (2, 5), (3, 3), (3, 4), (4, 3)];
    for i in 0..count {
        let (q, n) = shapes[rng.gen_range(0..shapes.len())];
        let item = match i % 8 {
            0 | 4 => small(rng)?,
            1 => {
                let keep = rng.gen_range(0.3..0.9);
                let b = random_pg_restriction(q, n, keep, rng)?;
                (format!("PG({}, {q}) restricted to {} elements", n - 1, b.m.len()), b)
            }
            2 => {
                let mut b = Builder::pg(q, n)?;
                let rank = rng.gen_range(2..=n);
                let f = b.random_flat(rank, rng);
                b.place(f)?;
                (format!("PG({}, {q}) + point on a rank-{rank} flat", n - 1), b)
            }
            3 => {
                let mut b = Builder::pg(q, n)?;
                let rank = rng.gen_range(2..=n);
                let f = b.random_flat(rank, rng);
                let e = b.place(f)?;
                b.contract(ElemSet::singleton(e))?;
                (format!("PG({}, {q}) projected from a rank-{rank} flat", n - 1), b)
            }
            5 => {
                let (a, c) = [(2, 3), (3, 3), (2, 2), (1, 3), (3, 2)][rng.gen_range(0..5)];
                let q = if a + c > 5 { 2 } else { q.min(3) };
                let b = Builder::from_doc(pg_sum_doc(q, a, c)?)?;
                (format!("PG({}, {q}) + PG({}, {q}) direct sum", a - 1, c - 1), b)
            }
            6 => {
                let mut b = Builder::pg(q, n)?;
                b.truncate(1)?;
                (format!("truncation of PG({}, {q})", n - 1), b)
            }
            _ => {
                let mut b = Builder::pg(q, n)?;
                let f1 = b.random_flat(n - 1, rng);
                let f2 = b.random_flat(1.max(n - 2), rng);
                b.delete(b.m.ground() - (f1 | f2))?;
                (format!("union of two flats of PG({}, {q})", n - 1), b)
            }
        };
        out.push(item);
    }
    Ok(out)
}

/// A matroid on at most 10 elements.
fn small(rng: &mut ChaCha8Rng) -> Result<(String, Builder)> {
    Ok(match rng.gen_range(0..4) {
        0 => {
            let (a, c) = [(2, 1), (1, 1), (2, 2), (1, 2)][rng.gen_range(0..4)];
            let q = [2, 3][rng.gen_range(0..2)];
            let b = Builder::from_doc(pg_sum_doc(q, a, c)?)?;
            (format!("PG({}, {q}) + PG({}, {q}) direct sum", a - 1, c - 1), b)
        }
        1 => {
            let mut b = Builder::pg(2, 4)?;
            let keep = b.random_independent(4, rng) | random_subset(b.m.ground(), 0.35, rng);
            let kept: ElemSet = keep.iter().take(10).collect();
            b.delete(b.m.ground() - kept)?;
            (format!("PG(3, 2) restricted to {} elements", b.m.len()), b)
        }
        2 => {
            let q = [2, 3][rng.gen_range(0..2)];
            let mut b = Builder::pg(q, 3)?;
            let keep = b.random_independent(3, rng) | random_subset(b.m.ground(), 0.5, rng);
            let kept: ElemSet = keep.iter().take(9).collect();
            b.delete(b.m.ground() - kept)?;
            let f = b.random_flat(rng.gen_range(1..=3), rng);
            b.place(f)?;
            (format!("PG(2, {q}) restricted to {} elements, then extended", b.m.len() - 1), b)
        }
        _ => {
            let mut b = Builder::pg(2, 3)?;
            let f = b.random_flat(rng.gen_range(2..=3), rng);
            b.place(f)?;
            b.truncate(1)?;
            ("truncation of an extended PG(2, 2)".to_string(), b)
        }
    })
}

/// Seeded corpus documents, the same ones the density and roundness suites
/// draw from.
pub fn corpus(seed: u64, count: usize) -> Result<Vec<(String, ConstructionDocument)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(mixed_corpus(count, &mut rng)?
        .into_iter()
        .map(|(label, b)| (label, b.doc))
        .collect())
}

/// A principal-extension projection of PG(n0 - 1, q) from `k` flats of rank
/// at least 2, resampled until the added elements form a rank-k flat.
pub(crate) fn sample_projection(q: u32, n0: usize, k: usize, rng: &mut ChaCha8Rng) -> Result<Option<(Builder, Vec<usize>)>> {
    for _ in 0..64 {
        let mut b = Builder::pg(q, n0)?;
        let mut ranks = Vec::with_capacity(k);
        for _ in 0..k {
            let rank = rng.gen_range(2..=n0);
            let f = b.random_flat(rank, rng);
            b.place(f)?;
            ranks.push(rank);
        }
        let c: ElemSet = b.added.iter().collect();
        if b.m.rk(c) == k && b.m.cl(c) == c {
            return Ok(Some((b, ranks)));
        }
    }
    Ok(None)
}

/// PG(n-1, 2) with one extra point u + ωv over GF(4) on each given line
/// {u, v, u+v}. Unlike repeated free placements, these extensions are
/// jointly GF(4)-representable, so the result has no U_{2,6}-minor.
pub(crate) fn gf4_placements(n: usize, lines: &[(usize, usize)]) -> Result<Builder> {
    let g = ProjectiveGeometry::new(n, &FieldSpec::new(2, 1)?)?;
    let mut cols: Vec<Vec<u8>> = g.points().to_vec();
    for &(u, v) in lines {
        let (pu, pv) = (&g.points()[u], &g.points()[v]);
        // code of c0 + c1 ω is c0 + 2 c1
        cols.push(pu.iter().zip(pv).map(|(a, b)| a + 2 * b).collect());
    }
    let base = g.matroid().ground();
    let doc = matrix_doc(&FieldSpec::new(2, 2)?, n, &cols);
    let mut b = Builder::from_doc(doc)?;
    b.added = (b.m.ground() - base).to_vec();
    b.base = base;
    Ok(b)
}
