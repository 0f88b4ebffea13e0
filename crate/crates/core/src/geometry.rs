//! Projective geometries and the matroids built from them by principal
//! extension, truncation and projection.

use crate::bitset::{ElemSet, CAPACITY};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::kernel::{Flat, Matroid};

/// Default bound on the field order accepted by [`ProjectiveGeometry::new`].
pub const DEFAULT_MAX_Q: u32 = 5;
/// Largest supported rank.
pub const MAX_PG_RANK: usize = 7;

/// (q^n - 1)/(q - 1), the number of points of PG(n-1, q).
pub fn pg_points(q: u64, n: u32) -> u64 {
    (q.pow(n) - 1) / (q - 1)
}

/// PG(n-1, q): the rank-n matroid on the projective points of GF(q)^n.
///
/// Points are normalised so their first nonzero coordinate is 1, and element
/// `i` is the i-th such vector in lexicographic order of element codes.
#[derive(Clone, Debug)]
pub struct ProjectiveGeometry {
    field: FieldSpec,
    n: usize,
    points: Vec<Vec<u8>>,
    matroid: Matroid,
}

impl ProjectiveGeometry {
    pub fn new(n: usize, field: &FieldSpec) -> Result<Self> {
        Self::with_max_q(n, field, DEFAULT_MAX_Q)
    }

    pub fn with_max_q(n: usize, field: &FieldSpec, max_q: u32) -> Result<Self> {
        let q = field.q();
        if q > max_q {
            return Err(Error::UnsupportedSize(format!(
                "q = {q} above the configured cap {max_q}"
            )));
        }
        if n == 0 || n > MAX_PG_RANK {
            return Err(Error::UnsupportedSize(format!(
                "rank {n} outside 1..={MAX_PG_RANK}"
            )));
        }
        let count = pg_points(q as u64, n as u32);
        if count > CAPACITY as u64 {
            return Err(Error::UnsupportedSize(format!(
                "PG({}, {q}) has {count} points; the limit is {CAPACITY}",
                n - 1
            )));
        }
        let mut points = Vec::with_capacity(count as usize);
        for lead in 0..n {
            let free = n - lead - 1;
            for idx in 0..(q as usize).pow(free as u32) {
                let mut v = vec![0u8; n];
                v[lead] = 1;
                let mut rest = idx;
                for j in (lead + 1..n).rev() {
                    v[j] = (rest % q as usize) as u8;
                    rest /= q as usize;
                }
                points.push(v);
            }
        }
        points.sort();
        let matroid = Matroid::from_column_codes(field, n, &points)?;
        Ok(ProjectiveGeometry {
            field: field.clone(),
            n,
            points,
            matroid,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// The rank n of PG(n-1, q).
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    /// Normalised coordinate codes of every point, indexed by element.
    pub fn points(&self) -> &[Vec<u8>] {
        &self.points
    }

    /// Element whose point is spanned by the nonzero vector `coords`.
    pub fn point_index(&self, coords: &[u8]) -> Option<usize> {
        if coords.len() != self.n {
            return None;
        }
        let lead = coords.iter().position(|&c| c != 0)?;
        let inv = self.field.inv_code(coords[lead]);
        let v: Vec<u8> = coords.iter().map(|&c| self.field.mul_code(c, inv)).collect();
        self.points.binary_search(&v).ok()
    }

    /// Element of the i-th unit vector.
    pub fn unit(&self, i: usize) -> usize {
        let mut v = vec![0u8; self.n];
        v[i] = 1;
        self.point_index(&v).expect("unit vectors are points")
    }

    /// The line spanned by two distinct points.
    pub fn line_through(&self, a: usize, b: usize) -> Result<Flat> {
        self.matroid.closure(&ElemSet::singleton(a).with(b))
    }

    /// The flat spanned by a set of coordinate axes.
    pub fn coordinate_flat(&self, axes: &[usize]) -> Result<Flat> {
        let s: ElemSet = axes.iter().map(|&i| self.unit(i)).collect();
        self.matroid.closure(&s)
    }
}

/// M +_F e: a new element freely placed on the flat F.
pub fn principal_extension(m: &Matroid, flat: &ElemSet) -> Result<(Matroid, usize)> {
    m.principal_extension(flat)
}

/// k-fold truncation, each step a free extension on the whole ground set
/// followed by contraction of the new element.
pub fn truncate(m: &Matroid, k: usize) -> Result<Matroid> {
    if k > m.rank() {
        return Err(Error::RankOutOfRange {
            requested: k,
            rank: m.rank(),
        });
    }
    let mut cur = m.clone();
    for _ in 0..k {
        let (ext, e) = cur.principal_extension(&cur.ground())?;
        cur = ext.contract(&ElemSet::singleton(e))?;
    }
    Ok(cur)
}

/// A sequence of principal extensions of a projective geometry. Each step
/// names a flat of the matroid built so far, so later placements may use
/// elements added by earlier ones.
#[derive(Clone, Debug)]
pub struct ProjectionSpec {
    pub base: ProjectiveGeometry,
    pub steps: Vec<ElemSet>,
}

/// N, the added set C, and the projection N / C.
#[derive(Clone, Debug)]
pub struct Projection {
    pub extended: Matroid,
    pub added: ElemSet,
    pub result: Matroid,
}

impl ProjectionSpec {
    pub fn new(base: ProjectiveGeometry) -> Self {
        ProjectionSpec {
            base,
            steps: Vec::new(),
        }
    }

    pub fn step(mut self, flat: ElemSet) -> Self {
        self.steps.push(flat);
        self
    }

    pub fn k(&self) -> usize {
        self.steps.len()
    }
}

pub fn project(spec: &ProjectionSpec) -> Result<Projection> {
    let mut n = spec.base.matroid().clone();
    let mut added = ElemSet::new();
    for flat in &spec.steps {
        let (ext, e) = n.principal_extension(flat)?;
        n = ext;
        added.insert(e);
    }
    let result = n.contract(&added)?;
    Ok(Projection {
        extended: n,
        added,
        result,
    })
}

/// The unique minimal flat of the restriction `restriction` that spans `e`.
///
/// `restriction` must be spanning in M|(restriction ∪ e). Flats are scanned
/// bottom-up; at the first rank where some flat spans `e` exactly one must.
pub fn spanning_flat(m: &Matroid, restriction: &ElemSet, e: usize) -> Result<Flat> {
    m.check_subset(&restriction.with(e))?;
    if restriction.contains(e) {
        return Err(Error::PreconditionFailed(format!(
            "element {e} belongs to the restriction"
        )));
    }
    let local = m.restrict(&restriction.with(e))?;
    let single = ElemSet::singleton(e);
    if local.rk(single) == 0 {
        return Err(Error::PreconditionFailed(format!("element {e} is a loop")));
    }
    let r = local.delete(&single)?;
    if r.rank() < local.rank() {
        return Err(Error::NotSpanned(e));
    }
    for j in 1..=r.rank() {
        let spanning: Vec<Flat> = r
            .flats_of_rank(j)?
            .into_iter()
            .filter(|f| local.rk(f.members.with(e)) == f.rank)
            .collect();
        match spanning.len() {
            0 => continue,
            1 => return Ok(spanning[0]),
            _ => {
                return Err(Error::StructureViolation(format!(
                    "{} minimal flats of rank {j} span {e}: {} and {}",
                    spanning.len(),
                    spanning[0].members,
                    spanning[1].members
                )))
            }
        }
    }
    unreachable!("the restriction spans e")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pg(n: usize, q: u32) -> ProjectiveGeometry {
        ProjectiveGeometry::new(n, &FieldSpec::of_order(q).unwrap()).unwrap()
    }

    #[test]
    fn point_counts() {
        assert_eq!(pg(3, 2).matroid().len(), 7);
        assert_eq!(pg(4, 2).matroid().len(), 15);
        assert_eq!(pg(3, 4).matroid().len(), 21);
        let single = pg(1, 3);
        assert_eq!(single.matroid().len(), 1);
        assert_eq!(single.matroid().rank(), 1);
        assert!(matches!(
            ProjectiveGeometry::new(3, &FieldSpec::of_order(7).unwrap()),
            Err(Error::UnsupportedSize(_))
        ));
        assert!(matches!(
            ProjectiveGeometry::new(5, &FieldSpec::of_order(5).unwrap()),
            Err(Error::UnsupportedSize(_))
        ));
    }

    #[test]
    fn points_are_normalised_and_sorted() {
        let g = pg(3, 3);
        for (i, p) in g.points().iter().enumerate() {
            let lead = p.iter().position(|&c| c != 0).unwrap();
            assert_eq!(p[lead], 1);
            assert_eq!(g.point_index(p), Some(i));
            if i > 0 {
                assert!(g.points()[i - 1] < *p);
            }
        }
        // (2, 2, 0) normalises to (1, 1, 0)
        assert_eq!(g.point_index(&[2, 2, 0]), g.point_index(&[1, 1, 0]));
    }

    #[test]
    fn lines_have_q_plus_one_points() {
        for (n, q) in [(3, 2), (3, 3), (4, 2), (3, 4)] {
            let g = pg(n, q);
            for line in g.matroid().flats_of_rank(2).unwrap() {
                assert_eq!(line.members.len(), q as usize + 1);
            }
        }
        assert_eq!(pg(3, 2).matroid().flats_of_rank(2).unwrap().len(), 7);
    }

    #[test]
    fn truncation_examples() {
        let g = pg(4, 2);
        let t = truncate(g.matroid(), 1).unwrap();
        assert_eq!(t.rank(), 3);
        assert_eq!(t.epsilon(), 15);
        let g5 = pg(5, 2);
        let t2 = truncate(g5.matroid(), 2).unwrap();
        assert_eq!(t2.rank(), 3);
        assert_eq!(t2.epsilon(), 31);
        assert!(truncate(g.matroid(), 0).unwrap().same_oracle_as(g.matroid()));
        assert!(matches!(
            truncate(g.matroid(), 5),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn truncation_routes_agree() {
        let g = pg(3, 2);
        let via_extension = truncate(g.matroid(), 1).unwrap();
        let direct = g.matroid().truncation().unwrap();
        assert!(via_extension.same_oracle_as(&direct));
    }

    #[test]
    fn line_placement_in_pg32() {
        let g = pg(4, 2);
        let line = g.coordinate_flat(&[0, 1]).unwrap();
        let (m, e) = principal_extension(g.matroid(), &line.members).unwrap();
        assert_eq!(m.epsilon(), 16);
        assert_eq!(m.rank_of(&line.members.with(e)).unwrap(), 2);
        let me = m.contract(&ElemSet::singleton(e)).unwrap();
        assert_eq!(me.epsilon(), 13);
        assert_eq!(me.simplify().len(), 13);
    }

    #[test]
    fn projections() {
        let g = pg(4, 2);
        let p0 = project(&ProjectionSpec::new(g.clone())).unwrap();
        assert_eq!(p0.result.epsilon(), 15);
        let line = g.coordinate_flat(&[0, 1]).unwrap().members;
        let p1 = project(&ProjectionSpec::new(g.clone()).step(line)).unwrap();
        assert_eq!(p1.result.epsilon(), 13);
        let free = project(&ProjectionSpec::new(g.clone()).step(g.matroid().ground())).unwrap();
        assert_eq!(free.result.epsilon(), 15);
        assert_eq!(free.result.rank(), 3);
    }

    #[test]
    fn spanning_flats() {
        let g = pg(4, 2);
        let r = g.matroid().ground();
        let line = g.coordinate_flat(&[0, 1]).unwrap().members;
        let (m, e) = principal_extension(g.matroid(), &line).unwrap();
        assert_eq!(spanning_flat(&m, &r, e).unwrap().members, line);
        let (m, e) = principal_extension(g.matroid(), &ElemSet::singleton(4)).unwrap();
        assert_eq!(spanning_flat(&m, &r, e).unwrap().members, ElemSet::singleton(4));
        let (m, e) = principal_extension(g.matroid(), &r).unwrap();
        assert_eq!(spanning_flat(&m, &r, e).unwrap().members, r);
    }

    #[test]
    fn coloop_is_not_spanned() {
        let g = pg(3, 2);
        let fano = g.matroid();
        let plane = fano.ground();
        let sum = fano.direct_sum(&pg(1, 2).matroid().clone()).unwrap();
        assert_eq!(spanning_flat(&sum, &plane, 7).unwrap_err(), Error::NotSpanned(7));
    }
}
