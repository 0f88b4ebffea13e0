//! Rank-oracle matroids.
//!
//! A [`Matroid`] is an immutable handle onto a construction tree: a matrix
//! over GF(q) at the leaves, wrapped by deletions, contractions, principal
//! extensions and truncations. Ranks are answered by walking the tree.

mod axioms;
mod connectivity;
mod flats;
pub(crate) mod linear;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::bitset::{ElemSet, CAPACITY};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

pub use flats::{flat_cap, set_flat_cap, Flat, DEFAULT_FLAT_CAP};
pub use linear::MAX_ROWS;

use linear::{Column, LinearRep};

/// Ground sets up to this size memoise every rank query.
pub const MEMO_LIMIT: usize = 24;

pub type RankFn = Arc<dyn Fn(&ElemSet) -> usize + Send + Sync>;

#[derive(Clone)]
pub struct Matroid {
    node: Arc<Node>,
}

struct Node {
    ground: ElemSet,
    rank: usize,
    field: Option<FieldSpec>,
    kind: Kind,
    memo: Option<Mutex<HashMap<ElemSet, usize>>>,
    flat_cache: Mutex<flats::FlatCache>,
}

enum Kind {
    Linear(LinearRep),
    Deletion {
        parent: Matroid,
    },
    Contraction {
        parent: Matroid,
        contracted: ElemSet,
        contracted_rank: usize,
    },
    Extension {
        parent: Matroid,
        flat: ElemSet,
        element: usize,
    },
    Truncation {
        parent: Matroid,
    },
    Oracle(RankFn),
}

impl Matroid {
    fn from_node(ground: ElemSet, field: Option<FieldSpec>, kind: Kind) -> Matroid {
        let memo = (ground.len() <= MEMO_LIMIT).then(|| Mutex::new(HashMap::new()));
        let rank = match kind {
            // declared by the caller
            Kind::Oracle(_) => 0,
            _ => rank_in(&kind, ground),
        };
        Matroid {
            node: Arc::new(Node {
                ground,
                rank,
                field,
                kind,
                memo,
                flat_cache: Mutex::new(flats::FlatCache::default()),
            }),
        }
    }

    /// A matroid represented by the columns of a matrix. `columns[i]` is the
    /// column of element `i`; every column has length `rows`.
    pub fn from_columns(field: &FieldSpec, rows: usize, columns: &[Vec<FieldElement>]) -> Result<Matroid> {
        let mut codes = Vec::with_capacity(columns.len());
        for col in columns {
            if col.len() != rows {
                return Err(Error::UnsupportedSize(format!(
                    "column of length {} in a matrix with {rows} rows",
                    col.len()
                )));
            }
            let mut c = Vec::with_capacity(rows);
            for x in col {
                if x.field() != field {
                    return Err(Error::FieldMismatch);
                }
                c.push(x.code());
            }
            codes.push(c);
        }
        Self::from_column_codes(field, rows, &codes)
    }

    /// Row-major matrix constructor.
    pub fn from_matrix(field: &FieldSpec, matrix: &[Vec<FieldElement>]) -> Result<Matroid> {
        let rows = matrix.len();
        let cols = matrix.first().map_or(0, |r| r.len());
        if matrix.iter().any(|r| r.len() != cols) {
            return Err(Error::UnsupportedSize("ragged matrix".into()));
        }
        let columns: Vec<Vec<FieldElement>> = (0..cols)
            .map(|j| matrix.iter().map(|row| row[j].clone()).collect())
            .collect();
        Self::from_columns(field, rows, &columns)
    }

    pub(crate) fn from_column_codes(field: &FieldSpec, rows: usize, columns: &[Vec<u8>]) -> Result<Matroid> {
        if rows > MAX_ROWS {
            return Err(Error::UnsupportedSize(format!(
                "{rows} rows exceeds the {MAX_ROWS}-row limit"
            )));
        }
        if columns.len() > CAPACITY {
            return Err(Error::UnsupportedSize(format!(
                "{} elements exceeds the {CAPACITY}-element limit",
                columns.len()
            )));
        }
        let mut cols = Vec::with_capacity(columns.len());
        for c in columns {
            if c.len() != rows || c.iter().any(|&x| x as u32 >= field.q()) {
                return Err(Error::UnsupportedSize("malformed column".into()));
            }
            let mut col: Column = [0; MAX_ROWS];
            col[..rows].copy_from_slice(c);
            cols.push(Some(col));
        }
        let rep = LinearRep::new(field.clone(), rows, cols);
        Ok(Self::from_node(
            ElemSet::range(columns.len()),
            Some(field.clone()),
            Kind::Linear(rep),
        ))
    }

    /// An arbitrary rank function on `{0, ..., n-1}` with declared rank.
    /// Nothing is checked; [`Matroid::axiom_check`] exists for that.
    pub fn from_rank_fn(n: usize, rank: usize, f: RankFn) -> Result<Matroid> {
        if n > CAPACITY {
            return Err(Error::UnsupportedSize(format!("{n} elements")));
        }
        let mut m = Self::from_node(ElemSet::range(n), None, Kind::Oracle(f));
        Arc::get_mut(&mut m.node).expect("fresh node").rank = rank;
        Ok(m)
    }

    /// Direct sum of two matrix-backed matroids over the same field. Elements
    /// of `other` are renumbered after those of `self`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let (Kind::Linear(a), Kind::Linear(b)) = (&self.node.kind, &other.node.kind) else {
            return Err(Error::UnsupportedSize(
                "direct sums need matrix-backed operands".into(),
            ));
        };
        if a.field != b.field {
            return Err(Error::FieldMismatch);
        }
        let rows = a.rows + b.rows;
        let mut cols = Vec::new();
        for e in self.ground().iter() {
            let c = a.columns[e].unwrap();
            let mut v = c[..a.rows].to_vec();
            v.resize(rows, 0);
            cols.push(v);
        }
        for e in other.ground().iter() {
            let c = b.columns[e].unwrap();
            let mut v = vec![0; a.rows];
            v.extend_from_slice(&c[..b.rows]);
            cols.push(v);
        }
        Self::from_column_codes(&a.field, rows, &cols)
    }

    pub fn ground(&self) -> ElemSet {
        self.node.ground
    }

    /// |E(M)|.
    pub fn len(&self) -> usize {
        self.node.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.node.ground.is_empty()
    }

    /// r(M).
    pub fn rank(&self) -> usize {
        self.node.rank
    }

    /// The field of the underlying representation, when there is one.
    pub fn field(&self) -> Option<&FieldSpec> {
        self.node.field.as_ref()
    }

    pub fn check_subset(&self, x: &ElemSet) -> Result<()> {
        match (*x - self.node.ground).first() {
            Some(e) => Err(Error::UnknownElement(e)),
            None => Ok(()),
        }
    }

    /// r_M(X).
    pub fn rank_of(&self, x: &ElemSet) -> Result<usize> {
        self.check_subset(x)?;
        Ok(self.rk(*x))
    }

    /// Rank without the membership check.
    #[inline]
    pub(crate) fn rk(&self, x: ElemSet) -> usize {
        debug_assert!(x.is_subset(&self.node.ground), "{x} not in {}", self.node.ground);
        if let Some(memo) = &self.node.memo {
            if let Some(&r) = memo.lock().unwrap().get(&x) {
                return r;
            }
            let r = self.compute_rank(x);
            memo.lock().unwrap().insert(x, r);
            r
        } else {
            self.compute_rank(x)
        }
    }

    fn compute_rank(&self, x: ElemSet) -> usize {
        rank_in(&self.node.kind, x)
    }

    /// M \ D.
    pub fn delete(&self, d: &ElemSet) -> Result<Matroid> {
        self.check_subset(d)?;
        if d.is_empty() {
            return Ok(self.clone());
        }
        let ground = self.ground() - *d;
        // collapse stacked deletions
        let parent = match &self.node.kind {
            Kind::Deletion { parent } => parent.clone(),
            _ => self.clone(),
        };
        Ok(Self::from_node(
            ground,
            self.node.field.clone(),
            Kind::Deletion { parent },
        ))
    }

    /// M | X.
    pub fn restrict(&self, x: &ElemSet) -> Result<Matroid> {
        self.check_subset(x)?;
        self.delete(&(self.ground() - *x))
    }

    /// M / C.
    pub fn contract(&self, c: &ElemSet) -> Result<Matroid> {
        self.check_subset(c)?;
        if c.is_empty() {
            return Ok(self.clone());
        }
        let ground = self.ground() - *c;
        let (parent, contracted) = match &self.node.kind {
            Kind::Contraction {
                parent, contracted, ..
            } => (parent.clone(), *contracted | *c),
            _ => (self.clone(), *c),
        };
        let contracted_rank = parent.rk(contracted);
        Ok(Self::from_node(
            ground,
            self.node.field.clone(),
            Kind::Contraction {
                parent,
                contracted,
                contracted_rank,
            },
        ))
    }

    /// Adds a new element freely placed on the flat `flat`. The new element
    /// takes the smallest identifier absent from the ground set.
    pub fn principal_extension(&self, flat: &ElemSet) -> Result<(Matroid, usize)> {
        self.check_subset(flat)?;
        if !self.is_flat(flat) {
            return Err(Error::NotAFlat(*flat));
        }
        let element = self.ground().first_absent();
        if element >= CAPACITY {
            return Err(Error::UnsupportedSize(format!(
                "no identifier below {CAPACITY} is free"
            )));
        }
        let m = Self::from_node(
            self.ground().with(element),
            self.node.field.clone(),
            Kind::Extension {
                parent: self.clone(),
                flat: *flat,
                element,
            },
        );
        Ok((m, element))
    }

    /// The truncation oracle r'(X) = min(r(X), r(M) - 1).
    pub fn truncation(&self) -> Result<Matroid> {
        if self.rank() == 0 {
            return Err(Error::RankOutOfRange {
                requested: 1,
                rank: 0,
            });
        }
        Ok(Self::from_node(
            self.ground(),
            self.node.field.clone(),
            Kind::Truncation {
                parent: self.clone(),
            },
        ))
    }

    /// Greedy basis of X, scanning in identifier order.
    pub(crate) fn basis_of(&self, x: ElemSet) -> ElemSet {
        let mut b = ElemSet::new();
        let mut r = 0;
        for e in x.iter() {
            let nb = b.with(e);
            let nr = self.rk(nb);
            if nr > r {
                b = nb;
                r = nr;
            }
        }
        b
    }

    /// Same rank function on the same ground set, compared exhaustively.
    pub fn same_oracle_as(&self, other: &Matroid) -> bool {
        if self.ground() != other.ground() || self.len() > 16 {
            return false;
        }
        let elems = self.ground().to_vec();
        (0u32..1 << elems.len()).all(|mask| {
            let x: ElemSet = elems
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            self.rk(x) == other.rk(x)
        })
    }
}

fn rank_in(kind: &Kind, x: ElemSet) -> usize {
    match kind {
        Kind::Linear(rep) => rep.rank(x.iter()),
        Kind::Deletion { parent } => parent.rk(x),
        Kind::Contraction {
            parent,
            contracted,
            contracted_rank,
        } => parent.rk(x | *contracted) - contracted_rank,
        Kind::Extension {
            parent,
            flat,
            element,
        } => {
            if !x.contains(*element) {
                parent.rk(x)
            } else {
                let rest = x.without(*element);
                let base = parent.rk(rest);
                if flat.is_subset(&rest) {
                    base
                } else {
                    (base + 1).min(parent.rk(rest | *flat))
                }
            }
        }
        Kind::Truncation { parent } => parent.rk(x).min(parent.rank() - 1),
        Kind::Oracle(f) => f(&x),
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.node.kind {
            Kind::Linear(_) => "linear",
            Kind::Deletion { .. } => "deletion",
            Kind::Contraction { .. } => "contraction",
            Kind::Extension { .. } => "extension",
            Kind::Truncation { .. } => "truncation",
            Kind::Oracle(_) => "oracle",
        };
        write!(
            f,
            "Matroid({kind}, |E|={}, r={})",
            self.len(),
            self.rank()
        )
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn gf(q: u32) -> FieldSpec {
        FieldSpec::of_order(q).unwrap()
    }

    /// Fano plane from the seven nonzero vectors of GF(2)^3.
    pub(crate) fn fano() -> Matroid {
        let cols: Vec<Vec<u8>> = (1u8..8).map(|v| vec![v & 1, v >> 1 & 1, v >> 2 & 1]).collect();
        Matroid::from_column_codes(&gf(2), 3, &cols).unwrap()
    }

    #[test]
    fn fano_ranks() {
        let m = fano();
        assert_eq!(m.rank(), 3);
        // vectors 1,2,3 (= e1, e2, e1+e2) form a line
        let line: ElemSet = [0, 1, 2].iter().collect();
        assert_eq!(m.rank_of(&line).unwrap(), 2);
        assert_eq!(m.rank_of(&m.ground()).unwrap(), 3);
        assert_eq!(m.rank_of(&ElemSet::singleton(9)), Err(Error::UnknownElement(9)));
    }

    #[test]
    fn minors_commute() {
        let m = fano();
        let x = ElemSet::singleton(2);
        let y = ElemSet::singleton(5);
        let a = m.contract(&x).unwrap().delete(&y).unwrap();
        let b = m.delete(&y).unwrap().contract(&x).unwrap();
        assert!(a.same_oracle_as(&b));
        assert!(m.delete(&ElemSet::new()).unwrap().same_oracle_as(&m));
    }

    #[test]
    fn contraction_rank_drop() {
        let m = fano();
        for e in 0..7 {
            let c = m.contract(&ElemSet::singleton(e)).unwrap();
            assert_eq!(c.rank(), 2);
        }
    }

    #[test]
    fn extension_on_line() {
        let m = fano();
        let line: ElemSet = [0, 1, 2].iter().collect();
        let (ext, e) = m.principal_extension(&line).unwrap();
        assert_eq!(e, 7);
        assert_eq!(ext.rank_of(&line.with(e)).unwrap(), 2);
        assert_eq!(ext.rank_of(&ElemSet::singleton(e)).unwrap(), 1);
        assert!(ext.delete(&ElemSet::singleton(e)).unwrap().same_oracle_as(&m));
        let not_flat: ElemSet = [0, 1].iter().collect();
        assert_eq!(m.principal_extension(&not_flat).unwrap_err(), Error::NotAFlat(not_flat));
    }

    #[test]
    fn general_field_rank() {
        // GF(3): columns (1,0), (0,1), (1,1), (1,2) form U_{2,4}
        let f = gf(3);
        let cols = vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]];
        let m = Matroid::from_column_codes(&f, 2, &cols).unwrap();
        assert_eq!(m.rank(), 2);
        for a in 0..4 {
            for b in a + 1..4 {
                assert_eq!(m.rk([a, b].iter().collect()), 2);
            }
        }
    }

    #[test]
    fn direct_sum_ranks() {
        let m = fano().direct_sum(&fano()).unwrap();
        assert_eq!(m.len(), 14);
        assert_eq!(m.rank(), 6);
    }
}
