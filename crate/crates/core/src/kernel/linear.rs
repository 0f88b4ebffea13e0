//! Column rank over GF(q) by incremental Gaussian elimination.

use crate::field::FieldSpec;

/// Row bound for representing matrices.
pub const MAX_ROWS: usize = 16;

pub type Column = [u8; MAX_ROWS];

#[derive(Clone)]
pub(crate) struct LinearRep {
    pub field: FieldSpec,
    pub rows: usize,
    /// Indexed by element identifier; `None` for identifiers outside the
    /// ground set.
    pub columns: Vec<Option<Column>>,
    /// GF(2) columns packed as bit masks (row i is bit i).
    packed: Option<Vec<u32>>,
}

impl LinearRep {
    pub fn new(field: FieldSpec, rows: usize, columns: Vec<Option<Column>>) -> Self {
        assert!(rows <= MAX_ROWS);
        let packed = (field.q() == 2).then(|| {
            columns
                .iter()
                .map(|c| match c {
                    Some(col) => col[..rows]
                        .iter()
                        .enumerate()
                        .fold(0u32, |acc, (i, &v)| acc | ((v as u32 & 1) << i)),
                    None => 0,
                })
                .collect()
        });
        LinearRep {
            field,
            rows,
            columns,
            packed,
        }
    }

    pub fn rank<I: Iterator<Item = usize>>(&self, cols: I) -> usize {
        match &self.packed {
            Some(packed) => rank_gf2(cols.map(|c| packed[c]), self.rows),
            None => self.rank_general(cols),
        }
    }

    fn rank_general<I: Iterator<Item = usize>>(&self, cols: I) -> usize {
        let f = &self.field;
        let n = self.rows;
        // Echelon basis: each vector normalised to 1 at its pivot row.
        let mut basis: [Column; MAX_ROWS] = [[0; MAX_ROWS]; MAX_ROWS];
        let mut pivots = [0usize; MAX_ROWS];
        let mut len = 0;
        for c in cols {
            let mut v = self.columns[c].expect("column outside ground set");
            for b in 0..len {
                let coef = v[pivots[b]];
                if coef != 0 {
                    let row = &basis[b];
                    for i in 0..n {
                        if row[i] != 0 {
                            v[i] = f.sub_code(v[i], f.mul_code(coef, row[i]));
                        }
                    }
                }
            }
            if let Some(p) = (0..n).find(|&i| v[i] != 0) {
                let inv = f.inv_code(v[p]);
                for x in v.iter_mut().take(n) {
                    *x = f.mul_code(*x, inv);
                }
                basis[len] = v;
                pivots[len] = p;
                len += 1;
                if len == n {
                    break;
                }
            }
        }
        len
    }
}

fn rank_gf2<I: Iterator<Item = u32>>(cols: I, rows: usize) -> usize {
    // basis[i] has lowest set bit i.
    let mut basis = [0u32; 32];
    let mut len = 0;
    for mut v in cols {
        while v != 0 {
            let low = v.trailing_zeros() as usize;
            if basis[low] == 0 {
                basis[low] = v;
                len += 1;
                break;
            }
            v ^= basis[low];
        }
        if len == rows {
            break;
        }
    }
    len
}
