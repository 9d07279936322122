//! Augmented simplicial chain complex over sorted-face bases.

use super::FieldSpec;
use crate::bitset::VertexSet;
use crate::complexes::FaceCensus;

/// Column-major sparse matrix. Coefficients are stored reduced into the
/// field: residues in `0..p` for `GF(p)`, integers for `Q`. No explicit
/// zeros; rows within each column are strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    /// Builds from raw columns, sorting each and dropping zeros.
    ///
    /// Panics if a row index is out of range.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        let columns: Vec<Vec<(usize, i64)>> = columns
            .into_iter()
            .map(|mut c| {
                c.retain(|&(_, v)| v != 0);
                c.sort_unstable();
                assert!(c.iter().all(|&(r, _)| r < rows), "row index out of range");
                c
            })
            .collect();
        SparseMatrix { rows, cols: columns.len(), columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(usize, i64)] {
        &self.columns[c]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    /// Dense row-major copy, for small matrices and tests.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                d[r][c] = v;
            }
        }
        d
    }

    /// Whether `self * rhs` vanishes over `field`.
    pub fn product_is_zero(&self, rhs: &SparseMatrix, field: FieldSpec) -> bool {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut acc = vec![0i128; self.rows];
        for col in &rhs.columns {
            acc.iter_mut().for_each(|x| *x = 0);
            for &(k, b) in col {
                for &(r, a) in &self.columns[k] {
                    acc[r] += a as i128 * b as i128;
                }
            }
            let nonzero = match field {
                FieldSpec::Prime(p) => acc.iter().any(|&x| x.rem_euclid(p as i128) != 0),
                FieldSpec::Rational => acc.iter().any(|&x| x != 0),
            };
            if nonzero {
                return false;
            }
        }
        true
    }
}

/// `∂` from faces of size `s` to faces of size `s - 1`. Both levels must be
/// sorted by [`VertexSet::cmp_lex`]; the sign of `f ∖ {v}` is `(-1)^k` where
/// `k` is the position of `v` in `f`.
pub(crate) fn boundary_level(lower: &[VertexSet], upper: &[VertexSet], field: FieldSpec) -> SparseMatrix {
    let columns = upper
        .iter()
        .map(|&f| {
            let mut col: Vec<(usize, i64)> = f
                .iter()
                .enumerate()
                .map(|(k, v)| {
                    let row = lower
                        .binary_search_by(|x| x.cmp_lex(f.without(v)))
                        .expect("faces are closed under removal");
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    (row, field.reduce(sign))
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    SparseMatrix { rows: lower.len(), cols: upper.len(), columns }
}

/// `[∂_0, ∂_1, ...]` with `∂_i` mapping `(i)`-faces to `(i-1)`-faces.
pub(crate) fn boundaries(census: &FaceCensus, field: FieldSpec) -> Vec<SparseMatrix> {
    census
        .by_size
        .windows(2)
        .map(|w| boundary_level(&w[0], &w[1], field))
        .collect()
}
