//! Matrix rank over `GF(p)` and over `Q`.
//!
//! Small matrices are reduced densely, column by column against a table of
//! pivots keyed by their first nonzero row. Above [`DENSE_ENTRY_LIMIT`]
//! entries a sparse elimination with Markowitz pivot choice is used. Rational
//! rank is computed fraction-free on integer vectors: a row is combined as
//! `p * row - t * pivot` and divided by the gcd of its entries, with checked
//! arithmetic so that an overflow aborts instead of producing a wrong rank.

use std::collections::BTreeSet;

use num_integer::Integer;

use super::chain::SparseMatrix;
use super::FieldSpec;
use crate::error::{Error, Result};

/// Dense elimination is used when `rows * cols` is at most this.
pub const DENSE_ENTRY_LIMIT: usize = 1 << 20;

pub fn rank(m: &SparseMatrix, field: FieldSpec) -> Result<usize> {
    if m.rows() == 0 || m.cols() == 0 {
        return Ok(0);
    }
    let dense = m.rows().saturating_mul(m.cols()) <= DENSE_ENTRY_LIMIT;
    match field {
        FieldSpec::Prime(2) if dense => Ok(rank_gf2_dense(m)),
        FieldSpec::Prime(p) if dense => rank_dense(m, &ModP::new(p)),
        FieldSpec::Prime(p) => rank_sparse(m, &ModP::new(p)),
        FieldSpec::Rational if dense => rank_dense(m, &FractionFree),
        FieldSpec::Rational => rank_sparse(m, &FractionFree),
    }
}

/// Force the sparse Markowitz path regardless of size.
pub fn rank_sparse_path(m: &SparseMatrix, field: FieldSpec) -> Result<usize> {
    match field {
        FieldSpec::Prime(p) => rank_sparse(m, &ModP::new(p)),
        FieldSpec::Rational => rank_sparse(m, &FractionFree),
    }
}

fn rank_gf2_dense(m: &SparseMatrix) -> usize {
    let words = m.rows().div_ceil(64);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; m.rows()];
    let mut rank = 0;
    for c in 0..m.cols() {
        let mut col = vec![0u64; words];
        for &(r, v) in m.column(c) {
            if v.rem_euclid(2) == 1 {
                col[r / 64] ^= 1 << (r % 64);
            }
        }
        while let Some(lead) = first_bit(&col) {
            match &pivots[lead] {
                Some(p) => {
                    for (a, b) in col.iter_mut().zip(p) {
                        *a ^= b;
                    }
                }
                None => {
                    pivots[lead] = Some(col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn first_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

/// Coefficient arithmetic used by the generic eliminators.
trait Arith {
    type E: Copy + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::E;
    fn lift(&self, v: i64) -> Self::E;
    /// `(a, b)` with `a * t + b * p = 0`, `a` nonzero.
    fn cancel(&self, t: Self::E, p: Self::E) -> (Self::E, Self::E);
    /// `a * x + b * y`.
    fn lin(&self, a: Self::E, x: Self::E, b: Self::E, y: Self::E) -> Result<Self::E>;
    /// Optional rescaling of a freshly combined vector.
    fn tidy(&self, _v: &mut [Self::E]) {}
    fn tidy_sparse(&self, _v: &mut [(usize, Self::E)]) {}
}

struct ModP {
    p: u64,
}

impl ModP {
    fn new(p: u32) -> Self {
        ModP { p: p as u64 }
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (a % self.p, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl Arith for ModP {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn lift(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn cancel(&self, t: u64, p: u64) -> (u64, u64) {
        let f = t * self.inv(p) % self.p;
        (1, (self.p - f) % self.p)
    }
    fn lin(&self, a: u64, x: u64, b: u64, y: u64) -> Result<u64> {
        Ok((a * x % self.p + b * y % self.p) % self.p)
    }
}

struct FractionFree;

impl Arith for FractionFree {
    type E = i64;
    fn zero(&self) -> i64 {
        0
    }
    fn lift(&self, v: i64) -> i64 {
        v
    }
    fn cancel(&self, t: i64, p: i64) -> (i64, i64) {
        (p, -t)
    }
    fn lin(&self, a: i64, x: i64, b: i64, y: i64) -> Result<i64> {
        a.checked_mul(x)
            .and_then(|ax| b.checked_mul(y).and_then(|by| ax.checked_add(by)))
            .ok_or(Error::ArithmeticOverflow)
    }
    fn tidy(&self, v: &mut [i64]) {
        let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g > 1 {
            v.iter_mut().for_each(|x| *x /= g);
        }
    }
    fn tidy_sparse(&self, v: &mut [(usize, i64)]) {
        let g = v.iter().fold(0i64, |g, &(_, x)| g.gcd(&x));
        if g > 1 {
            v.iter_mut().for_each(|(_, x)| *x /= g);
        }
    }
}

fn rank_dense<A: Arith>(m: &SparseMatrix, ar: &A) -> Result<usize> {
    let zero = ar.zero();
    let mut pivots: Vec<Option<Vec<A::E>>> = vec![None; m.rows()];
    let mut rank = 0;
    for c in 0..m.cols() {
        let mut col = vec![zero; m.rows()];
        for &(r, v) in m.column(c) {
            col[r] = ar.lift(v);
        }
        while let Some(lead) = col.iter().position(|&x| x != zero) {
            match &pivots[lead] {
                Some(p) => {
                    let (a, b) = ar.cancel(col[lead], p[lead]);
                    for i in lead..col.len() {
                        col[i] = ar.lin(a, col[i], b, p[i])?;
                    }
                    ar.tidy(&mut col);
                }
                None => {
                    pivots[lead] = Some(col);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Ok(rank)
}

/// Sparse Gaussian elimination. Each step takes the shortest remaining
/// vector and, inside it, the entry whose index is shared by the fewest other
/// vectors, which keeps the Markowitz cost `(r - 1)(c - 1)` small.
fn rank_sparse<A: Arith>(m: &SparseMatrix, ar: &A) -> Result<usize> {
    let zero = ar.zero();
    // vectors are the matrix columns; "slots" are row indices
    let mut vecs: Vec<Vec<(usize, A::E)>> = (0..m.cols())
        .map(|c| {
            m.column(c)
                .iter()
                .map(|&(r, v)| (r, ar.lift(v)))
                .filter(|&(_, v)| v != zero)
                .collect()
        })
        .collect();
    let mut slot_vecs: Vec<Vec<usize>> = vec![Vec::new(); m.rows()];
    let mut slot_count: Vec<usize> = vec![0; m.rows()];
    let mut by_len: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, v) in vecs.iter().enumerate() {
        for &(r, _) in v {
            slot_vecs[r].push(i);
            slot_count[r] += 1;
        }
        if !v.is_empty() {
            by_len.insert((v.len(), i));
        }
    }

    let mut rank = 0;
    while let Some((_, pi)) = by_len.pop_first() {
        let pivot = std::mem::take(&mut vecs[pi]);
        let &(slot, pval) = pivot
            .iter()
            .min_by_key(|&&(r, _)| (slot_count[r], r))
            .expect("queued vectors are nonempty");
        for &(r, _) in &pivot {
            slot_count[r] -= 1;
        }
        rank += 1;

        let mut holders = std::mem::take(&mut slot_vecs[slot]);
        holders.sort_unstable();
        holders.dedup();
        for ti in holders {
            if ti == pi {
                continue;
            }
            let Some(tval) = lookup(&vecs[ti], slot) else {
                continue;
            };
            let old = std::mem::take(&mut vecs[ti]);
            by_len.remove(&(old.len(), ti));
            let (a, b) = ar.cancel(tval, pval);
            let mut new = merge(ar, a, &old, b, &pivot)?;
            ar.tidy_sparse(&mut new);
            for &(r, _) in &old {
                slot_count[r] -= 1;
            }
            for &(r, _) in &new {
                slot_count[r] += 1;
                if lookup(&old, r).is_none() {
                    slot_vecs[r].push(ti);
                }
            }
            if !new.is_empty() {
                by_len.insert((new.len(), ti));
            }
            vecs[ti] = new;
        }
    }
    Ok(rank)
}

fn lookup<E: Copy>(v: &[(usize, E)], slot: usize) -> Option<E> {
    v.binary_search_by_key(&slot, |e| e.0).ok().map(|i| v[i].1)
}

/// `a * x + b * y` on sorted sparse vectors, dropping zeros.
fn merge<A: Arith>(ar: &A, a: A::E, x: &[(usize, A::E)], b: A::E, y: &[(usize, A::E)]) -> Result<Vec<(usize, A::E)>> {
    let zero = ar.zero();
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (slot, v) = if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            i += 1;
            (x[i - 1].0, ar.lin(a, x[i - 1].1, b, zero)?)
        } else if i == x.len() || y[j].0 < x[i].0 {
            j += 1;
            (y[j - 1].0, ar.lin(a, zero, b, y[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, ar.lin(a, x[i - 1].1, b, y[j - 1].1)?)
        };
        if v != zero {
            out.push((slot, v));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rank over the reals by partial-pivoting elimination in f64; reliable
    /// for the small integer matrices used here.
    #[allow(clippy::needless_range_loop)]
    fn float_rank(m: &SparseMatrix) -> usize {
        let mut a: Vec<Vec<f64>> = m.to_dense().into_iter().map(|r| r.into_iter().map(|v| v as f64).collect()).collect();
        let (rows, cols) = (m.rows(), m.cols());
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())) else {
                break;
            };
            if a[p][c].abs() < 1e-9 {
                continue;
            }
            a.swap(rank, p);
            for r in 0..rows {
                if r != rank {
                    let f = a[r][c] / a[rank][c];
                    for k in c..cols {
                        a[r][k] -= f * a[rank][k];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn pseudo_random(rows: usize, cols: usize, seed: u64, range: i64) -> SparseMatrix {
        let mut s = seed;
        let mut cols_v = Vec::new();
        for _ in 0..cols {
            let mut col = Vec::new();
            for r in 0..rows {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let x = (s >> 33) as i64 % (2 * range + 4) - range - 2;
                if x.abs() <= range && x != 0 {
                    col.push((r, x));
                }
            }
            cols_v.push(col);
        }
        SparseMatrix::from_columns(rows, cols_v)
    }

    #[test]
    fn rational_dense_and_sparse_agree_with_float_oracle() {
        for seed in 0..40 {
            let m = pseudo_random(7, 9, seed, 2);
            let expect = float_rank(&m);
            assert_eq!(rank(&m, FieldSpec::Rational).unwrap(), expect, "seed {seed}");
            assert_eq!(rank_sparse_path(&m, FieldSpec::Rational).unwrap(), expect, "seed {seed}");
        }
    }

    #[test]
    fn prime_paths_agree() {
        for seed in 0..40 {
            let m = pseudo_random(8, 6, seed, 3);
            for p in [2u32, 3, 5, 7] {
                let f = FieldSpec::Prime(p);
                assert_eq!(rank(&m, f).unwrap(), rank_sparse_path(&m, f).unwrap(), "seed {seed} p {p}");
            }
        }
    }

    #[test]
    fn field_dependence_is_visible() {
        // [[1, 1], [1, -1]] has determinant -2
        let m = SparseMatrix::from_columns(2, vec![vec![(0, 1), (1, 1)], vec![(0, 1), (1, -1)]]);
        assert_eq!(rank(&m, FieldSpec::Prime(2)).unwrap(), 1);
        assert_eq!(rank(&m, FieldSpec::Prime(3)).unwrap(), 2);
        assert_eq!(rank(&m, FieldSpec::Rational).unwrap(), 2);
    }
}
