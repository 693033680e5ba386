//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.
//!
//! Elimination runs in `i64` with checked arithmetic and restarts in
//! `BigInt` on overflow. Every intermediate entry is a minor of the input,
//! so the divisions are exact.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let rows: Vec<Vec<i64>> = self.data.chunks(self.cols).map(<[i64]>::to_vec).collect();
        match bareiss_i64(rows) {
            Some(r) => r,
            None => {
                let rows = self
                    .data
                    .chunks(self.cols)
                    .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                    .collect();
                bareiss_big(rows)
            }
        }
    }
}

/// Picks the remaining row whose entry in `col` has the smallest nonzero
/// magnitude; small pivots keep entries small.
fn pivot_row<T>(m: &[Vec<T>], from: usize, col: usize, abs_key: impl Fn(&T) -> Option<u128>) -> Option<usize> {
    (from..m.len())
        .filter_map(|r| abs_key(&m[r][col]).map(|k| (k, r)))
        .min()
        .map(|(_, r)| r)
}

fn bareiss_i64(mut m: Vec<Vec<i64>>) -> Option<usize> {
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev: i64 = 1;
    for col in 0..cols {
        if rank == m.len() {
            break;
        }
        let Some(p) = pivot_row(&m, rank, col, |&x| (x != 0).then(|| x.unsigned_abs() as u128)) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col];
        let (top, bottom) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom.iter_mut() {
            let lead = row[col];
            for c in col + 1..cols {
                let v = row[c]
                    .checked_mul(pivot)?
                    .checked_sub(lead.checked_mul(prow[c])?)?;
                row[c] = v / prev;
            }
            row[col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        if rank == m.len() {
            break;
        }
        let key = |x: &BigInt| {
            (!x.is_zero()).then(|| {
                let bits = x.abs().bits();
                u128::from(bits)
            })
        };
        let Some(p) = pivot_row(&m, rank, col, key) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        let (top, bottom) = m.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom.iter_mut() {
            let lead = row[col].clone();
            for c in col + 1..cols {
                let v = &row[c] * &pivot - &lead * &prow[c];
                row[c] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
