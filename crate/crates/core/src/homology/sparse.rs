//! Invariant factors of large sparse integer matrices.
//!
//! Unit pivots are eliminated sparsely (Markowitz-style choice to limit
//! fill-in); whatever is left without a unit entry is handed to the dense
//! Smith normal form.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::snf::invariant_factors;

#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    rows: Vec<BTreeMap<usize, BigInt>>,
    cols: usize,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows: vec![BTreeMap::new(); rows],
            cols,
        }
    }

    pub fn from_dense(m: &IntMatrix) -> Self {
        let mut s = SparseMatrix::new(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if !m.get(i, j).is_zero() {
                    s.rows[i].insert(j, m.get(i, j).clone());
                }
            }
        }
        s
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn add(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        let v = v.into();
        if v.is_zero() {
            return;
        }
        let e = self.rows[i].entry(j).or_default();
        *e += v;
        if e.is_zero() {
            self.rows[i].remove(&j);
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows.len(), self.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for (&j, v) in r {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// True if `self * other == 0`.
    pub fn product_is_zero(&self, other: &SparseMatrix) -> bool {
        assert_eq!(self.cols, other.rows.len(), "product shape mismatch");
        self.rows.iter().all(|r| {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (&k, a) in r {
                for (&j, b) in &other.rows[k] {
                    *acc.entry(j).or_default() += a * b;
                }
            }
            acc.values().all(Zero::is_zero)
        })
    }

    /// Nonzero Smith invariants (the rank is their count).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let mut rows = self.rows.clone();
        let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.cols];
        for (i, r) in rows.iter().enumerate() {
            for &j in r.keys() {
                col_rows[j].insert(i);
            }
        }
        let mut alive_rows: BTreeSet<usize> = (0..rows.len()).filter(|&i| !rows[i].is_empty()).collect();
        let mut units = 0usize;

        loop {
            // Pick the unit entry with the smallest Markowitz cost.
            let mut best: Option<(usize, usize, usize)> = None;
            for &i in &alive_rows {
                let rl = rows[i].len();
                for (&j, v) in &rows[i] {
                    if v.abs().is_one() {
                        let cost = (rl - 1) * (col_rows[j].len() - 1);
                        if best.is_none_or(|b| cost < b.2) {
                            best = Some((i, j, cost));
                            if cost == 0 {
                                break;
                            }
                        }
                    }
                }
                if best.is_some_and(|b| b.2 == 0) {
                    break;
                }
            }
            let Some((pi, pj, _)) = best else { break };
            units += 1;
            let pivot_row = std::mem::take(&mut rows[pi]);
            alive_rows.remove(&pi);
            for &j in pivot_row.keys() {
                col_rows[j].remove(&pi);
            }
            let p = pivot_row[&pj].clone();
            let others: Vec<usize> = col_rows[pj].iter().copied().collect();
            for i in others {
                // row_i -= (row_i[pj] / p) * pivot_row, p = +-1
                let f = &rows[i][&pj] * &p;
                for (&j, v) in &pivot_row {
                    let delta = -(v * &f);
                    let e = rows[i].entry(j).or_default();
                    let was_zero = e.is_zero();
                    *e += delta;
                    if e.is_zero() {
                        rows[i].remove(&j);
                        col_rows[j].remove(&i);
                    } else if was_zero {
                        col_rows[j].insert(i);
                    }
                }
                if rows[i].is_empty() {
                    alive_rows.remove(&i);
                }
            }
            // Column pj is now zero outside the pivot row; drop it. The
            // remaining entries of the pivot row are cleared by column
            // operations that do not touch other rows.
            col_rows[pj].clear();
        }

        let mut out = vec![BigInt::one(); units];
        if !alive_rows.is_empty() {
            let live_cols: Vec<usize> = (0..self.cols).filter(|&j| !col_rows[j].is_empty()).collect();
            let col_pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
            let mut dense = IntMatrix::zeros(alive_rows.len(), live_cols.len());
            for (r, &i) in alive_rows.iter().enumerate() {
                for (j, v) in &rows[i] {
                    dense.set(r, col_pos[j], v.clone());
                }
            }
            out.extend(invariant_factors(&dense));
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}
