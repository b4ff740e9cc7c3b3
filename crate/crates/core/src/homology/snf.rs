//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Result of a Smith normal form computation: `u * m * v == s`, `u` and
/// `v` unimodular, `s` diagonal with `s[0] | s[1] | ...`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// Inverse of `v`, maintained alongside it.
    pub v_inv: IntMatrix,
}

impl Snf {
    /// The `min(rows, cols)` diagonal entries, nonnegative, zeros last.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.s.rows().min(self.s.cols());
        (0..k).map(|i| self.s.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn snf(m: &IntMatrix) -> Snf {
    let mut calc = SnfCalc::new(m.clone(), true);
    calc.run();
    Snf {
        s: calc.a,
        u: calc.u.unwrap(),
        v: calc.v.unwrap(),
        v_inv: calc.v_inv.unwrap(),
    }
}

/// Nonzero diagonal entries of the Smith normal form, in divisibility order.
/// Skips transform bookkeeping.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut calc = SnfCalc::new(m.clone(), false);
    calc.run();
    let k = calc.a.rows().min(calc.a.cols());
    (0..k)
        .map(|i| calc.a.get(i, i).clone())
        .filter(|d| !d.is_zero())
        .collect()
}

/// Alternating row and column Hermite passes until the matrix is monomial,
/// then a permutation and gcd/lcm steps. Entries above each pivot are kept
/// reduced modulo the pivot, which keeps the transforms near the size of
/// the minors. `along_cols` switches every operation to columns.
struct SnfCalc {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
}

impl SnfCalc {
    fn new(a: IntMatrix, track: bool) -> Self {
        let (r, c) = (a.rows(), a.cols());
        SnfCalc {
            u: track.then(|| IntMatrix::identity(r)),
            v: track.then(|| IntMatrix::identity(c)),
            v_inv: track.then(|| IntMatrix::identity(c)),
            a,
        }
    }

    fn lines(&self, along_cols: bool) -> usize {
        if along_cols {
            self.a.cols()
        } else {
            self.a.rows()
        }
    }

    fn at(&self, along_cols: bool, line: usize, pos: usize) -> &BigInt {
        if along_cols {
            self.a.get(pos, line)
        } else {
            self.a.get(line, pos)
        }
    }

    fn swap(&mut self, along_cols: bool, i: usize, j: usize) {
        if along_cols {
            self.a.swap_cols(i, j);
            if let (Some(v), Some(w)) = (&mut self.v, &mut self.v_inv) {
                v.swap_cols(i, j);
                w.swap_rows(i, j);
            }
        } else {
            self.a.swap_rows(i, j);
            if let Some(u) = &mut self.u {
                u.swap_rows(i, j);
            }
        }
    }

    // line[dst] += k * line[src]
    fn add(&mut self, along_cols: bool, dst: usize, src: usize, k: &BigInt) {
        if along_cols {
            self.a.add_col_multiple(dst, src, k);
            if let (Some(v), Some(w)) = (&mut self.v, &mut self.v_inv) {
                v.add_col_multiple(dst, src, k);
                w.add_row_multiple(src, dst, &-k);
            }
        } else {
            self.a.add_row_multiple(dst, src, k);
            if let Some(u) = &mut self.u {
                u.add_row_multiple(dst, src, k);
            }
        }
    }

    fn negate(&mut self, along_cols: bool, i: usize) {
        if along_cols {
            self.a.negate_col(i);
            if let (Some(v), Some(w)) = (&mut self.v, &mut self.v_inv) {
                v.negate_col(i);
                w.negate_row(i);
            }
        } else {
            self.a.negate_row(i);
            if let Some(u) = &mut self.u {
                u.negate_row(i);
            }
        }
    }

    /// `(line i, line j) <- (p*i + q*j, r*i + s*j)` with `p*s - q*r = 1`.
    fn combine(&mut self, along_cols: bool, i: usize, j: usize, [p, q, r, s]: [&BigInt; 4]) {
        if along_cols {
            self.a.combine_cols(i, j, p, q, r, s);
            if let (Some(v), Some(w)) = (&mut self.v, &mut self.v_inv) {
                v.combine_cols(i, j, p, q, r, s);
                w.combine_rows(i, j, s, &-r, &-q, p);
            }
        } else {
            self.a.combine_rows(i, j, p, q, r, s);
            if let Some(u) = &mut self.u {
                u.combine_rows(i, j, p, q, r, s);
            }
        }
    }

    /// Reduces `line` at `pos` modulo the positive pivot of `by` there.
    fn reduce(&mut self, along_cols: bool, line: usize, by: usize, pos: usize) {
        let q = self.at(along_cols, line, pos).div_floor(self.at(along_cols, by, pos));
        if !q.is_zero() {
            self.add(along_cols, line, by, &-q);
        }
    }

    fn reduce_all(&mut self, along_cols: bool, piv: &[(usize, usize)]) {
        for (k, &(h, c)) in piv.iter().enumerate() {
            for &(h2, _) in &piv[..k] {
                self.reduce(along_cols, h2, h, c);
            }
        }
    }

    /// Echelon form along `along_cols` with positive pivots and reduced
    /// entries above them; pivot lines end up first, in pivot order.
    fn hermite_pass(&mut self, along_cols: bool) {
        let n = self.lines(along_cols);
        let len = self.lines(!along_cols);
        // (line, position), sorted by position
        let mut piv: Vec<(usize, usize)> = Vec::new();
        for r in 0..n {
            let mut touched = false;
            let mut from = 0;
            for &(h, c) in &piv {
                // A leading entry before the next pivot becomes a new pivot.
                match (from..len).find(|&j| !self.at(along_cols, r, j).is_zero()) {
                    Some(j) if j == c => from = c + 1,
                    Some(j) if j > c => continue,
                    _ => break,
                }
                let b = self.at(along_cols, r, c);
                let p = self.at(along_cols, h, c);
                let (q, rem) = b.div_rem(p);
                if rem.is_zero() {
                    self.add(along_cols, r, h, &-q);
                } else {
                    let e = p.extended_gcd(b);
                    let (pg, bg) = (p / &e.gcd, b / &e.gcd);
                    self.combine(along_cols, h, r, [&e.x, &e.y, &-bg, &pg]);
                    touched = true;
                }
            }
            if let Some(c0) = (0..len).find(|&c| !self.at(along_cols, r, c).is_zero()) {
                if self.at(along_cols, r, c0).is_negative() {
                    self.negate(along_cols, r);
                }
                let at = piv.partition_point(|&(_, c)| c < c0);
                piv.insert(at, (r, c0));
                touched = true;
            }
            if touched {
                self.reduce_all(along_cols, &piv);
            }
        }
        for t in 0..piv.len() {
            let h = piv[t].0;
            if h != t {
                self.swap(along_cols, t, h);
                for e in piv.iter_mut() {
                    if e.0 == t {
                        e.0 = h;
                    }
                }
                piv[t].0 = t;
            }
        }
    }

    fn is_monomial(&self) -> bool {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        let mut col_seen = vec![false; cols];
        for i in 0..rows {
            let mut row_seen = false;
            for (j, seen) in col_seen.iter_mut().enumerate() {
                if !self.a.get(i, j).is_zero() {
                    if row_seen || *seen {
                        return false;
                    }
                    row_seen = true;
                    *seen = true;
                }
            }
        }
        true
    }

    fn run(&mut self) {
        let mut along_cols = false;
        while !self.is_monomial() {
            self.hermite_pass(along_cols);
            along_cols = !along_cols;
        }
        let (rows, cols) = (self.a.rows(), self.a.cols());
        let mut k = 0;
        while let Some(i) = (k..rows).find(|&i| (0..cols).any(|j| !self.a.get(i, j).is_zero())) {
            self.swap(false, k, i);
            let j = (k..cols).find(|&j| !self.a.get(k, j).is_zero()).unwrap();
            self.swap(true, k, j);
            if self.a.get(k, k).is_negative() {
                self.negate(false, k);
            }
            k += 1;
        }
        // Divisibility: (a, b) -> (gcd, lcm) on each diagonal pair.
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (self.a.get(i, i).clone(), self.a.get(j, j).clone());
                if b.is_multiple_of(&a) {
                    continue;
                }
                let e = a.extended_gcd(&b);
                let (ag, bg) = (&a / &e.gcd, &b / &e.gcd);
                self.combine(false, i, j, [&e.x, &e.y, &-&bg, &ag]);
                let one = BigInt::one();
                self.combine(true, i, j, [&one, &one, &-(&e.y * &bg), &(&e.x * &ag)]);
            }
        }
    }
}
