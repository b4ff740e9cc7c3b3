//! Sublattices of `Z^n` in Hermite normal form.
//!
//! Subgroups of a presented abelian group `Z^n / L` are handled as lattices
//! containing `L`; kernels, images and intersections all reduce to the
//! echelon routine below.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::abelian::FgAbGroup;
use super::matrix::IntMatrix;
use super::snf::invariant_factors;

/// Row echelon form `h = u * m` with `u` unimodular. Pivot entries are
/// positive and entries above a pivot are reduced into `[0, pivot)`.
pub struct Echelon {
    pub h: IntMatrix,
    pub u: Option<IntMatrix>,
    /// Column of the pivot in each nonzero row of `h` (rows `0..pivots.len()`).
    pub pivots: Vec<usize>,
}

pub fn echelon(m: &IntMatrix, track: bool) -> Echelon {
    let mut h = m.clone();
    let mut u = track.then(|| IntMatrix::identity(m.rows()));
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..h.cols() {
        if r == h.rows() {
            break;
        }
        // Fold every nonzero entry at or below row r in column c into row r.
        let mut found = false;
        for i in r..h.rows() {
            if h.get(i, c).is_zero() {
                continue;
            }
            if !found {
                h.swap_rows(r, i);
                if let Some(u) = &mut u {
                    u.swap_rows(r, i);
                }
                found = true;
                continue;
            }
            let a = h.get(r, c).clone();
            let b = h.get(i, c).clone();
            if b.is_multiple_of(&a) {
                let q = -(&b / &a);
                h.add_row_multiple(i, r, &q);
                if let Some(u) = &mut u {
                    u.add_row_multiple(i, r, &q);
                }
            } else {
                let eg = a.extended_gcd(&b);
                let (g, s, t) = (eg.gcd, eg.x, eg.y);
                let p = -(&b / &g);
                let q = &a / &g;
                h.combine_rows(r, i, &s, &t, &p, &q);
                if let Some(u) = &mut u {
                    u.combine_rows(r, i, &s, &t, &p, &q);
                }
            }
        }
        if !found {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            if let Some(u) = &mut u {
                u.negate_row(r);
            }
        }
        let p = h.get(r, c).clone();
        for i in 0..r {
            let x = h.get(i, c);
            if x.is_zero() {
                continue;
            }
            let q = -x.div_floor(&p);
            if !q.is_zero() {
                h.add_row_multiple(i, r, &q);
                if let Some(u) = &mut u {
                    u.add_row_multiple(i, r, &q);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { h, u, pivots }
}

/// Basis (rows) of `{x : x * m = 0}`.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let e = echelon(m, true);
    let u = e.u.unwrap();
    let idx: Vec<usize> = (e.pivots.len()..m.rows()).collect();
    u.select_rows(&idx)
}

/// A sublattice of `Z^ambient`, stored by its Hermite basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn zero(ambient: usize) -> Self {
        Lattice {
            basis: IntMatrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Lattice {
            basis: IntMatrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// The lattice spanned by the rows of `gens`.
    pub fn span(gens: &IntMatrix) -> Self {
        let e = echelon(gens, false);
        let k = e.pivots.len();
        let idx: Vec<usize> = (0..k).collect();
        Lattice {
            basis: e.h.select_rows(&idx),
            pivots: e.pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient() && self.basis.row_vecs().enumerate().all(|(i, r)| r[self.pivots[i]].is_one())
    }

    /// Integer coordinates of `v` in the Hermite basis, if `v` lies in the
    /// lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient(), "vector length mismatch");
        let mut rest = v.to_vec();
        let mut coords = vec![BigInt::zero(); self.rank()];
        // Pivot columns increase with the row index; everything left of a
        // pivot in its row is zero.
        for (i, &p) in self.pivots.iter().enumerate() {
            let x = &rest[p];
            if x.is_zero() {
                continue;
            }
            let piv = self.basis.get(i, p);
            if !x.is_multiple_of(piv) {
                return None;
            }
            let q = x / piv;
            for (r, b) in rest.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *r -= &q * b;
                }
            }
            coords[i] = q;
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.row_vecs().all(|r| self.contains(r))
    }

    pub fn contains_rows(&self, m: &IntMatrix) -> bool {
        m.row_vecs().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        Lattice::span(&self.basis.vstack(&other.basis))
    }

    pub fn add_rows(&self, m: &IntMatrix) -> Lattice {
        Lattice::span(&self.basis.vstack(m))
    }

    pub fn intersect(&self, other: &Lattice) -> Lattice {
        if self.rank() == 0 || other.rank() == 0 {
            return Lattice::zero(self.ambient());
        }
        let stacked = self.basis.vstack(&other.basis);
        let k = left_kernel(&stacked);
        let first: Vec<usize> = (0..self.rank()).collect();
        let coeffs = k.select_cols(&first);
        Lattice::span(&(&coeffs * &self.basis))
    }

    /// Image of the lattice under `x |-> x * f`.
    pub fn image(&self, f: &IntMatrix) -> Lattice {
        Lattice::span(&(&self.basis * f))
    }

    /// `{x in Z^rows(f) : x * f in target}`.
    pub fn preimage(f: &IntMatrix, target: &Lattice) -> Lattice {
        let m = f.rows();
        let stacked = f.vstack(target.basis());
        let k = left_kernel(&stacked);
        let first: Vec<usize> = (0..m).collect();
        Lattice::span(&k.select_cols(&first))
    }

    /// Isomorphism type of `self / sub`. Panics if `sub` is not contained in
    /// `self`.
    pub fn quotient(&self, sub: &Lattice) -> FgAbGroup {
        let coords: Vec<Vec<BigInt>> = sub
            .basis
            .row_vecs()
            .map(|r| self.coordinates(r).expect("quotient: sublattice not contained"))
            .collect();
        let m = IntMatrix::from_big_rows(coords, self.rank());
        FgAbGroup::from_invariants(self.rank(), &invariant_factors(&m))
    }
}
