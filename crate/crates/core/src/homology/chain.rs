use num_bigint::BigInt;

use super::abelian::{AbPresentation, FgAbGroup};
use super::lattice::Lattice;
use super::matrix::IntMatrix;
use super::sparse::SparseMatrix;
use crate::error::{Error, Result};

/// A bounded chain complex of finitely presented abelian groups.
///
/// `differentials[n]` is `d_n : C_n -> C_{n-1}` as a
/// `gens(C_n) x gens(C_{n-1})` matrix; `d_0` has zero columns.
#[derive(Clone, Debug)]
pub struct ChainComplexZ {
    terms: Vec<AbPresentation>,
    differentials: Vec<IntMatrix>,
}

impl ChainComplexZ {
    /// Builds the complex and checks `d_{n-1} d_n = 0` modulo relations and
    /// that each `d_n` respects relations.
    pub fn new(terms: Vec<AbPresentation>, differentials: Vec<IntMatrix>) -> Result<Self> {
        if terms.len() != differentials.len() {
            return Err(Error::Structural("one differential per chain group expected".into()));
        }
        for (n, d) in differentials.iter().enumerate() {
            let target = if n == 0 { 0 } else { terms[n - 1].gens };
            if d.rows() != terms[n].gens || d.cols() != target {
                return Err(Error::Structural(format!("d_{n} has the wrong shape")));
            }
        }
        let c = ChainComplexZ { terms, differentials };
        c.check()?;
        Ok(c)
    }

    /// Free complex from differentials alone (`C_n = Z^{rows(d_n)}`).
    pub fn free(differentials: Vec<IntMatrix>) -> Result<Self> {
        let terms = differentials.iter().map(|d| AbPresentation::free(d.rows())).collect();
        Self::new(terms, differentials)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, n: usize) -> &AbPresentation {
        &self.terms[n]
    }

    pub fn differential(&self, n: usize) -> &IntMatrix {
        &self.differentials[n]
    }

    fn check(&self) -> Result<()> {
        for n in 1..self.terms.len() {
            let lower = self.terms[n - 1].relation_lattice();
            let rel_image = &self.terms[n].relations * &self.differentials[n];
            if !lower.contains_rows(&rel_image) {
                return Err(Error::Validation(format!("d_{n} does not respect relations")));
            }
            if n >= 2 {
                let dd = &self.differentials[n] * &self.differentials[n - 1];
                if !self.terms[n - 2].relation_lattice().contains_rows(&dd) {
                    return Err(Error::Validation(format!("d_{} d_{n} != 0", n - 1)));
                }
            }
        }
        Ok(())
    }

    fn all_free(&self) -> bool {
        self.terms.iter().all(AbPresentation::is_free)
    }

    /// `H_n`; the top term is treated as having no incoming boundary, so
    /// callers should build one term beyond the last degree they read.
    pub fn homology(&self, n: usize) -> FgAbGroup {
        if self.all_free() {
            return self.free_homology(n);
        }
        let cn = &self.terms[n];
        let cycles = if n == 0 {
            Lattice::full(cn.gens)
        } else {
            Lattice::preimage(&self.differentials[n], &self.terms[n - 1].relation_lattice())
        };
        let mut boundaries = cn.relation_lattice();
        if n + 1 < self.terms.len() {
            boundaries = boundaries.add_rows(&self.differentials[n + 1]);
        }
        cycles.quotient(&boundaries)
    }

    fn free_homology(&self, n: usize) -> FgAbGroup {
        let c = self.terms[n].gens;
        let rank_in = if n == 0 {
            0
        } else {
            SparseMatrix::from_dense(&self.differentials[n]).rank()
        };
        let (rank_out, torsion): (usize, Vec<BigInt>) = if n + 1 < self.terms.len() {
            let inv = SparseMatrix::from_dense(&self.differentials[n + 1]).invariant_factors();
            (inv.len(), inv)
        } else {
            (0, Vec::new())
        };
        let g = FgAbGroup::from_invariants(c - rank_in, &torsion);
        debug_assert_eq!(g.rank + rank_out, c - rank_in);
        g
    }

    pub fn homology_up_to(&self, nmax: usize) -> Vec<FgAbGroup> {
        (0..=nmax.min(self.terms.len().saturating_sub(1))).map(|n| self.homology(n)).collect()
    }
}

/// Homology of a free complex given directly by sparse differentials; used
/// where dense matrices would be wasteful (bar complexes, order complexes).
pub fn sparse_free_homology(dims: &[usize], differentials: &[SparseMatrix], n: usize) -> FgAbGroup {
    let rank_in = if n == 0 { 0 } else { differentials[n].rank() };
    let torsion = if n + 1 < differentials.len() {
        differentials[n + 1].invariant_factors()
    } else {
        Vec::new()
    };
    FgAbGroup::from_invariants(dims[n] - rank_in, &torsion)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_homology() {
        // Two vertices, two edges, both from v0 to v1.
        let d1 = IntMatrix::from_rows(&[[-1, 1], [-1, 1]]);
        let c = ChainComplexZ::free(vec![IntMatrix::zeros(2, 0), d1]).unwrap();
        assert_eq!(c.homology(0), FgAbGroup::free(1));
        assert_eq!(c.homology(1), FgAbGroup::free(1));
    }

    #[test]
    fn torsion_coefficients() {
        // Z/4 --(x2)--> Z/4: kernel Z/2 in degree 1, cokernel Z/2 in degree 0.
        let z4 = FgAbGroup::cyclic(4).presentation();
        let c = ChainComplexZ::new(
            vec![z4.clone(), z4],
            vec![IntMatrix::zeros(1, 0), IntMatrix::from_rows(&[[2]])],
        )
        .unwrap();
        assert_eq!(c.homology(0), FgAbGroup::cyclic(2));
        assert_eq!(c.homology(1), FgAbGroup::cyclic(2));
    }

    #[test]
    fn rejects_nonzero_square() {
        let d1 = IntMatrix::from_rows(&[[1]]);
        let d2 = IntMatrix::from_rows(&[[1]]);
        assert!(ChainComplexZ::free(vec![IntMatrix::zeros(1, 0), d1, d2]).is_err());
    }
}
