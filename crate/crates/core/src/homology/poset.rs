//! Homology of finite posets with coefficients in a covariant functor,
//! computed on the order complex: `C_n = ⊕_{x_0 < ... < x_n} M(x_0)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::abelian::{AbPresentation, FgAbGroup};
use super::chain::{sparse_free_homology, ChainComplexZ};
use super::matrix::IntMatrix;
use super::sparse::SparseMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn from_relation(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let table: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| leq(x, y)).collect()).collect();
        let p = FinitePoset { n, leq: table };
        p.check_axioms()?;
        Ok(p)
    }

    /// Reflexive-transitive closure of a covering relation `(lower, upper)`.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::Structural(format!("cover ({a}, {b}) out of range")));
            }
            up[a].push(b);
        }
        let mut leq = vec![vec![false; n]; n];
        for (x, row) in leq.iter_mut().enumerate() {
            let mut stack = vec![x];
            while let Some(y) = stack.pop() {
                if row[y] {
                    continue;
                }
                row[y] = true;
                stack.extend(up[y].iter().copied());
            }
        }
        let p = FinitePoset { n, leq };
        p.check_axioms()?;
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq[x][y]
    }

    pub fn check_axioms(&self) -> Result<()> {
        for x in 0..self.n {
            if !self.leq[x][x] {
                return Err(Error::Validation(format!("not reflexive at {x}")));
            }
            for y in 0..self.n {
                if x != y && self.leq[x][y] && self.leq[y][x] {
                    return Err(Error::Validation(format!("not antisymmetric at ({x}, {y})")));
                }
                if !self.leq[x][y] {
                    continue;
                }
                for z in 0..self.n {
                    if self.leq[y][z] && !self.leq[x][z] {
                        return Err(Error::Validation(format!("not transitive at ({x}, {y}, {z})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn opposite(&self) -> FinitePoset {
        FinitePoset {
            n: self.n,
            leq: (0..self.n).map(|x| (0..self.n).map(|y| self.leq[y][x]).collect()).collect(),
        }
    }

    pub fn least(&self) -> Option<usize> {
        (0..self.n).find(|&x| (0..self.n).all(|y| self.leq[x][y]))
    }

    pub fn greatest(&self) -> Option<usize> {
        (0..self.n).find(|&x| (0..self.n).all(|y| self.leq[y][x]))
    }

    /// All strict chains `x_0 < ... < x_k` (so `k + 1` elements).
    pub fn chains(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..self.n).map(|x| vec![x]).collect();
        for _ in 0..k {
            let mut next = Vec::new();
            for c in &out {
                let last = *c.last().unwrap();
                for y in 0..self.n {
                    if self.lt(last, y) {
                        let mut d = c.clone();
                        d.push(y);
                        next.push(d);
                    }
                }
            }
            out = next;
        }
        out
    }
}

/// A covariant functor from a finite poset to finitely presented abelian
/// groups. `map(x, y)` (for `x <= y`) is a `gens(x) x gens(y)` matrix.
pub trait CoefficientSystem {
    fn value(&self, x: usize) -> AbPresentation;
    fn map(&self, x: usize, y: usize) -> IntMatrix;
}

/// The same group everywhere with identity maps.
pub struct ConstantCoefficients(pub AbPresentation);

impl CoefficientSystem for ConstantCoefficients {
    fn value(&self, _x: usize) -> AbPresentation {
        self.0.clone()
    }

    fn map(&self, _x: usize, _y: usize) -> IntMatrix {
        IntMatrix::identity(self.0.gens)
    }
}

/// Explicit tables, e.g. for hand-built test systems.
pub struct TableCoefficients {
    pub values: Vec<AbPresentation>,
    pub maps: HashMap<(usize, usize), IntMatrix>,
}

impl CoefficientSystem for TableCoefficients {
    fn value(&self, x: usize) -> AbPresentation {
        self.values[x].clone()
    }

    fn map(&self, x: usize, y: usize) -> IntMatrix {
        if x == y {
            return IntMatrix::identity(self.values[x].gens);
        }
        self.maps
            .get(&(x, y))
            .cloned()
            .unwrap_or_else(|| IntMatrix::zeros(self.values[x].gens, self.values[y].gens))
    }
}

/// Checks that `M` is a functor: identities, composition and relations,
/// all modulo the target relations.
pub fn validate_coefficients(p: &FinitePoset, m: &dyn CoefficientSystem) -> Result<()> {
    let values: Vec<AbPresentation> = (0..p.len()).map(|x| m.value(x)).collect();
    let mut maps = HashMap::new();
    for x in 0..p.len() {
        for y in 0..p.len() {
            if p.leq(x, y) {
                let f = m.map(x, y);
                if f.rows() != values[x].gens || f.cols() != values[y].gens {
                    return Err(Error::Validation(format!("map {x} -> {y} has the wrong shape")));
                }
                if !values[y].relation_lattice().contains_rows(&(&values[x].relations * &f)) {
                    return Err(Error::Validation(format!("map {x} -> {y} does not respect relations")));
                }
                maps.insert((x, y), f);
            }
        }
    }
    for x in 0..p.len() {
        if !values[x].maps_equal_mod(&maps[&(x, x)], &IntMatrix::identity(values[x].gens)) {
            return Err(Error::Validation(format!("identity at {x} is not sent to the identity")));
        }
    }
    for x in 0..p.len() {
        for y in 0..p.len() {
            if !p.lt(x, y) {
                continue;
            }
            for z in 0..p.len() {
                if !p.lt(y, z) {
                    continue;
                }
                let composite = &maps[&(x, y)] * &maps[&(y, z)];
                if !values[z].maps_equal_mod(&composite, &maps[&(x, z)]) {
                    return Err(Error::Validation(format!("composition fails along {x} < {y} < {z}")));
                }
            }
        }
    }
    Ok(())
}

struct Assembly {
    terms: Vec<AbPresentation>,
    differentials: Vec<SparseMatrix>,
}

fn assemble(p: &FinitePoset, m: &dyn CoefficientSystem, top: usize) -> Assembly {
    let values: Vec<AbPresentation> = (0..p.len()).map(|x| m.value(x)).collect();
    let mut map_cache: HashMap<(usize, usize), IntMatrix> = HashMap::new();
    let chains: Vec<Vec<Vec<usize>>> = (0..=top).map(|k| p.chains(k)).collect();

    // Offsets of each chain's block of generators.
    let mut offsets: Vec<HashMap<Vec<usize>, usize>> = Vec::new();
    let mut terms = Vec::new();
    for level in &chains {
        let mut off = HashMap::new();
        let mut gens = 0;
        let mut rel_blocks: Vec<(usize, &IntMatrix)> = Vec::new();
        for c in level {
            off.insert(c.clone(), gens);
            rel_blocks.push((gens, &values[c[0]].relations));
            gens += values[c[0]].gens;
        }
        let nrel: usize = rel_blocks.iter().map(|(_, r)| r.rows()).sum();
        let mut rel = IntMatrix::zeros(nrel, gens);
        let mut row = 0;
        for (o, r) in rel_blocks {
            for i in 0..r.rows() {
                for j in 0..r.cols() {
                    if !r.get(i, j).is_zero() {
                        rel.set(row, o + j, r.get(i, j).clone());
                    }
                }
                row += 1;
            }
        }
        terms.push(AbPresentation::new(gens, rel));
        offsets.push(off);
    }

    let mut differentials = vec![SparseMatrix::new(terms[0].gens, 0)];
    for k in 1..=top {
        let mut d = SparseMatrix::new(terms[k].gens, terms[k - 1].gens);
        for c in &chains[k] {
            let src = offsets[k][c];
            let x0 = c[0];
            for i in 0..c.len() {
                let mut face = c.clone();
                face.remove(i);
                let dst = offsets[k - 1][&face];
                let sign = if i % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                if i == 0 {
                    let f = map_cache.entry((x0, c[1])).or_insert_with(|| m.map(x0, c[1]));
                    for a in 0..f.rows() {
                        for b in 0..f.cols() {
                            let v = f.get(a, b);
                            if !v.is_zero() {
                                d.add(src + a, dst + b, &sign * v);
                            }
                        }
                    }
                } else {
                    for a in 0..values[x0].gens {
                        d.add(src + a, dst + a, sign.clone());
                    }
                }
            }
        }
        differentials.push(d);
    }
    Assembly { terms, differentials }
}

fn check_differentials(a: &Assembly) -> Result<()> {
    for d in &a.differentials {
        crate::limits::check_matrix("order complex differential entries", d.rows(), d.cols())?;
    }
    Ok(())
}

/// The order-complex chain complex up to degree `top`.
pub fn order_complex(p: &FinitePoset, m: &dyn CoefficientSystem, top: usize) -> Result<ChainComplexZ> {
    let a = assemble(p, m, top);
    check_differentials(&a)?;
    ChainComplexZ::new(a.terms, a.differentials.iter().map(SparseMatrix::to_dense).collect())
}

/// `H_0 .. H_nmax` of `p` with coefficients in `m`. The coefficient system
/// is validated first.
pub fn poset_homology(p: &FinitePoset, m: &dyn CoefficientSystem, nmax: usize) -> Result<Vec<FgAbGroup>> {
    validate_coefficients(p, m)?;
    let a = assemble(p, m, nmax + 1);
    check_differentials(&a)?;
    if a.terms.iter().all(AbPresentation::is_free) {
        for n in 2..a.differentials.len() {
            if !a.differentials[n].product_is_zero(&a.differentials[n - 1]) {
                return Err(Error::Verification(format!("d_{} d_{n} != 0 in the order complex", n - 1)));
            }
        }
        let dims: Vec<usize> = a.terms.iter().map(|t| t.gens).collect();
        return Ok((0..=nmax).map(|n| sparse_free_homology(&dims, &a.differentials, n)).collect());
    }
    let c = ChainComplexZ::new(a.terms, a.differentials.iter().map(SparseMatrix::to_dense).collect())?;
    Ok((0..=nmax).map(|n| c.homology(n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> AbPresentation {
        AbPresentation::free(1)
    }

    #[test]
    fn one_point() {
        let p = FinitePoset::from_covers(1, &[]).unwrap();
        let h = poset_homology(&p, &ConstantCoefficients(z()), 2).unwrap();
        assert_eq!(h, vec![FgAbGroup::free(1), FgAbGroup::trivial(), FgAbGroup::trivial()]);
    }

    #[test]
    fn two_incomparable_points() {
        let p = FinitePoset::from_covers(2, &[]).unwrap();
        let a = FgAbGroup::cyclic(2).presentation();
        let b = FgAbGroup::cyclic(3).presentation();
        let m = TableCoefficients {
            values: vec![a, b],
            maps: HashMap::new(),
        };
        let h = poset_homology(&p, &m, 1).unwrap();
        assert_eq!(h[0], FgAbGroup::cyclic(6));
        assert!(h[1].is_trivial());
    }

    #[test]
    fn suspension_of_two_points_is_a_circle() {
        // a, b < c, d
        let p = FinitePoset::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let h = poset_homology(&p, &ConstantCoefficients(z()), 2).unwrap();
        assert_eq!(h[0], FgAbGroup::free(1));
        assert_eq!(h[1], FgAbGroup::free(1));
        assert!(h[2].is_trivial());
    }

    #[test]
    fn rejects_non_functorial_coefficients() {
        // 0 < 1 < 2 with maps that do not compose.
        let p = FinitePoset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        let mut maps = HashMap::new();
        maps.insert((0, 1), IntMatrix::from_rows(&[[1]]));
        maps.insert((1, 2), IntMatrix::from_rows(&[[1]]));
        maps.insert((0, 2), IntMatrix::from_rows(&[[2]]));
        let m = TableCoefficients {
            values: vec![z(), z(), z()],
            maps,
        };
        assert!(matches!(poset_homology(&p, &m, 1), Err(Error::Validation(_))));
    }
}
