//! Finitely generated abelian groups: invariant-factor normal forms,
//! presentations by generators and relations, and homomorphisms between
//! presented groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::lattice::Lattice;
use super::matrix::IntMatrix;
use super::snf::{invariant_factors, snf};
use crate::error::{Error, Result};

/// `Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `1 < d_1 | d_2 | ... | d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FgAbGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        FgAbGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => FgAbGroup::free(1),
            1 => FgAbGroup::trivial(),
            n => FgAbGroup {
                rank: 0,
                torsion: vec![BigInt::from(n)],
            },
        }
    }

    /// Group `Z^gens / L` where the nonzero Smith invariants of a relation
    /// matrix for `L` are `invariants`.
    pub fn from_invariants(gens: usize, invariants: &[BigInt]) -> Self {
        let nonzero: Vec<&BigInt> = invariants.iter().filter(|d| !d.is_zero()).collect();
        FgAbGroup {
            rank: gens - nonzero.len(),
            torsion: nonzero.into_iter().filter(|d| !d.abs().is_one()).map(|d| d.abs()).collect(),
        }
    }

    /// Normalizes an arbitrary list of cyclic orders (0 meaning `Z`).
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        let n = orders.len();
        let m = IntMatrix::diagonal(n, n, orders);
        FgAbGroup::from_invariants(n, &invariant_factors(&m))
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Order of a finite group; `None` if the rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// All cyclic orders, zeros for the free part.
    fn cyclic_orders(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.rank];
        v.extend(self.torsion.iter().cloned());
        v
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut orders = self.cyclic_orders();
        orders.extend(other.cyclic_orders());
        FgAbGroup::from_cyclic_orders(&orders)
    }

    pub fn sum_all<'a>(groups: impl IntoIterator<Item = &'a FgAbGroup>) -> FgAbGroup {
        let mut orders = Vec::new();
        for g in groups {
            orders.extend(g.cyclic_orders());
        }
        FgAbGroup::from_cyclic_orders(&orders)
    }

    pub fn tensor(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut orders = Vec::new();
        for a in self.cyclic_orders() {
            for b in other.cyclic_orders() {
                // Z/a ⊗ Z/b = Z/gcd(a, b), with Z = Z/0.
                orders.push(a.gcd(&b));
            }
        }
        FgAbGroup::from_cyclic_orders(&orders)
    }

    pub fn tor(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut orders = Vec::new();
        for a in &self.torsion {
            for b in &other.torsion {
                orders.push(a.gcd(b));
            }
        }
        FgAbGroup::from_cyclic_orders(&orders)
    }

    /// Canonical presentation: one generator per cyclic summand.
    pub fn presentation(&self) -> AbPresentation {
        let n = self.rank + self.torsion.len();
        let rows: Vec<Vec<BigInt>> = self
            .torsion
            .iter()
            .enumerate()
            .map(|(k, d)| {
                let mut r = vec![BigInt::zero(); n];
                r[self.rank + k] = d.clone();
                r
            })
            .collect();
        AbPresentation::new(n, IntMatrix::from_big_rows(rows, n))
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && &self.torsion[j] == d {
                j += 1;
            }
            if j - i == 1 {
                parts.push(format!("Z/{d}"));
            } else {
                parts.push(format!("(Z/{d})^{}", j - i));
            }
            i = j;
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct FgAbRepr {
    rank: usize,
    torsion: Vec<String>,
}

impl Serialize for FgAbGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FgAbRepr {
            rank: self.rank,
            torsion: self.torsion.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FgAbGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = FgAbRepr::deserialize(d)?;
        let mut orders = vec![BigInt::zero(); r.rank];
        for t in &r.torsion {
            orders.push(t.parse().map_err(|e| D::Error::custom(format!("bad torsion {t:?}: {e}")))?);
        }
        Ok(FgAbGroup::from_cyclic_orders(&orders))
    }
}

/// `Z^gens / rowspace(relations)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbPresentation {
    pub gens: usize,
    pub relations: IntMatrix,
}

impl AbPresentation {
    pub fn new(gens: usize, relations: IntMatrix) -> Self {
        assert_eq!(relations.cols(), gens, "relation width mismatch");
        AbPresentation { gens, relations }
    }

    pub fn free(gens: usize) -> Self {
        AbPresentation::new(gens, IntMatrix::zeros(0, gens))
    }

    pub fn is_free(&self) -> bool {
        self.relations.is_zero()
    }

    pub fn relation_lattice(&self) -> Lattice {
        Lattice::span(&self.relations)
    }

    pub fn group(&self) -> FgAbGroup {
        FgAbGroup::from_invariants(self.gens, &invariant_factors(&self.relations))
    }

    pub fn direct_sum(&self, other: &AbPresentation) -> AbPresentation {
        AbPresentation::new(self.gens + other.gens, self.relations.direct_sum(&other.relations))
    }

    /// Presentation of the tensor product; generator `(i, k)` is
    /// `i * other.gens + k`.
    pub fn tensor(&self, other: &AbPresentation) -> AbPresentation {
        let a = self.relations.kron(&IntMatrix::identity(other.gens));
        let b = IntMatrix::identity(self.gens).kron(&other.relations);
        AbPresentation::new(self.gens * other.gens, a.vstack(&b))
    }

    /// Adds `n * e_i` for every generator.
    pub fn reduce_mod(&self, n: u64) -> AbPresentation {
        let extra = IntMatrix::scalar(self.gens, n);
        AbPresentation::new(self.gens, self.relations.vstack(&extra))
    }

    pub fn with_extra_relations(&self, extra: &IntMatrix) -> AbPresentation {
        AbPresentation::new(self.gens, self.relations.vstack(extra))
    }

    /// True if `x` and `y` (row vectors on the generators) agree in the group.
    pub fn equal_mod(&self, x: &[BigInt], y: &[BigInt]) -> bool {
        let d: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.relation_lattice().contains(&d)
    }

    /// True if two matrices with codomain `self` agree modulo relations.
    pub fn maps_equal_mod(&self, a: &IntMatrix, b: &IntMatrix) -> bool {
        assert_eq!(a.cols(), self.gens);
        let l = self.relation_lattice();
        (0..a.rows()).all(|i| {
            let d: Vec<BigInt> = a.row(i).iter().zip(b.row(i)).map(|(x, y)| x - y).collect();
            l.contains(&d)
        })
    }
}

/// Homomorphism `source -> target` of presented abelian groups, given on
/// generators (`source.gens x target.gens` matrix).
#[derive(Clone, Debug)]
pub struct AbelianHom {
    pub source: AbPresentation,
    pub target: AbPresentation,
    pub matrix: IntMatrix,
}

/// Injective / surjective status of a homomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Iso,
    Epi,
    Mono,
    Neither,
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MapKind::Iso => "iso",
            MapKind::Epi => "epi",
            MapKind::Mono => "mono",
            MapKind::Neither => "neither",
        };
        f.write_str(s)
    }
}

impl AbelianHom {
    /// Checks that every source relation maps into the target relations.
    pub fn new(source: AbPresentation, target: AbPresentation, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != source.gens || matrix.cols() != target.gens {
            return Err(Error::Structural(format!(
                "homomorphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                source.gens,
                target.gens
            )));
        }
        let images = &source.relations * &matrix;
        let l = target.relation_lattice();
        if let Some(i) = (0..images.rows()).find(|&i| !l.contains(images.row(i))) {
            return Err(Error::Validation(format!(
                "relation {i} of the source does not map to a relation of the target"
            )));
        }
        Ok(AbelianHom {
            source,
            target,
            matrix,
        })
    }

    pub fn is_surjective(&self) -> bool {
        Lattice::span(&self.matrix.vstack(&self.target.relations)).is_full()
    }

    /// Kernel as a lattice of `Z^source.gens` (contains the source relations).
    pub fn kernel_lattice(&self) -> Lattice {
        Lattice::preimage(&self.matrix, &self.target.relation_lattice())
    }

    pub fn kernel(&self) -> FgAbGroup {
        self.kernel_lattice().quotient(&self.source.relation_lattice())
    }

    pub fn is_injective(&self) -> bool {
        self.source.relation_lattice().contains_lattice(&self.kernel_lattice())
    }

    pub fn cokernel(&self) -> FgAbGroup {
        AbPresentation::new(self.target.gens, self.target.relations.vstack(&self.matrix)).group()
    }

    pub fn kind(&self) -> MapKind {
        match (self.is_injective(), self.is_surjective()) {
            (true, true) => MapKind::Iso,
            (false, true) => MapKind::Epi,
            (true, false) => MapKind::Mono,
            (false, false) => MapKind::Neither,
        }
    }

    /// The matrix in Smith-normalized coordinates of source and target
    /// (one coordinate per nontrivial cyclic summand, free summands last
    /// in each), entries reduced modulo the target orders.
    pub fn normalized_matrix(&self) -> IntMatrix {
        let (sv_inv, s_keep) = normal_coordinates(&self.source);
        let (tv, t_keep, t_orders) = {
            let r = snf(&pad_relations(&self.target));
            let d = diag_padded(&r.s, self.target.gens);
            let keep: Vec<usize> = (0..self.target.gens).filter(|&k| !d[k].is_one()).collect();
            let orders: Vec<BigInt> = keep.iter().map(|&k| d[k].clone()).collect();
            (r.v, keep, orders)
        };
        // source normal coords -> source gens -> target gens -> target normal coords
        let full = &(&sv_inv * &self.matrix) * &tv;
        let m = full.select_rows(&s_keep).select_cols(&t_keep);
        IntMatrix::from_fn(m.rows(), m.cols(), |i, j| {
            let o = &t_orders[j];
            if o.is_zero() {
                m.get(i, j).clone()
            } else {
                m.get(i, j).mod_floor(o)
            }
        })
    }
}

fn pad_relations(p: &AbPresentation) -> IntMatrix {
    if p.relations.rows() == 0 {
        IntMatrix::zeros(1, p.gens)
    } else {
        p.relations.clone()
    }
}

fn diag_padded(s: &IntMatrix, n: usize) -> Vec<BigInt> {
    (0..n)
        .map(|k| if k < s.rows() { s.get(k, k).abs() } else { BigInt::zero() })
        .collect()
}

/// `(v_inv, keep)`: rows of `v_inv` express normal generators in the
/// original ones.
fn normal_coordinates(p: &AbPresentation) -> (IntMatrix, Vec<usize>) {
    let r = snf(&pad_relations(p));
    let d = diag_padded(&r.s, p.gens);
    let keep: Vec<usize> = (0..p.gens).filter(|&k| !d[k].is_one()).collect();
    (r.v_inv, keep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_normalization() {
        let g = FgAbGroup::from_cyclic_orders(&[BigInt::from(2), BigInt::from(3), BigInt::zero()]);
        assert_eq!(g.to_string(), "Z + Z/6");
        assert_eq!(FgAbGroup::trivial().to_string(), "0");
        let h = FgAbGroup::cyclic(2).direct_sum(&FgAbGroup::cyclic(2));
        assert_eq!(h.to_string(), "(Z/2)^2");
    }

    #[test]
    fn tensor_and_tor() {
        let z2 = FgAbGroup::cyclic(2);
        let z4 = FgAbGroup::cyclic(4);
        assert_eq!(z2.tensor(&z4), z2);
        assert_eq!(z2.tor(&z4), z2);
        assert_eq!(FgAbGroup::free(2).tensor(&z4).to_string(), "(Z/4)^2");
        assert!(FgAbGroup::free(3).tor(&z4).is_trivial());
    }

    #[test]
    fn hom_kinds() {
        let z = AbPresentation::free(1);
        let z2 = FgAbGroup::cyclic(2).presentation();
        let double = AbelianHom::new(z.clone(), z.clone(), IntMatrix::from_rows(&[[2]])).unwrap();
        assert_eq!(double.kind(), MapKind::Mono);
        let proj = AbelianHom::new(z.clone(), z2.clone(), IntMatrix::from_rows(&[[1]])).unwrap();
        assert_eq!(proj.kind(), MapKind::Epi);
        assert!(AbelianHom::new(z2.clone(), z.clone(), IntMatrix::from_rows(&[[1]])).is_err());
        let id = AbelianHom::new(z2.clone(), z2.clone(), IntMatrix::from_rows(&[[3]])).unwrap();
        assert_eq!(id.kind(), MapKind::Iso);
        assert_eq!(id.normalized_matrix(), IntMatrix::from_rows(&[[1]]));
    }
}
