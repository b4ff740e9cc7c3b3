//! `R_Y(X) = Z[everywhere-defined maps Y -> X]` and its pairing with
//! contravariant functors.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::gamma::{GammaEMorphism, PointedSetTuple};
use super::library::GammaFunctor;
use super::tabulated::downward_closure;
use crate::error::{structural, Result};
use crate::homology::{AbPresentation, FgAbGroup, IntMatrix};

/// Covariant in `X`: a map is sent to its composite when that is still
/// everywhere defined, and to zero otherwise.
#[derive(Clone, Debug)]
pub struct Representable {
    pub y: PointedSetTuple,
}

impl Representable {
    pub fn new(y: PointedSetTuple) -> Self {
        Representable { y }
    }

    pub fn basis(&self, x: &PointedSetTuple) -> Result<Vec<Vec<Vec<usize>>>> {
        if x.coords() != self.y.coords() {
            return Err(structural("representable evaluated on a tuple of the wrong width"));
        }
        let mut out = vec![Vec::new()];
        for (e, &n) in self.y.sizes.iter().enumerate() {
            let mut coord = vec![Vec::new()];
            for _ in 0..n {
                coord = coord
                    .into_iter()
                    .flat_map(|c: Vec<usize>| {
                        (0..x.sizes[e]).map(move |k| {
                            let mut d = c.clone();
                            d.push(k);
                            d
                        })
                    })
                    .collect();
            }
            out = out
                .into_iter()
                .flat_map(|p: Vec<Vec<usize>>| {
                    coord.iter().map(move |c| {
                        let mut q = p.clone();
                        q.push(c.clone());
                        q
                    })
                })
                .collect();
        }
        Ok(out)
    }

    pub fn rank(&self, x: &PointedSetTuple) -> Result<usize> {
        Ok(self.basis(x)?.len())
    }

    /// `gens(R(X)) x gens(R(X'))` for `f : X -> X'`.
    pub fn act(&self, f: &GammaEMorphism) -> Result<IntMatrix> {
        let src = self.basis(&f.source)?;
        let tgt: BTreeMap<Vec<Vec<usize>>, usize> =
            self.basis(&f.target)?.into_iter().enumerate().map(|(i, b)| (b, i)).collect();
        let mut m = IntMatrix::zeros(src.len(), tgt.len());
        for (i, phi) in src.iter().enumerate() {
            let composite: Option<Vec<Vec<usize>>> = phi
                .iter()
                .enumerate()
                .map(|(e, c)| c.iter().map(|&k| f.maps[e][k]).collect())
                .collect();
            if let Some(c) = composite {
                m.set(i, tgt[&c], 1);
            }
        }
        Ok(m)
    }
}

/// `∫^X T(X) ⊗ R_Y(X)` over the tuples below `Y`: the direct sum of
/// `T(X) ⊗ R_Y(X)` modulo `T(f)(t) ⊗ r = t ⊗ R_Y(f)(r)` for all `f`.
pub fn coend_with_representable(t: &dyn GammaFunctor, y: &PointedSetTuple) -> Result<FgAbGroup> {
    let r = Representable::new(y.clone());
    let objects = downward_closure(std::slice::from_ref(y));
    let mut offsets = Vec::new();
    let mut pres = AbPresentation::free(0);
    let mut values = Vec::new();
    for x in &objects {
        let v = t.value(x)?;
        let block = v.tensor(&AbPresentation::free(r.rank(x)?));
        offsets.push(pres.gens);
        pres = pres.direct_sum(&block);
        values.push(v);
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, x) in objects.iter().enumerate() {
        for (j, x2) in objects.iter().enumerate() {
            for f in GammaEMorphism::all(x, x2) {
                let tf = t.act(&f)?; // gens(T(x2)) x gens(T(x))
                let rf = r.act(&f)?; // gens(R(x)) x gens(R(x2))
                let (tx, rx) = (values[i].gens, rf.rows());
                let (tx2, rx2) = (values[j].gens, rf.cols());
                for a in 0..tx2 {
                    for b in 0..rx {
                        let mut row = vec![BigInt::from(0); pres.gens];
                        for k in 0..tx {
                            row[offsets[i] + k * rx + b] += tf.get(a, k);
                        }
                        for l in 0..rx2 {
                            row[offsets[j] + a * rx2 + l] -= rf.get(b, l);
                        }
                        rows.push(row);
                    }
                }
            }
        }
    }
    let extra = IntMatrix::from_big_rows(rows, pres.gens);
    Ok(pres.with_extra_relations(&extra).group())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::cross::full_cross_effect;
    use crate::functor::library::LibraryFunctor;

    #[test]
    fn empty_source_is_constant_z() {
        let r = Representable::new(PointedSetTuple::base(2));
        for x in downward_closure(&[PointedSetTuple::new(vec![2, 1])]) {
            assert_eq!(r.rank(&x).unwrap(), 1);
        }
    }

    #[test]
    fn single_part_counts_parts() {
        let r = Representable::new(PointedSetTuple::new(vec![0, 1]));
        for x in downward_closure(&[PointedSetTuple::new(vec![2, 3])]) {
            assert_eq!(r.rank(&x).unwrap(), x.sizes[1]);
        }
    }

    #[test]
    fn coend_recovers_cross_effect() {
        let ts = [
            LibraryFunctor::constant_z(),
            LibraryFunctor::additive(2),
            LibraryFunctor::tensor(LibraryFunctor::additive(2), LibraryFunctor::Linear(0)),
            LibraryFunctor::mod_n(LibraryFunctor::Functions(PointedSetTuple::new(vec![1, 1])), 6),
        ];
        for t in &ts {
            for y in downward_closure(&[PointedSetTuple::new(vec![2, 1])]) {
                let lhs = coend_with_representable(t, &y).unwrap();
                let rhs = full_cross_effect(t, &y).unwrap().group;
                assert_eq!(lhs, rhs, "{t} at {y}");
            }
        }
    }
}
