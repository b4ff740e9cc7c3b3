//! Cross effects and the checks built on them.

use serde::Serialize;

use super::gamma::{idempotent, GammaEMorphism, PointedSetTuple, SubTuple};
use super::library::GammaFunctor;
use crate::error::{structural, Result};
use crate::homology::{AbPresentation, FgAbGroup, IntMatrix, Lattice};

/// `cr_M(T)(C)` as a subgroup of `T(C)`: `lattice` contains the relations
/// of `T(C)` and `group = lattice / relations`.
#[derive(Clone, Debug)]
pub struct CrossEffect {
    pub group: FgAbGroup,
    pub lattice: Lattice,
}

impl CrossEffect {
    /// Rows spanning the subgroup (relations included).
    pub fn embedding(&self) -> &IntMatrix {
        self.lattice.basis()
    }
}

/// Cross effect from a value and the action of the idempotents on it.
/// Only the maximal proper sub-tuples of `m` are needed: the kernels of the
/// smaller idempotents contain theirs.
pub fn cross_effect_from(
    value: &AbPresentation,
    d: &mut dyn FnMut(&SubTuple) -> Result<IntMatrix>,
    m: &SubTuple,
) -> Result<CrossEffect> {
    let rel = value.relation_lattice();
    let dm = d(m)?;
    let mut lattice = rel.add_rows(&dm);
    for u in m.maximal_proper() {
        let du = d(&u)?;
        lattice = lattice.intersect(&Lattice::preimage(&du, &rel));
    }
    Ok(CrossEffect {
        group: lattice.quotient(&rel),
        lattice,
    })
}

pub fn cross_effect(t: &dyn GammaFunctor, c: &PointedSetTuple, m: &SubTuple) -> Result<CrossEffect> {
    if !m.is_sub_of(c) {
        return Err(structural("sub-tuple does not fit the object"));
    }
    let value = t.value(c)?;
    cross_effect_from(&value, &mut |u| t.act(&idempotent(c, u)?), m)
}

/// The full cross effect `cr(T)(C) = cr_C(T)(C)`.
pub fn full_cross_effect(t: &dyn GammaFunctor, c: &PointedSetTuple) -> Result<CrossEffect> {
    cross_effect(t, c, &c.full())
}

#[derive(Clone, Debug, Serialize)]
pub struct SplittingReport {
    pub object: PointedSetTuple,
    pub value: FgAbGroup,
    pub summands: FgAbGroup,
    pub spans: bool,
    pub holds: bool,
}

/// `T(C) = ⊕_M cr_M(T)(C)`: the summands span `T(C)` and have the same
/// invariants, so the sum map is an isomorphism.
pub fn check_splitting(t: &dyn GammaFunctor, c: &PointedSetTuple) -> Result<SplittingReport> {
    let value = t.value(c)?;
    let mut span = value.relation_lattice();
    let mut summands = FgAbGroup::trivial();
    for m in c.subtuples() {
        let cr = cross_effect(t, c, &m)?;
        span = span.sum(&cr.lattice);
        summands = summands.direct_sum(&cr.group);
    }
    let group = value.group();
    let spans = span.is_full();
    Ok(SplittingReport {
        object: c.clone(),
        holds: spans && summands == group,
        value: group,
        summands,
        spans,
    })
}

/// For `f : C -> D` and `N ⊆ D`, `T(f)` sends `cr_N(T)(D)` into the sum of
/// the `cr_M(T)(C)` with `M ⊆ f^{-1}(N)` and `f(M) = N`; in particular to
/// zero when `N` is not inside the image of `f`, and into
/// `cr_{f^{-1}(N)}(T)(C)` when `f` is injective.
pub fn check_cross_effect_naturality(t: &dyn GammaFunctor, f: &GammaEMorphism, n: &SubTuple) -> Result<bool> {
    let (c, d) = (&f.source, &f.target);
    let cr_n = cross_effect(t, d, n)?;
    let image = cr_n.lattice.image(&t.act(f)?);
    let vc = t.value(c)?;
    let mut allowed = vc.relation_lattice();
    let pre = f.preimage(n);
    for m in c.subtuples() {
        if m.is_subset(&pre) && f.image(&m) == *n {
            allowed = allowed.sum(&cross_effect(t, c, &m)?.lattice);
        }
    }
    Ok(allowed.contains_lattice(&image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::library::LibraryFunctor;
    use crate::functor::tabulated::downward_closure;

    #[test]
    fn constant_functor_has_no_cross_effects_above_base() {
        let t = LibraryFunctor::constant_z();
        let c = PointedSetTuple::new(vec![1, 2]);
        for m in c.subtuples() {
            let cr = cross_effect(&t, &c, &m).unwrap();
            let expected = if m.count() == 0 { FgAbGroup::free(1) } else { FgAbGroup::trivial() };
            assert_eq!(cr.group, expected);
        }
    }

    #[test]
    fn additive_functor_is_linear() {
        let t = LibraryFunctor::additive(2);
        let c = PointedSetTuple::new(vec![2, 1]);
        for m in c.subtuples() {
            let expected = if m.count() == 1 { FgAbGroup::free(1) } else { FgAbGroup::trivial() };
            assert_eq!(cross_effect(&t, &c, &m).unwrap().group, expected);
        }
    }

    #[test]
    fn splitting_and_naturality_for_library_functors() {
        let ts = [
            LibraryFunctor::Functions(PointedSetTuple::new(vec![1, 1])),
            LibraryFunctor::mod_n(LibraryFunctor::tensor(LibraryFunctor::Linear(0), LibraryFunctor::additive(2)), 4),
            LibraryFunctor::reduced(LibraryFunctor::Functions(PointedSetTuple::new(vec![2, 0]))),
        ];
        let objs = downward_closure(&[PointedSetTuple::new(vec![2, 1])]);
        for t in &ts {
            for c in &objs {
                let r = check_splitting(t, c).unwrap();
                assert!(r.holds, "{t} at {c}: {r:?}");
            }
            for c in &objs {
                for d in &objs {
                    for f in GammaEMorphism::all(c, d) {
                        for n in d.subtuples() {
                            assert!(check_cross_effect_naturality(t, &f, &n).unwrap(), "{t} {f:?} {n:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bilinear_functor_is_concentrated_on_pairs() {
        let t = LibraryFunctor::tensor(LibraryFunctor::Linear(0), LibraryFunctor::Linear(1));
        let c = PointedSetTuple::new(vec![1, 1]);
        assert_eq!(full_cross_effect(&t, &c).unwrap().group, FgAbGroup::free(1));
        let c2 = PointedSetTuple::new(vec![2, 1]);
        assert_eq!(full_cross_effect(&t, &c2).unwrap().group, FgAbGroup::trivial());
    }
}
