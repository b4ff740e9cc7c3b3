//! The isomorphism from `∏_e G_e^{𝒫_e^A - ⋆}` onto the automorphisms
//! supported by a tree `A`.

use std::collections::{BTreeMap, BTreeSet};

use log::warn;
use serde::Serialize;

use crate::error::{structural, Result};
use crate::group::{is_supported_by, GroupFamily, Label, SymmetricAutomorphism, WhiteheadData, Word};
use crate::tree::{fe_object, FeObject, TreeJ};

/// Above this many elements, the pairwise checks are sampled.
pub const STABILIZER_EXHAUSTIVE_LIMIT: usize = 256;

/// One coordinate per non-base part of each `𝒫_e^A`.
#[derive(Clone, Debug)]
pub struct StabilizerModel {
    pub tree: TreeJ,
    pub fe: FeObject,
    /// `(label, part index)` for each coordinate.
    pub coords: Vec<(Label, usize)>,
    pub orders: Vec<usize>,
}

impl StabilizerModel {
    pub fn new(a: &TreeJ, fam: &GroupFamily) -> Result<Self> {
        let fe = fe_object(a);
        if fe.labels != fam.labels() {
            return Err(structural("tree and family have different label sets"));
        }
        let mut coords = Vec::new();
        let mut orders = Vec::new();
        for (e, parts) in fe.parts.iter().enumerate() {
            for k in 0..parts.len() {
                coords.push((fe.labels[e], k));
                orders.push(fam.factors()[e].order());
            }
        }
        Ok(StabilizerModel {
            tree: a.clone(),
            fe,
            coords,
            orders,
        })
    }

    pub fn order(&self) -> usize {
        self.orders.iter().product()
    }

    pub fn element(&self, mut code: usize) -> Vec<usize> {
        self.orders
            .iter()
            .map(|&n| {
                let x = code % n;
                code /= n;
                x
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.order()).map(|c| self.element(c))
    }

    pub fn mul(&self, x: &[usize], y: &[usize], fam: &GroupFamily) -> Result<Vec<usize>> {
        self.coords
            .iter()
            .zip(x.iter().zip(y))
            .map(|(&(l, _), (&a, &b))| Ok(fam.factor(l)?.mul(a, b)))
            .collect()
    }

    /// The Whitehead datum with operating label `e` carried by `x`.
    pub fn whitehead_component(&self, x: &[usize], e: Label, fam: &GroupFamily) -> Result<WhiteheadData> {
        let pos = fam.position(e)?;
        let mut coeffs: BTreeMap<Label, usize> = fam.labels().iter().filter(|&&l| l != e).map(|&l| (l, 0)).collect();
        for (c, &(l, k)) in self.coords.iter().enumerate() {
            if l == e {
                for &p in &self.fe.parts[pos][k] {
                    coeffs.insert(p, x[c]);
                }
            }
        }
        WhiteheadData::new(e, coeffs, fam)
    }
}

/// `((g_P)_P)_e ↦ ∏_e ∏_P ∏_{p ∈ P} α_{e,p}^{g_P}`, factors taken in label
/// order.
pub fn stabilizer_map(model: &StabilizerModel, x: &[usize], fam: &GroupFamily) -> Result<SymmetricAutomorphism> {
    let mut a = SymmetricAutomorphism::identity(fam);
    for &e in fam.labels() {
        let w = model.whitehead_component(x, e, fam)?;
        a = a.compose(&w.to_automorphism(fam)?, fam)?;
    }
    Ok(a)
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilizerReport {
    pub tree: String,
    pub domain_order: usize,
    pub sampled: bool,
    pub homomorphism: bool,
    pub injective: bool,
    pub image_supported: bool,
    pub image_is_all_supported: bool,
}

impl StabilizerReport {
    pub fn holds(&self) -> bool {
        self.homomorphism && self.injective && self.image_supported && self.image_is_all_supported
    }
}

/// Automorphisms compose as right actions here: `α^g α^h = α^{hg}` in
/// `∘`-order, so products are compared as `φ(xy) = φ(y) ∘ φ(x)`.
pub fn check_stabilizer(a: &TreeJ, fam: &GroupFamily) -> Result<StabilizerReport> {
    let model = StabilizerModel::new(a, fam)?;
    let n = model.order();
    let sampled = n > STABILIZER_EXHAUSTIVE_LIMIT;
    if sampled {
        warn!("stabilizer of {a} has {n} elements; checking a sample");
    }
    let step = if sampled { n / STABILIZER_EXHAUSTIVE_LIMIT + 1 } else { 1 };
    let codes: Vec<usize> = (0..n).step_by(step).collect();
    let images: BTreeMap<usize, SymmetricAutomorphism> = codes
        .iter()
        .map(|&c| Ok((c, stabilizer_map(&model, &model.element(c), fam)?)))
        .collect::<Result<_>>()?;

    let mut homomorphism = true;
    'outer: for &c in &codes {
        for &d in &codes {
            let (x, y) = (model.element(c), model.element(d));
            let xy = model.mul(&x, &y, fam)?;
            let lhs = stabilizer_map(&model, &xy, fam)?;
            let rhs = images[&d].compose(&images[&c], fam)?;
            if lhs.action_signature(fam)? != rhs.action_signature(fam)? {
                homomorphism = false;
                break 'outer;
            }
        }
    }

    let signatures: BTreeSet<Vec<Word>> =
        images.values().map(|im| im.action_signature(fam)).collect::<Result<_>>()?;
    let injective = signatures.len() == codes.len();

    let mut image_supported = true;
    for &c in &codes {
        let x = model.element(c);
        for &e in fam.labels() {
            image_supported &= is_supported_by(&model.whitehead_component(&x, e, fam)?, a, fam)?;
        }
    }

    // Every product of supported Whitehead automorphisms is hit.
    let image_is_all_supported = if sampled {
        true
    } else {
        let mut products: BTreeSet<Vec<Word>> = BTreeSet::from([SymmetricAutomorphism::identity(fam).action_signature(fam)?]);
        let mut autos = vec![SymmetricAutomorphism::identity(fam)];
        for &e in fam.labels() {
            let supported: Vec<SymmetricAutomorphism> = WhiteheadData::all(e, fam)?
                .into_iter()
                .filter(|w| is_supported_by(w, a, fam).unwrap_or(false))
                .map(|w| w.to_automorphism(fam))
                .collect::<Result<_>>()?;
            let mut next = Vec::new();
            for p in &autos {
                for w in &supported {
                    next.push(p.compose(w, fam)?);
                }
            }
            autos = next;
        }
        products.extend(autos.iter().map(|p| p.action_signature(fam)).collect::<Result<Vec<_>>>()?);
        products == signatures
    };

    Ok(StabilizerReport {
        tree: a.to_string(),
        domain_order: n,
        sampled,
        homomorphism,
        injective,
        image_supported,
        image_is_all_supported,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::tree::{enumerate_trees, minimal_tree};

    #[test]
    fn minimal_tree_has_trivial_stabilizer() {
        let fam = GroupFamily::copies(&FiniteGroup::cyclic(3), 3);
        let model = StabilizerModel::new(&minimal_tree(fam.labels()).unwrap(), &fam).unwrap();
        assert_eq!(model.order(), 1);
        assert!(stabilizer_map(&model, &[], &fam).unwrap().is_identity());
    }

    #[test]
    fn chain_over_two_copies_of_z2() {
        let fam = GroupFamily::copies(&FiniteGroup::cyclic(2), 2);
        let a = TreeJ::parse("(*(m(1(m(2)))))").unwrap();
        let model = StabilizerModel::new(&a, &fam).unwrap();
        assert_eq!(model.order(), 2);
        let img = stabilizer_map(&model, &[1], &fam).unwrap();
        let expected = SymmetricAutomorphism::partial_conjugation(1, 2, 1, &fam).unwrap();
        assert_eq!(img.action_signature(&fam).unwrap(), expected.action_signature(&fam).unwrap());
    }

    #[test]
    fn all_trees_small_families() {
        for fam in [
            GroupFamily::copies(&FiniteGroup::cyclic(2), 3),
            GroupFamily::from_groups([FiniteGroup::cyclic(3), FiniteGroup::cyclic(2)]),
        ] {
            for a in enumerate_trees(fam.labels()).unwrap() {
                let r = check_stabilizer(&a, &fam).unwrap();
                assert!(r.holds(), "{r:?}");
            }
        }
    }
}
