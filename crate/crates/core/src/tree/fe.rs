//! The functor `F_E : J_E -> (Γ^E)^op` and the subfamily `𝓕_E`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::enumerate::enumerate_trees;
use super::fold::fold_leq;
use super::treej::{MuteNode, TreeJ};
use crate::error::{structural, Error, Result};
use crate::functor::gamma::{GammaEMorphism, PointedSetTuple};
use crate::group::Label;

/// `(𝒫_e^A)_{e∈E}`: for each label, the components hanging below it
/// (each given by its label set, sorted by least label). The component of
/// the root is the basepoint and is not listed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FeObject {
    pub labels: Vec<Label>,
    pub parts: Vec<Vec<BTreeSet<Label>>>,
}

impl FeObject {
    pub fn tuple(&self) -> PointedSetTuple {
        PointedSetTuple::new(self.parts.iter().map(Vec::len).collect())
    }

    /// Index of the part at coordinate `e` containing label `x`, or `None`
    /// for the root component.
    pub fn part_of(&self, e: usize, x: Label) -> Option<usize> {
        self.parts[e].iter().position(|p| p.contains(&x))
    }
}

pub fn fe_object(a: &TreeJ) -> FeObject {
    let labels: Vec<Label> = a.labels().into_iter().collect();
    let mut parts = vec![Vec::new(); labels.len()];
    fn walk(m: &MuteNode, labels: &[Label], parts: &mut [Vec<BTreeSet<Label>>]) {
        for c in &m.children {
            let e = labels.binary_search(&c.label).unwrap();
            for k in &c.children {
                parts[e].push(k.labels());
                walk(k, labels, parts);
            }
        }
    }
    walk(a.top(), &labels, &mut parts);
    for p in &mut parts {
        p.sort_by_key(|s| *s.first().unwrap());
    }
    FeObject { labels, parts }
}

/// For `a <= a_prime`, the morphism `F_E(a') -> F_E(a)` sending each part
/// to the part of `a` containing it (the basepoint if it was folded into
/// the root component).
pub fn fe_morphism(a: &TreeJ, a_prime: &TreeJ) -> Result<GammaEMorphism> {
    if !fold_leq(a, a_prime)? {
        return Err(structural(format!("{a} is not below {a_prime}")));
    }
    fe_morphism_unchecked(&fe_object(a), &fe_object(a_prime))
}

/// As [`fe_morphism`], trusting the caller that the trees are comparable;
/// still fails if some part of `a'` is split between parts of `a`.
pub fn fe_morphism_unchecked(fa: &FeObject, fa_prime: &FeObject) -> Result<GammaEMorphism> {
    let maps = (0..fa.labels.len())
        .map(|e| {
            fa_prime.parts[e]
                .iter()
                .map(|p| {
                    let mut targets = p.iter().map(|&x| fa.part_of(e, x));
                    let first = targets.next().expect("parts are nonempty");
                    if targets.any(|t| t != first) {
                        return Err(Error::Validation(format!(
                            "part {p:?} at label {} is split by the fold",
                            fa.labels[e]
                        )));
                    }
                    Ok(first)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    GammaEMorphism::new(fa_prime.tuple(), fa.tuple(), maps)
}

/// Membership in `𝓕_E`: every mute vertex below the root's neighbour has
/// exactly two incident edges, i.e. one child.
pub fn fancy_f_membership(a: &TreeJ) -> bool {
    fn ok(m: &MuteNode, top: bool) -> bool {
        (top || m.children.len() == 1) && m.children.iter().flat_map(|c| &c.children).all(|k| ok(k, false))
    }
    ok(a.top(), true)
}

pub fn fancy_f(labels: &[Label]) -> Result<Vec<TreeJ>> {
    Ok(enumerate_trees(labels)?.into_iter().filter(fancy_f_membership).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{minimal_tree, JPoset};

    fn t(s: &str) -> TreeJ {
        TreeJ::parse(s).unwrap()
    }

    #[test]
    fn objects() {
        let n = fe_object(&minimal_tree(&[1, 2, 3]).unwrap());
        assert_eq!(n.tuple().sizes, vec![0, 0, 0]);
        let c = fe_object(&t("(*(m(1(m(2)))))"));
        assert_eq!(c.tuple().sizes, vec![1, 0]);
        assert_eq!(c.parts[0][0], BTreeSet::from([2]));
    }

    #[test]
    fn part_count_is_degree_minus_one() {
        for a in enumerate_trees(&[1, 2, 3, 4]).unwrap() {
            let f = fe_object(&a);
            let flat = a.to_flat();
            for (e, &l) in f.labels.iter().enumerate() {
                // edges at l: one to its parent plus one per mute child
                let degree = 1 + flat.child_mutes(l).len();
                assert_eq!(f.parts[e].len(), degree - 1);
            }
        }
    }

    #[test]
    fn fancy_f_examples() {
        assert!(fancy_f_membership(&minimal_tree(&[1, 2, 3]).unwrap()));
        assert!(fancy_f_membership(&t("(*(m(1(m(2)))))")));
        assert!(!fancy_f_membership(&t("(*(m(1(m(2)(3)))))")));
        // one tree per ordered pair plus N_E for two labels
        assert_eq!(fancy_f(&[1, 2]).unwrap().len(), 3);
    }

    #[test]
    fn chain_folded_to_minimum() {
        let n = minimal_tree(&[1, 2]).unwrap();
        let c = t("(*(m(1(m(2)))))");
        let f = fe_morphism(&n, &c).unwrap();
        assert_eq!(f.maps, vec![vec![None], vec![]]);
        assert!(fe_morphism(&c, &n).is_err());
        assert!(fe_morphism(&c, &c).unwrap().is_identity());
    }

    #[test]
    fn contravariant_functoriality() {
        for n in 1..=3u32 {
            let labels: Vec<Label> = (1..=n).collect();
            let j = JPoset::new(&labels).unwrap();
            let objs: Vec<FeObject> = j.trees().iter().map(fe_object).collect();
            for a in 0..j.len() {
                assert!(fe_morphism_unchecked(&objs[a], &objs[a]).unwrap().is_identity());
                for b in 0..j.len() {
                    if !j.leq(a, b) {
                        continue;
                    }
                    let ab = fe_morphism_unchecked(&objs[a], &objs[b]).unwrap();
                    for c in 0..j.len() {
                        if !j.leq(b, c) {
                            continue;
                        }
                        let bc = fe_morphism_unchecked(&objs[b], &objs[c]).unwrap();
                        let ac = fe_morphism_unchecked(&objs[a], &objs[c]).unwrap();
                        assert_eq!(ab.compose(&bc).unwrap(), ac);
                    }
                }
            }
        }
    }
}
