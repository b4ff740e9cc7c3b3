//! `J_f : J_E -> J_{E'}` for a Θ-morphism `f : E ⇀ E'`.

use std::collections::BTreeMap;

use super::treej::{FlatTree, TreeJ};
use crate::error::{structural, Result};
use crate::functor::theta::ThetaMorphism;

/// Folds every vertex labelled outside `s(f)` onto a single edge, cuts
/// those labels (and the mute vertices left childless), relabels through
/// `f`, and hangs the labels outside the image of `f` under the root's
/// mute neighbour.
pub fn jf_map(f: &ThetaMorphism, a: &TreeJ) -> Result<TreeJ> {
    let labels: Vec<_> = a.labels().into_iter().collect();
    if labels != f.source() {
        return Err(structural("the Θ-morphism's source is not the tree's label set"));
    }
    let mut flat = a.to_flat();
    let dropped: Vec<_> = labels.iter().copied().filter(|&l| f.apply(l).is_none()).collect();
    for &v in &dropped {
        let parent = flat.label_parent[&v];
        for k in flat.child_mutes(v) {
            flat.merge_mutes(parent, k);
        }
    }
    for v in &dropped {
        flat.label_parent.remove(v);
    }
    for k in 1..flat.mute_parent.len() {
        if flat.mute_parent[k].is_some() && flat.child_labels(k).is_empty() {
            flat.mute_parent[k] = None;
        }
    }
    let relabel = |l| f.apply(l).expect("dropped labels were removed");
    let mut out = FlatTree {
        mute_parent: flat
            .mute_parent
            .iter()
            .map(|p| p.map(|q| q.map(relabel)))
            .collect(),
        label_parent: flat.label_parent.iter().map(|(&l, &m)| (relabel(l), m)).collect::<BTreeMap<_, _>>(),
    };
    let image = f.image();
    for &l in f.target() {
        if !image.contains(&l) {
            out.label_parent.insert(l, 0);
        }
    }
    if out.label_parent.is_empty() {
        return Err(structural("J_f would produce a tree over the empty set"));
    }
    out.to_tree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Label;
    use crate::tree::{enumerate_trees, fold_leq, minimal_tree};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn t(s: &str) -> TreeJ {
        TreeJ::parse(s).unwrap()
    }

    #[test]
    fn recipe_examples() {
        let c = t("(*(m(1(m(2)))))");
        let id = ThetaMorphism::identity(&[1, 2]).unwrap();
        assert_eq!(jf_map(&id, &c).unwrap(), c);
        let inc = ThetaMorphism::inclusion(&[1, 2], &[1, 2, 3]).unwrap();
        assert_eq!(jf_map(&inc, &minimal_tree(&[1, 2]).unwrap()).unwrap(), minimal_tree(&[1, 2, 3]).unwrap());
        let forget = ThetaMorphism::restriction(&[1, 2], &[1]).unwrap();
        assert_eq!(jf_map(&forget, &c).unwrap().to_string(), "(*(m(1)))");
        // forgetting the middle vertex of a chain lifts its subtree
        let long = t("(*(m(1(m(2(m(3)))))))");
        let f = ThetaMorphism::restriction(&[1, 2, 3], &[1, 3]).unwrap();
        assert_eq!(jf_map(&f, &long).unwrap().to_string(), "(*(m(1(m(3)))))");
        let empty = ThetaMorphism::restriction(&[1, 2], &[]).unwrap();
        assert!(jf_map(&empty, &c).is_err());
    }

    fn random_theta(rng: &mut ChaCha8Rng, source: &[Label], target: &[Label]) -> ThetaMorphism {
        let mut tgt = target.to_vec();
        tgt.shuffle(rng);
        let map = source
            .iter()
            .zip(tgt)
            .filter(|_| rng.gen_bool(0.75))
            .map(|(&a, b)| (a, b))
            .collect();
        ThetaMorphism::new(source.to_vec(), target.to_vec(), map).unwrap()
    }

    #[test]
    fn monotone_and_functorial() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let e: Vec<Label> = vec![1, 2, 3];
        let e1: Vec<Label> = vec![1, 2, 3, 4];
        let e2: Vec<Label> = vec![2, 3, 5];
        let trees = enumerate_trees(&e).unwrap();
        for _ in 0..40 {
            let f = random_theta(&mut rng, &e, &e1);
            let g = random_theta(&mut rng, &e1, &e2);
            let gf = g.compose(&f).unwrap();
            for a in &trees {
                let fa = jf_map(&f, a).unwrap();
                if gf.domain().count() > 0 || e2.iter().any(|l| !gf.image().contains(l)) {
                    assert_eq!(jf_map(&gf, a).unwrap(), jf_map(&g, &fa).unwrap(), "{a}");
                }
                for b in &trees {
                    if fold_leq(a, b).unwrap() {
                        assert!(fold_leq(&fa, &jf_map(&f, b).unwrap()).unwrap());
                    }
                }
            }
        }
    }
}
