//! Whitehead automorphisms with a fixed operating factor, and the support
//! condition relative to a tree.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::automorphism::{whitehead_generator, SymmetricAutomorphism};
use super::family::{GroupFamily, Label};
use crate::error::{structural, Result};
use crate::tree::TreeJ;

/// The automorphism conjugating each `G_i`, `i != ℓ`, by `g_{ℓ,i} ∈ G_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WhiteheadData {
    pub operating: Label,
    pub coefficients: BTreeMap<Label, usize>,
}

impl WhiteheadData {
    pub fn new(operating: Label, coefficients: BTreeMap<Label, usize>, fam: &GroupFamily) -> Result<Self> {
        let g = fam.factor(operating)?;
        let expected: BTreeSet<Label> = fam.labels().iter().copied().filter(|&l| l != operating).collect();
        let got: BTreeSet<Label> = coefficients.keys().copied().collect();
        if expected != got {
            return Err(structural("Whitehead coefficients must be indexed by E minus the operating label"));
        }
        if coefficients.values().any(|&x| x >= g.order()) {
            return Err(structural("Whitehead coefficient outside the operating factor"));
        }
        Ok(WhiteheadData {
            operating,
            coefficients,
        })
    }

    pub fn trivial(operating: Label, fam: &GroupFamily) -> Result<Self> {
        let c = fam.labels().iter().filter(|&&l| l != operating).map(|&l| (l, 0)).collect();
        Self::new(operating, c, fam)
    }

    /// Every coefficient assignment for the operating label.
    pub fn all(operating: Label, fam: &GroupFamily) -> Result<Vec<Self>> {
        let n = fam.factor(operating)?.order();
        let others: Vec<Label> = fam.labels().iter().copied().filter(|&l| l != operating).collect();
        let mut out = Vec::new();
        for code in 0..n.pow(others.len() as u32) {
            let mut c = code;
            let coefficients = others
                .iter()
                .map(|&l| {
                    let x = c % n;
                    c /= n;
                    (l, x)
                })
                .collect();
            out.push(WhiteheadData {
                operating,
                coefficients,
            });
        }
        Ok(out)
    }

    /// The product of the partial conjugations `α_{ℓ,i}^{g_{ℓ,i}}`, which
    /// pairwise commute.
    pub fn to_automorphism(&self, fam: &GroupFamily) -> Result<SymmetricAutomorphism> {
        let mut a = SymmetricAutomorphism::identity(fam);
        for (&i, &g) in &self.coefficients {
            a = a.compose(&whitehead_generator(self.operating, i, g, fam)?, fam)?;
        }
        Ok(a)
    }
}

/// Components of the tree with the vertex labelled `l` deleted; the flag
/// marks the component of the root.
pub fn components_without(a: &TreeJ, l: Label) -> Vec<(bool, BTreeSet<Label>)> {
    #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
    enum V {
        Root,
        Mute(usize),
        Lab(Label),
    }
    let flat = a.to_flat();
    let mut adj: BTreeMap<V, Vec<V>> = BTreeMap::new();
    let mut edge = |x: V, y: V| {
        adj.entry(x).or_default().push(y);
        adj.entry(y).or_default().push(x);
    };
    for (k, p) in flat.mute_parent.iter().enumerate() {
        match p {
            Some(None) => edge(V::Root, V::Mute(k)),
            Some(Some(q)) => edge(V::Lab(*q), V::Mute(k)),
            None => {}
        }
    }
    for (&x, &m) in &flat.label_parent {
        edge(V::Lab(x), V::Mute(m));
    }
    let mut seen: BTreeSet<V> = BTreeSet::from([V::Lab(l)]);
    let mut out = Vec::new();
    let starts: Vec<V> = std::iter::once(V::Root).chain(adj.keys().copied()).collect();
    for s in starts {
        if seen.contains(&s) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut queue = VecDeque::from([s]);
        seen.insert(s);
        while let Some(v) = queue.pop_front() {
            if let V::Lab(x) = v {
                comp.insert(x);
            }
            for &w in &adj[&v] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        out.push((s == V::Root, comp));
    }
    out
}

/// Coefficients are constant on each component of `A` minus the operating
/// vertex, and trivial on the component of the root.
pub fn is_supported_by(w: &WhiteheadData, a: &TreeJ, fam: &GroupFamily) -> Result<bool> {
    let tree_labels: Vec<Label> = a.labels().into_iter().collect();
    if tree_labels != fam.labels() {
        return Err(structural("tree and family have different label sets"));
    }
    for (root, comp) in components_without(a, w.operating) {
        let mut vals = comp.iter().map(|l| w.coefficients[l]);
        if root {
            if vals.any(|g| g != 0) {
                return Ok(false);
            }
        } else if let Some(first) = vals.next() {
            if vals.any(|g| g != first) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::tree::{enumerate_trees, minimal_tree};

    #[test]
    fn trivial_data_is_always_supported() {
        let fam = GroupFamily::copies(&FiniteGroup::cyclic(3), 3);
        for a in enumerate_trees(fam.labels()).unwrap() {
            for &l in fam.labels() {
                assert!(is_supported_by(&WhiteheadData::trivial(l, &fam).unwrap(), &a, &fam).unwrap());
            }
        }
    }

    #[test]
    fn minimal_tree_supports_only_trivial_data() {
        let fam = GroupFamily::copies(&FiniteGroup::cyclic(2), 3);
        let n = minimal_tree(fam.labels()).unwrap();
        for &l in fam.labels() {
            let supported: Vec<_> = WhiteheadData::all(l, &fam)
                .unwrap()
                .into_iter()
                .filter(|w| is_supported_by(w, &n, &fam).unwrap())
                .collect();
            assert_eq!(supported, vec![WhiteheadData::trivial(l, &fam).unwrap()]);
        }
    }

    #[test]
    fn chain_supports_any_coefficient_below() {
        let fam = GroupFamily::copies(&FiniteGroup::cyclic(3), 2);
        let c = TreeJ::parse("(*(m(1(m(2)))))").unwrap();
        for g in 0..3 {
            let w = WhiteheadData::new(1, BTreeMap::from([(2, g)]), &fam).unwrap();
            assert!(is_supported_by(&w, &c, &fam).unwrap());
            let w2 = WhiteheadData::new(2, BTreeMap::from([(1, g)]), &fam).unwrap();
            assert_eq!(is_supported_by(&w2, &c, &fam).unwrap(), g == 0);
        }
    }

    #[test]
    fn components_of_branching_tree() {
        let a = TreeJ::parse("(*(m(1(m(2)(3))(m(4)))))").unwrap();
        let mut comps = components_without(&a, 1);
        comps.sort();
        assert_eq!(
            comps,
            vec![(false, BTreeSet::from([2, 3])), (false, BTreeSet::from([4])), (true, BTreeSet::new())]
        );
    }

    #[test]
    fn validation() {
        let fam = GroupFamily::copies(&FiniteGroup::cyclic(2), 3);
        assert!(WhiteheadData::new(1, BTreeMap::from([(2, 1)]), &fam).is_err());
        assert!(WhiteheadData::new(1, BTreeMap::from([(2, 1), (3, 2)]), &fam).is_err());
        let other = GroupFamily::copies(&FiniteGroup::cyclic(2), 2);
        let a = minimal_tree(&[1, 2, 3]).unwrap();
        assert!(is_supported_by(&WhiteheadData::trivial(1, &other).unwrap(), &a, &other).is_err());
    }
}
