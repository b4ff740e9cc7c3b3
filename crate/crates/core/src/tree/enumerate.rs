//! The elements of `J_E`.

use std::collections::{BTreeSet, HashMap};

use super::treej::{LabelledNode, MuteNode, TreeJ};
use crate::error::{check_bound, structural, Result};
use crate::group::Label;

/// Default limit on `|E|` for [`enumerate_trees`].
pub const TREE_LABEL_LIMIT: usize = 6;

/// `N_E`: one mute vertex carrying every label as a leaf.
pub fn minimal_tree(labels: &[Label]) -> Result<TreeJ> {
    if labels.is_empty() {
        return Err(structural("J_E is empty for E = ∅"));
    }
    TreeJ::from_top(MuteNode {
        children: labels
            .iter()
            .map(|&label| LabelledNode {
                label,
                children: Vec::new(),
            })
            .collect(),
    })
}

pub fn enumerate_trees(labels: &[Label]) -> Result<Vec<TreeJ>> {
    enumerate_trees_bounded(labels, TREE_LABEL_LIMIT)
}

/// All trees over `labels`, sorted.
pub fn enumerate_trees_bounded(labels: &[Label], limit: usize) -> Result<Vec<TreeJ>> {
    check_bound("number of tree labels", labels.len(), limit)?;
    if labels.is_empty() {
        return Err(structural("J_E is empty for E = ∅"));
    }
    let set: BTreeSet<Label> = labels.iter().copied().collect();
    if set.len() != labels.len() {
        return Err(structural("repeated label"));
    }
    let labels: Vec<Label> = set.into_iter().collect();
    let mut e = Enumerator {
        labels: &labels,
        mutes: HashMap::new(),
    };
    let all = (1u32 << labels.len()) - 1;
    let mut out: Vec<TreeJ> = e
        .mutes(all)
        .into_iter()
        .map(TreeJ::from_top)
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

struct Enumerator<'a> {
    labels: &'a [Label],
    mutes: HashMap<u32, Vec<MuteNode>>,
}

impl Enumerator<'_> {
    /// Mute vertices whose subtree carries exactly the labels in `s`.
    fn mutes(&mut self, s: u32) -> Vec<MuteNode> {
        if let Some(v) = self.mutes.get(&s) {
            return v.clone();
        }
        let mut out = Vec::new();
        // `l` is the set of labelled children; the other labels hang below them.
        for l in submasks(s).filter(|&l| l != 0) {
            let tops: Vec<usize> = bits(l).collect();
            let rest: Vec<usize> = bits(s & !l).collect();
            let k = tops.len();
            for code in 0..k.pow(rest.len() as u32) {
                let mut below = vec![0u32; k];
                let mut c = code;
                for &r in &rest {
                    below[c % k] |= 1 << r;
                    c /= k;
                }
                let mut acc: Vec<Vec<LabelledNode>> = vec![Vec::new()];
                for (t, &b) in tops.iter().zip(&below) {
                    let opts = self.labelled(*t, b);
                    acc = acc
                        .into_iter()
                        .flat_map(|prefix| {
                            opts.iter().map(move |o| {
                                let mut p = prefix.clone();
                                p.push(o.clone());
                                p
                            })
                        })
                        .collect();
                }
                out.extend(acc.into_iter().map(|children| MuteNode { children }));
            }
        }
        self.mutes.insert(s, out.clone());
        out
    }

    /// Labelled vertex `pos` whose descendants carry the labels in `below`.
    fn labelled(&mut self, pos: usize, below: u32) -> Vec<LabelledNode> {
        let label = self.labels[pos];
        let mut out = Vec::new();
        for blocks in set_partitions(below) {
            let mut acc: Vec<Vec<MuteNode>> = vec![Vec::new()];
            for b in blocks {
                let opts = self.mutes(b);
                acc = acc
                    .into_iter()
                    .flat_map(|prefix| {
                        opts.iter().map(move |o| {
                            let mut p = prefix.clone();
                            p.push(o.clone());
                            p
                        })
                    })
                    .collect();
            }
            out.extend(acc.into_iter().map(|children| LabelledNode { label, children }));
        }
        out
    }
}

fn bits(m: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| m >> i & 1 == 1)
}

/// All submasks of `m`, including `0` and `m`.
fn submasks(m: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(m);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}

/// Set partitions of the bits of `m` into nonempty blocks.
fn set_partitions(m: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let low = m & m.wrapping_neg();
    let rest = m & !low;
    let mut out = Vec::new();
    for extra in submasks(rest) {
        let block = low | extra;
        for mut p in set_partitions(rest & !extra) {
            p.insert(0, block);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::treej::FlatTree;
    use std::collections::BTreeMap;

    /// Brute force over parent arrays: with `k` mute vertices (mute 0 under
    /// the root), every label picks a mute parent and every other mute
    /// picks a labelled parent; keep the acyclic assignments without mute
    /// leaves and collect distinct trees.
    fn oracle(labels: &[Label]) -> BTreeSet<TreeJ> {
        let n = labels.len();
        let mut out = BTreeSet::new();
        for k in 1..=n {
            let lp_count = k.pow(n as u32);
            let mp_count = n.pow((k - 1) as u32);
            for a in 0..lp_count {
                let mut label_parent = BTreeMap::new();
                let mut c = a;
                for &l in labels {
                    label_parent.insert(l, c % k);
                    c /= k;
                }
                for b in 0..mp_count {
                    let mut mute_parent = vec![Some(None)];
                    let mut c = b;
                    for _ in 1..k {
                        mute_parent.push(Some(Some(labels[c % n])));
                        c /= n;
                    }
                    let flat = FlatTree {
                        mute_parent,
                        label_parent: label_parent.clone(),
                    };
                    if !reaches_root(&flat, labels) {
                        continue;
                    }
                    if (0..k).any(|m| flat.child_labels(m).is_empty()) {
                        continue;
                    }
                    out.insert(flat.to_tree().unwrap());
                }
            }
        }
        out
    }

    fn reaches_root(f: &FlatTree, labels: &[Label]) -> bool {
        labels.iter().all(|&l| {
            let mut cur = l;
            for _ in 0..=labels.len() {
                let m = f.label_parent[&cur];
                match f.mute_parent[m] {
                    Some(None) => return true,
                    Some(Some(p)) => cur = p,
                    None => return false,
                }
            }
            false
        })
    }

    #[test]
    fn enumeration_matches_oracle() {
        for n in 1..=4u32 {
            let labels: Vec<Label> = (1..=n).collect();
            let fast: BTreeSet<TreeJ> = enumerate_trees(&labels).unwrap().into_iter().collect();
            let slow = oracle(&labels);
            assert_eq!(fast, slow, "|E| = {n}");
        }
    }

    #[test]
    fn frozen_counts() {
        let counts: Vec<usize> = (1..=5u32)
            .map(|n| enumerate_trees(&(1..=n).collect::<Vec<_>>()).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 3, 19, 189, 2576]);
    }

    #[test]
    fn two_labels() {
        let t: Vec<String> = enumerate_trees(&[1, 2]).unwrap().iter().map(|t| t.to_string()).collect();
        let mut want = vec!["(*(m(1)(2)))", "(*(m(1(m(2)))))", "(*(m(2(m(1)))))"];
        want.sort();
        let mut got = t.clone();
        got.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn bounds_and_empty() {
        assert!(enumerate_trees(&[]).is_err());
        assert!(enumerate_trees(&[1, 2, 3, 4, 5, 6, 7]).is_err());
        assert!(minimal_tree(&[]).is_err());
        assert_eq!(minimal_tree(&[1]).unwrap().to_string(), "(*(m(1)))");
        assert_eq!(minimal_tree(&[2, 1]).unwrap().to_string(), "(*(m(1)(2)))");
    }

    #[test]
    fn partitions_are_bell_numbers() {
        let bell: Vec<usize> = (0..6).map(|n| set_partitions((1 << n) - 1).len()).collect();
        assert_eq!(bell, vec![1, 1, 2, 5, 15, 52]);
    }
}
