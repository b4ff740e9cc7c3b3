//! The folding order on `J_E`.
//!
//! An elementary fold merges two edges at one labelled vertex: two edges
//! down to mute children, or the edge up to the parent mute vertex with an
//! edge down to a mute child. Longer folds are composites of these.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::enumerate::enumerate_trees_bounded;
use super::treej::{FlatTree, TreeJ};
use crate::error::{structural, Result};
use crate::group::Label;
use crate::homology::FinitePoset;

/// Default limit on `|E|` for materializing [`JPoset`].
pub const POSET_LABEL_LIMIT: usize = 5;

/// Mute vertices are named by the least label below them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FoldStep {
    /// Identify the mute children of `vertex` headed by `first` and `second`.
    MergeChildren { vertex: Label, first: Label, second: Label },
    /// Identify the mute child headed by `child` with the parent of `vertex`.
    IntoParent { vertex: Label, child: Label },
}

fn min_below(f: &FlatTree, m: usize) -> Label {
    let mut best = Label::MAX;
    for l in f.child_labels(m) {
        best = best.min(l);
        for k in f.child_mutes(l) {
            best = best.min(min_below(f, k));
        }
    }
    best
}

/// Every elementary fold of `t` with its result.
pub fn elementary_folds(t: &TreeJ) -> Vec<(FoldStep, TreeJ)> {
    let flat = t.to_flat();
    let mut out = Vec::new();
    for (&v, &parent) in &flat.label_parent {
        let kids = flat.child_mutes(v);
        for (a, &ka) in kids.iter().enumerate() {
            for &kb in &kids[a + 1..] {
                let mut g = flat.clone();
                g.merge_mutes(ka, kb);
                let (x, y) = (min_below(&flat, ka), min_below(&flat, kb));
                let step = FoldStep::MergeChildren {
                    vertex: v,
                    first: x.min(y),
                    second: x.max(y),
                };
                out.push((step, g.to_tree().expect("fold keeps tree axioms")));
            }
            let mut g = flat.clone();
            g.merge_mutes(parent, ka);
            let step = FoldStep::IntoParent {
                vertex: v,
                child: min_below(&flat, ka),
            };
            out.push((step, g.to_tree().expect("fold keeps tree axioms")));
        }
    }
    out
}

pub fn apply_fold(t: &TreeJ, step: FoldStep) -> Result<TreeJ> {
    elementary_folds(t)
        .into_iter()
        .find(|(s, _)| *s == step)
        .map(|(_, r)| r)
        .ok_or_else(|| structural(format!("fold {step:?} does not apply to {t}")))
}

/// `a <= b`: `a` is obtained from `b` by folding.
pub fn fold_leq(a: &TreeJ, b: &TreeJ) -> Result<bool> {
    if a.labels() != b.labels() {
        return Err(structural("trees over different label sets"));
    }
    // Each elementary fold removes exactly one mute vertex.
    let target = a.mute_count();
    let mut seen = HashSet::new();
    let mut stack = vec![b.clone()];
    while let Some(t) = stack.pop() {
        if t == *a {
            return Ok(true);
        }
        if t.mute_count() <= target || !seen.insert(t.clone()) {
            continue;
        }
        stack.extend(elementary_folds(&t).into_iter().map(|(_, r)| r));
    }
    Ok(false)
}

/// `J_E` as a finite poset.
#[derive(Clone, Debug)]
pub struct JPoset {
    labels: Vec<Label>,
    trees: Vec<TreeJ>,
    index: HashMap<TreeJ, usize>,
    poset: FinitePoset,
}

impl JPoset {
    pub fn new(labels: &[Label]) -> Result<Self> {
        Self::bounded(labels, POSET_LABEL_LIMIT)
    }

    pub fn bounded(labels: &[Label], limit: usize) -> Result<Self> {
        let trees = enumerate_trees_bounded(labels, limit)?;
        let index: HashMap<TreeJ, usize> = trees.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let mut covers = Vec::new();
        for (i, t) in trees.iter().enumerate() {
            for (_, r) in elementary_folds(t) {
                covers.push((index[&r], i));
            }
        }
        covers.sort_unstable();
        covers.dedup();
        let poset = FinitePoset::from_covers(trees.len(), &covers)?;
        let mut labels = labels.to_vec();
        labels.sort_unstable();
        Ok(JPoset {
            labels,
            trees,
            index,
            poset,
        })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn trees(&self) -> &[TreeJ] {
        &self.trees
    }

    pub fn tree(&self, i: usize) -> &TreeJ {
        &self.trees[i]
    }

    pub fn index_of(&self, t: &TreeJ) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }
}
