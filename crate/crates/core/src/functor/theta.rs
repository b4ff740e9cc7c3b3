use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{structural, Result};
use crate::group::Label;

/// A morphism of `Θ`: an injection from a subset `s(f)` of `source` into
/// `target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThetaMorphism {
    source: Vec<Label>,
    target: Vec<Label>,
    map: BTreeMap<Label, Label>,
}

impl ThetaMorphism {
    pub fn new(source: Vec<Label>, target: Vec<Label>, map: BTreeMap<Label, Label>) -> Result<Self> {
        let source = sorted_unique(source)?;
        let target = sorted_unique(target)?;
        let mut seen = BTreeSet::new();
        for (&a, &b) in &map {
            if source.binary_search(&a).is_err() {
                return Err(structural(format!("{a} is not in the source of the Θ-morphism")));
            }
            if target.binary_search(&b).is_err() {
                return Err(structural(format!("{b} is not in the target of the Θ-morphism")));
            }
            if !seen.insert(b) {
                return Err(structural(format!("Θ-morphism is not injective: {b} is hit twice")));
            }
        }
        Ok(ThetaMorphism { source, target, map })
    }

    pub fn identity(labels: &[Label]) -> Result<Self> {
        Self::new(labels.to_vec(), labels.to_vec(), labels.iter().map(|&l| (l, l)).collect())
    }

    /// The inclusion `source ⊂ target`.
    pub fn inclusion(source: &[Label], target: &[Label]) -> Result<Self> {
        Self::new(source.to_vec(), target.to_vec(), source.iter().map(|&l| (l, l)).collect())
    }

    /// The partial identity `source ⇀ keep`, defined on `keep`.
    pub fn restriction(source: &[Label], keep: &[Label]) -> Result<Self> {
        Self::new(source.to_vec(), keep.to_vec(), keep.iter().map(|&l| (l, l)).collect())
    }

    pub fn source(&self) -> &[Label] {
        &self.source
    }

    pub fn target(&self) -> &[Label] {
        &self.target
    }

    pub fn domain(&self) -> impl Iterator<Item = Label> + '_ {
        self.map.keys().copied()
    }

    pub fn apply(&self, l: Label) -> Option<Label> {
        self.map.get(&l).copied()
    }

    pub fn image(&self) -> BTreeSet<Label> {
        self.map.values().copied().collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ThetaMorphism) -> Result<ThetaMorphism> {
        if other.target != self.source {
            return Err(structural("composing Θ-morphisms with mismatched ends"));
        }
        let map = other
            .map
            .iter()
            .filter_map(|(&a, &b)| self.apply(b).map(|c| (a, c)))
            .collect();
        Self::new(other.source.clone(), self.target.clone(), map)
    }
}

fn sorted_unique(mut v: Vec<Label>) -> Result<Vec<Label>> {
    v.sort_unstable();
    if v.windows(2).any(|w| w[0] == w[1]) {
        return Err(structural("repeated label in a Θ object"));
    }
    Ok(v)
}
