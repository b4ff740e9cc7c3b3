use std::fmt;

use super::finite::FiniteGroup;
use crate::error::{structural, Result};

/// Labels of free factors (and of tree vertices).
pub type Label = u32;

/// A finite family `(G_e)_{e in E}`, labels kept in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupFamily {
    labels: Vec<Label>,
    factors: Vec<FiniteGroup>,
}

impl GroupFamily {
    pub fn new(entries: impl IntoIterator<Item = (Label, FiniteGroup)>) -> Result<Self> {
        let mut entries: Vec<(Label, FiniteGroup)> = entries.into_iter().collect();
        entries.sort_by_key(|(l, _)| *l);
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(structural("duplicate label in group family"));
        }
        let (labels, factors) = entries.into_iter().unzip();
        Ok(GroupFamily { labels, factors })
    }

    /// Labels `1..=n` in the given order.
    pub fn from_groups(groups: impl IntoIterator<Item = FiniteGroup>) -> Self {
        Self::new(groups.into_iter().zip(1..).map(|(g, l)| (l, g))).expect("distinct labels")
    }

    /// `n` copies of `g`, labelled `1..=n`.
    pub fn copies(g: &FiniteGroup, n: usize) -> Self {
        Self::from_groups(std::iter::repeat_n(g.clone(), n))
    }

    pub fn empty() -> Self {
        GroupFamily {
            labels: Vec::new(),
            factors: Vec::new(),
        }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn factors(&self) -> &[FiniteGroup] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, label: Label) -> Result<usize> {
        self.labels
            .binary_search(&label)
            .map_err(|_| structural(format!("label {label} is not in the family")))
    }

    pub fn contains(&self, label: Label) -> bool {
        self.labels.binary_search(&label).is_ok()
    }

    pub fn factor(&self, label: Label) -> Result<&FiniteGroup> {
        Ok(&self.factors[self.position(label)?])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Label, &FiniteGroup)> {
        self.labels.iter().copied().zip(&self.factors)
    }

    /// Subfamily on the given labels.
    pub fn restrict(&self, labels: &[Label]) -> Result<Self> {
        let entries = labels
            .iter()
            .map(|&l| Ok((l, self.factor(l)?.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(l, g)| format!("{l}:{g}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}
