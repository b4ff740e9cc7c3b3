//! `E ↦ H_1(FR(G^{*E}))` as a diagram with idempotents, for degree tests.

use std::collections::BTreeSet;

use super::presentation::{fr_idempotent, fr_presentation, FrPresentation};
use crate::error::Result;
use crate::functor::{IdempotentDiagram, PointedSetTuple, SubTuple};
use crate::group::{FiniteGroup, GroupFamily, Label};
use crate::homology::{h1_induced_map, AbPresentation, IntMatrix};

/// Objects are `{1..k}` for `k = 0..=max`; `d_M` acts through the
/// presentation map fixing the generators indexed inside `M`.
pub struct FrH1Diagram {
    group: FiniteGroup,
    presentations: Vec<FrPresentation>,
}

impl FrH1Diagram {
    pub fn new(g: &FiniteGroup, max: usize) -> Result<Self> {
        let presentations = (0..=max)
            .map(|k| fr_presentation(&GroupFamily::copies(g, k)))
            .collect::<Result<_>>()?;
        Ok(FrH1Diagram {
            group: g.clone(),
            presentations,
        })
    }
}

impl IdempotentDiagram for FrH1Diagram {
    fn object_count(&self) -> usize {
        self.presentations.len()
    }

    fn shape(&self, c: usize) -> PointedSetTuple {
        PointedSetTuple::new(vec![c])
    }

    fn describe(&self, c: usize) -> String {
        format!("{}^*{c}", self.group.name())
    }

    fn value(&self, c: usize) -> Result<AbPresentation> {
        Ok(self.presentations[c].presentation.abelian_presentation())
    }

    fn idempotent_action(&self, c: usize, m: &SubTuple) -> Result<IntMatrix> {
        let keep: BTreeSet<Label> = (0..c).filter(|&k| m.contains(0, k)).map(|k| k as Label + 1).collect();
        Ok(h1_induced_map(&fr_idempotent(&self.presentations[c], &keep)?)?.matrix)
    }
}
