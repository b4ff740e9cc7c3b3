//! Polynomial degree tests on finite diagrams with idempotents.

use serde::Serialize;

use super::cross::{cross_effect_from, CrossEffect};
use super::gamma::{idempotent, PointedSetTuple, SubTuple};
use super::library::GammaFunctor;
use crate::error::Result;
use crate::homology::{AbPresentation, FgAbGroup, IntMatrix};

/// A finite family of objects, each with a value and the action of its
/// idempotents `d_{C,M}`. Sub-tuples are over the object's own shape.
pub trait IdempotentDiagram {
    fn object_count(&self) -> usize;
    fn shape(&self, c: usize) -> PointedSetTuple;
    fn describe(&self, c: usize) -> String;
    fn value(&self, c: usize) -> Result<AbPresentation>;
    fn idempotent_action(&self, c: usize, m: &SubTuple) -> Result<IntMatrix>;

    fn full_cross_effect(&self, c: usize) -> Result<CrossEffect> {
        let v = self.value(c)?;
        cross_effect_from(&v, &mut |u| self.idempotent_action(c, u), &self.shape(c).full())
    }
}

/// A `Γ^E` functor restricted to a list of objects.
pub struct GammaDiagram<'a> {
    pub functor: &'a dyn GammaFunctor,
    pub objects: Vec<PointedSetTuple>,
}

impl IdempotentDiagram for GammaDiagram<'_> {
    fn object_count(&self) -> usize {
        self.objects.len()
    }

    fn shape(&self, c: usize) -> PointedSetTuple {
        self.objects[c].clone()
    }

    fn describe(&self, c: usize) -> String {
        self.objects[c].to_string()
    }

    fn value(&self, c: usize) -> Result<AbPresentation> {
        self.functor.value(&self.objects[c])
    }

    fn idempotent_action(&self, c: usize, m: &SubTuple) -> Result<IntMatrix> {
        self.functor.act(&idempotent(&self.objects[c], m)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum DegreeVerdict {
    Yes,
    No { object: String, cross_effect: FgAbGroup },
    Undecided { reason: String },
}

/// `T(∅) = 0` and `cr(T)(C) = 0` for every object with more than `d`
/// slots. Undecided when the diagram has no empty object or no object
/// large enough to test.
pub fn polynomial_degree_at_most(diag: &dyn IdempotentDiagram, d: usize) -> Result<DegreeVerdict> {
    let mut saw_empty = false;
    let mut saw_large = false;
    for c in 0..diag.object_count() {
        let slots = diag.shape(c).slots();
        if slots == 0 {
            saw_empty = true;
            let v = diag.value(c)?.group();
            if !v.is_trivial() {
                return Ok(DegreeVerdict::No {
                    object: diag.describe(c),
                    cross_effect: v,
                });
            }
        } else if slots > d {
            saw_large = true;
            let cr = diag.full_cross_effect(c)?;
            if !cr.group.is_trivial() {
                return Ok(DegreeVerdict::No {
                    object: diag.describe(c),
                    cross_effect: cr.group,
                });
            }
        }
    }
    Ok(match (saw_empty, saw_large) {
        (true, true) => DegreeVerdict::Yes,
        (false, _) => DegreeVerdict::Undecided {
            reason: "diagram has no empty object".into(),
        },
        (true, false) => DegreeVerdict::Undecided {
            reason: format!("diagram has no object with more than {d} slots"),
        },
    })
}
