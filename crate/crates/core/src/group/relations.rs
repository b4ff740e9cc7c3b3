//! Instances of the defining relations among partial conjugations, and
//! their verification as identities of automorphisms.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::automorphism::SymmetricAutomorphism;
use super::family::{GroupFamily, Label};
use crate::error::Result;

/// `α_{i,j}^g`. `i == j` only occurs in the printed third family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartialConj {
    pub i: Label,
    pub j: Label,
    pub g: usize,
}

impl PartialConj {
    pub fn new(i: Label, j: Label, g: usize) -> Self {
        PartialConj { i, j, g }
    }

    pub fn automorphism(&self, fam: &GroupFamily) -> Result<SymmetricAutomorphism> {
        SymmetricAutomorphism::partial_conjugation(self.i, self.j, self.g, fam)
    }
}

impl fmt::Display for PartialConj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{}]^{}", self.i, self.j, self.g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationFamily {
    /// `α^g_{i,j} ∘ α^{g'}_{i,j} = α^{g'g}_{i,j}`.
    SameArrow,
    /// Same operating factor, two different conjugated factors.
    SharedSource,
    /// `α^g_{i,j}` against the simultaneous conjugation of `G_j` and `G_i`
    /// by `h ∈ G_{i'}`.
    Triangle,
    /// Partial conjugations with disjoint index pairs.
    Disjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Transcribed literally.
    Printed,
    /// With the superscripts or the side condition repaired.
    Corrected,
    /// Not in the displayed list; needed for a presentation.
    Supplement,
}

/// One equation `lhs = rhs`, both sides composites read left to right
/// (the leftmost factor is applied last).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationInstance {
    pub family: RelationFamily,
    pub variant: Variant,
    pub lhs: Vec<PartialConj>,
    pub rhs: Vec<PartialConj>,
}

impl RelationInstance {
    fn evaluate(side: &[PartialConj], fam: &GroupFamily) -> Result<SymmetricAutomorphism> {
        let mut a = SymmetricAutomorphism::identity(fam);
        for x in side {
            a = a.compose(&x.automorphism(fam)?, fam)?;
        }
        Ok(a)
    }

    /// Compares both sides by their action on all single-letter words.
    pub fn holds(&self, fam: &GroupFamily) -> Result<bool> {
        let l = Self::evaluate(&self.lhs, fam)?;
        let r = Self::evaluate(&self.rhs, fam)?;
        Ok(l.action_signature(fam)? == r.action_signature(fam)?)
    }
}

impl fmt::Display for RelationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: &[PartialConj]| {
            if v.is_empty() {
                "id".to_string()
            } else {
                v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" o ")
            }
        };
        write!(f, "{} = {}", side(&self.lhs), side(&self.rhs))
    }
}

fn triples(fam: &GroupFamily) -> impl Iterator<Item = (Label, Label, Label)> + '_ {
    let ls = fam.labels();
    ls.iter().flat_map(move |&a| {
        ls.iter()
            .flat_map(move |&b| ls.iter().map(move |&c| (a, b, c)))
    })
}

/// Every instance of a family over all labels and all group elements
/// (identity elements included).
pub fn instances(fam: &GroupFamily, family: RelationFamily, variant: Variant) -> Result<Vec<RelationInstance>> {
    use RelationFamily::*;
    use Variant::*;
    let mut out = Vec::new();
    let mut push = |lhs: Vec<PartialConj>, rhs: Vec<PartialConj>| {
        out.push(RelationInstance {
            family,
            variant,
            lhs,
            rhs,
        })
    };
    let pc = PartialConj::new;
    match (family, variant) {
        (SameArrow, Printed | Corrected) => {
            for (i, gi) in fam.iter() {
                for &j in fam.labels().iter().filter(|&&j| j != i) {
                    for g in gi.elements() {
                        for h in gi.elements() {
                            push(vec![pc(i, j, g), pc(i, j, h)], vec![pc(i, j, gi.mul(h, g))]);
                        }
                    }
                }
            }
        }
        (SharedSource, Printed | Corrected) => {
            for (i, j, k) in triples(fam) {
                if i == j || i == k || j == k {
                    continue;
                }
                let gi = fam.factor(i)?;
                for g in gi.elements() {
                    for h in gi.elements() {
                        let rhs = if variant == Printed {
                            vec![pc(i, k, g), pc(i, j, h)]
                        } else {
                            vec![pc(i, k, h), pc(i, j, g)]
                        };
                        push(vec![pc(i, j, g), pc(i, k, h)], rhs);
                    }
                }
            }
        }
        (Triangle, Printed | Corrected) => {
            for (i, ip, j) in triples(fam) {
                // The printed side condition constrains a label absent from
                // the formula, so only i != i' and i != j are forced.
                let ok = match variant {
                    Printed => i != ip && i != j,
                    _ => i != ip && i != j && ip != j,
                };
                if !ok {
                    continue;
                }
                let (gi, gip) = (fam.factor(i)?, fam.factor(ip)?);
                for g in gi.elements() {
                    for h in gip.elements() {
                        let pair = [pc(ip, j, h), pc(ip, i, h)];
                        let mut lhs = vec![pc(i, j, g)];
                        lhs.extend(pair);
                        let mut rhs = pair.to_vec();
                        rhs.push(pc(i, j, g));
                        push(lhs, rhs);
                    }
                }
            }
        }
        (Disjoint, _) => {
            for (i, j, k) in triples(fam) {
                for &l in fam.labels() {
                    if i == j || k == l || i == k || i == l || j == k || j == l {
                        continue;
                    }
                    let (gi, gk) = (fam.factor(i)?, fam.factor(k)?);
                    for g in gi.elements() {
                        for h in gk.elements() {
                            push(vec![pc(i, j, g), pc(k, l, h)], vec![pc(k, l, h), pc(i, j, g)]);
                        }
                    }
                }
            }
        }
        _ => {}
    }
    Ok(out)
}

/// Verification outcome of one family/variant over a family of groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub family: RelationFamily,
    pub variant: Variant,
    pub instances: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

/// The variants examined for each family, in report order.
pub const VARIANTS: [(RelationFamily, Variant); 6] = [
    (RelationFamily::SameArrow, Variant::Printed),
    (RelationFamily::SharedSource, Variant::Printed),
    (RelationFamily::SharedSource, Variant::Corrected),
    (RelationFamily::Triangle, Variant::Printed),
    (RelationFamily::Triangle, Variant::Corrected),
    (RelationFamily::Disjoint, Variant::Supplement),
];

pub fn verify_family(fam: &GroupFamily, family: RelationFamily, variant: Variant) -> Result<RelationReport> {
    let all = instances(fam, family, variant)?;
    let mut failures = 0;
    let mut first_failure = None;
    for r in &all {
        if !r.holds(fam)? {
            failures += 1;
            first_failure.get_or_insert_with(|| r.to_string());
        }
    }
    Ok(RelationReport {
        family,
        variant,
        instances: all.len(),
        failures,
        first_failure,
    })
}

/// Reports for every entry of [`VARIANTS`]. The same-arrow family holds as
/// printed, so it has no corrected form.
pub fn verify_relations(fam: &GroupFamily) -> Result<Vec<RelationReport>> {
    VARIANTS.iter().map(|&(f, v)| verify_family(fam, f, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn report(fam: &GroupFamily, f: RelationFamily, v: Variant) -> RelationReport {
        verify_family(fam, f, v).unwrap()
    }

    #[test]
    fn which_variants_hold() {
        let fam = GroupFamily::from_groups([FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(2)]);
        assert!(report(&fam, RelationFamily::SameArrow, Variant::Printed).holds());
        assert!(!report(&fam, RelationFamily::SharedSource, Variant::Printed).holds());
        assert!(report(&fam, RelationFamily::SharedSource, Variant::Corrected).holds());
        assert!(!report(&fam, RelationFamily::Triangle, Variant::Printed).holds());
        assert!(report(&fam, RelationFamily::Triangle, Variant::Corrected).holds());
    }

    #[test]
    fn printed_triangle_fails_only_through_inner_conjugation() {
        let fam = GroupFamily::from_groups([FiniteGroup::cyclic(2), FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)]);
        for r in instances(&fam, RelationFamily::Triangle, Variant::Printed).unwrap() {
            let inner = r.lhs.iter().any(|x| x.i == x.j);
            let trivial = r.lhs.iter().any(|x| x.g == 0);
            if !inner || trivial {
                assert!(r.holds(&fam).unwrap(), "{r}");
            } else {
                assert!(!r.holds(&fam).unwrap(), "{r}");
            }
        }
    }

    #[test]
    fn disjoint_commutation_needs_four_labels() {
        let three = GroupFamily::copies(&FiniteGroup::cyclic(2), 3);
        assert_eq!(report(&three, RelationFamily::Disjoint, Variant::Supplement).instances, 0);
        let four = GroupFamily::from_groups([
            FiniteGroup::cyclic(2),
            FiniteGroup::cyclic(3),
            FiniteGroup::klein(),
            FiniteGroup::cyclic(4),
        ]);
        let r = report(&four, RelationFamily::Disjoint, Variant::Supplement);
        assert!(r.instances > 0 && r.holds());
    }
}
