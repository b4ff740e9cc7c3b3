//! A finite presentation of the Fouxe-Rabinovitch group of a family.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{instances, GroupFamily, Label, PartialConj, RelationFamily, SymmetricAutomorphism, Variant};
use crate::homology::{abelianization, FgAbGroup, GenWord, Presentation, PresentationMap};

/// The relation families used for the presentation: the two lines of the
/// display that hold as printed or once repaired, and the disjoint
/// commutations.
pub const FR_RELATION_FAMILIES: [(RelationFamily, Variant); 4] = [
    (RelationFamily::SameArrow, Variant::Printed),
    (RelationFamily::SharedSource, Variant::Corrected),
    (RelationFamily::Triangle, Variant::Corrected),
    (RelationFamily::Disjoint, Variant::Supplement),
];

#[derive(Clone, Debug, Serialize)]
pub struct FrPresentation {
    pub labels: Vec<Label>,
    /// `α_{i,j}^g` for `i != j` and `g != 1`, in lexicographic order.
    pub generators: Vec<PartialConj>,
    pub presentation: Presentation,
    pub relator_families: Vec<RelationFamily>,
}

impl FrPresentation {
    pub fn generator_index(&self, x: &PartialConj) -> Option<usize> {
        self.generators.binary_search(x).ok()
    }

    pub fn abelianization(&self) -> FgAbGroup {
        abelianization(&self.presentation)
    }
}

pub fn fr_generators(fam: &GroupFamily) -> Vec<PartialConj> {
    let mut out = Vec::new();
    for (i, gi) in fam.iter() {
        for &j in fam.labels() {
            if i != j {
                out.extend(gi.nontrivial().map(|g| PartialConj::new(i, j, g)));
            }
        }
    }
    out.sort();
    out
}

/// Evaluates composites of partial conjugations, caching the generators.
pub struct AutEvaluator<'a> {
    fam: &'a GroupFamily,
    cache: HashMap<PartialConj, SymmetricAutomorphism>,
}

impl<'a> AutEvaluator<'a> {
    pub fn new(fam: &'a GroupFamily) -> Self {
        AutEvaluator {
            fam,
            cache: HashMap::new(),
        }
    }

    pub fn generator(&mut self, x: PartialConj) -> Result<&SymmetricAutomorphism> {
        if !self.cache.contains_key(&x) {
            let a = x.automorphism(self.fam)?;
            self.cache.insert(x, a);
        }
        Ok(&self.cache[&x])
    }

    /// `x_1 ∘ x_2 ∘ ... ∘ x_k`.
    pub fn evaluate(&mut self, side: &[PartialConj]) -> Result<SymmetricAutomorphism> {
        let mut a = SymmetricAutomorphism::identity(self.fam);
        for &x in side {
            let g = self.generator(x)?.clone();
            a = a.compose(&g, self.fam)?;
        }
        Ok(a)
    }

    pub fn sides_agree(&mut self, lhs: &[PartialConj], rhs: &[PartialConj]) -> Result<bool> {
        let l = self.evaluate(lhs)?;
        let r = self.evaluate(rhs)?;
        Ok(l.action_signature(self.fam)? == r.action_signature(self.fam)?)
    }
}

fn to_letters(fam: &GroupFamily, side: &[PartialConj], gens: &[PartialConj]) -> Result<GenWord> {
    let mut out = Vec::new();
    for x in side {
        if x.g == fam.factor(x.i)?.identity() {
            continue;
        }
        let k = gens.binary_search(x).map_err(|_| Error::Verification(format!("{x} is not a generator")))?;
        out.push((k, 1));
    }
    Ok(out)
}

/// Builds the presentation. Each relator is checked as an identity of
/// automorphisms (action on all single-letter words) before it is kept.
pub fn fr_presentation(fam: &GroupFamily) -> Result<FrPresentation> {
    let generators = fr_generators(fam);
    let names = generators.iter().map(ToString::to_string).collect();
    let mut eval = AutEvaluator::new(fam);
    let mut relators = Vec::new();
    let mut relator_families = Vec::new();
    let mut seen = BTreeSet::new();
    for (family, variant) in FR_RELATION_FAMILIES {
        for inst in instances(fam, family, variant)? {
            if !eval.sides_agree(&inst.lhs, &inst.rhs)? {
                return Err(Error::Verification(format!("relator {inst} does not hold")));
            }
            let mut w = to_letters(fam, &inst.lhs, &generators)?;
            w.extend(to_letters(fam, &inst.rhs, &generators)?.into_iter().rev().map(|(k, e)| (k, -e)));
            if w.is_empty() || !seen.insert(w.clone()) {
                continue;
            }
            relators.push(w);
            relator_families.push(family);
        }
    }
    Ok(FrPresentation {
        labels: fam.labels().to_vec(),
        generators,
        presentation: Presentation::new(names, relators)?,
        relator_families,
    })
}

/// `⊕_{i≠j} G_i^ab`.
pub fn h1_fr_direct(fam: &GroupFamily) -> FgAbGroup {
    let n = fam.len();
    let parts: Vec<FgAbGroup> = fam
        .factors()
        .iter()
        .flat_map(|g| std::iter::repeat_n(g.abelianization(), n.saturating_sub(1)))
        .collect();
    FgAbGroup::sum_all(&parts)
}

/// `FR(G) -> FR(G)` induced by `i_M ∘ r_M`: generators with both indices
/// in `keep` are fixed, the others are killed.
pub fn fr_idempotent(fr: &FrPresentation, keep: &BTreeSet<Label>) -> Result<PresentationMap> {
    let images = fr
        .generators
        .iter()
        .enumerate()
        .map(|(k, x)| if keep.contains(&x.i) && keep.contains(&x.j) { vec![(k, 1)] } else { Vec::new() })
        .collect();
    PresentationMap::new(fr.presentation.clone(), fr.presentation.clone(), images)
}

/// `FR(H) -> FR(G)` for a sub-family, extending by the identity.
pub fn fr_inclusion(sub: &FrPresentation, whole: &FrPresentation) -> Result<PresentationMap> {
    let images = sub
        .generators
        .iter()
        .map(|x| {
            whole
                .generator_index(x)
                .map(|k| vec![(k, 1)])
                .ok_or_else(|| Error::Structural(format!("{x} has no image in the larger family")))
        })
        .collect::<Result<Vec<_>>>()?;
    PresentationMap::new(sub.presentation.clone(), whole.presentation.clone(), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::homology::{h1_induced_map, IntMatrix, MapKind};

    #[test]
    fn two_copies_of_z2() {
        let fam = GroupFamily::copies(&FiniteGroup::cyclic(2), 2);
        let fr = fr_presentation(&fam).unwrap();
        assert_eq!(fr.generators.len(), 2);
        assert_eq!(fr.abelianization(), FgAbGroup::from_cyclic_orders(&[2.into(), 2.into()]));
    }

    #[test]
    fn three_copies_of_z3() {
        let fam = GroupFamily::copies(&FiniteGroup::cyclic(3), 3);
        let fr = fr_presentation(&fam).unwrap();
        assert_eq!(fr.abelianization(), FgAbGroup::from_cyclic_orders(&vec![3.into(); 6]));
        assert_eq!(fr.abelianization(), h1_fr_direct(&fam));
    }

    #[test]
    fn single_factor_is_trivial() {
        let fr = fr_presentation(&GroupFamily::copies(&FiniteGroup::symmetric3(), 1)).unwrap();
        assert!(fr.generators.is_empty());
        assert!(fr.abelianization().is_trivial());
    }

    #[test]
    fn mixed_pair() {
        let fam = GroupFamily::from_groups([FiniteGroup::cyclic(4), FiniteGroup::symmetric3()]);
        let expected = FgAbGroup::from_cyclic_orders(&[4.into(), 2.into()]);
        assert_eq!(fr_presentation(&fam).unwrap().abelianization(), expected);
    }

    #[test]
    fn inclusion_is_block_inclusion() {
        let g = FiniteGroup::cyclic(3);
        let whole = GroupFamily::copies(&g, 3);
        let sub = whole.restrict(&[1, 2]).unwrap();
        let (fs, fw) = (fr_presentation(&sub).unwrap(), fr_presentation(&whole).unwrap());
        let h = h1_induced_map(&fr_inclusion(&fs, &fw).unwrap()).unwrap();
        assert_eq!(h.kind(), MapKind::Mono);
        // Each generator of the smaller family goes to the generator with
        // the same name.
        for (k, x) in fs.generators.iter().enumerate() {
            let target = fw.generator_index(x).unwrap();
            for c in 0..fw.generators.len() {
                assert_eq!(h.matrix.get(k, c), &(if c == target { 1 } else { 0 }).into());
            }
        }
        let id = h1_induced_map(&fr_idempotent(&fw, &[1, 2, 3].into()).unwrap()).unwrap();
        assert!(fw.presentation.abelian_presentation().maps_equal_mod(&id.matrix, &IntMatrix::identity(12)));
    }
}
