//! `H_*(J_E; T ∘ F_E)` against `⊕_{A ∈ 𝓕_E} cr(T)(F_E(A))`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::functor::{
    downward_closure, full_cross_effect, random_functor, GammaEMorphism, GammaFunctor, LibraryFunctor,
    PointedSetTuple, TabulatedFunctor,
};
use crate::group::{GroupFamily, Label};
use crate::homology::{poset_homology, AbPresentation, CoefficientSystem, FgAbGroup, IntMatrix};
use crate::tree::{fancy_f, fe_morphism_unchecked, fe_object, FeObject, JPoset};

/// `A ↦ T(F_E(A))` on `J_E`.
pub struct TreeCoefficients<'a> {
    functor: &'a dyn GammaFunctor,
    poset: &'a JPoset,
    fe: Vec<FeObject>,
}

impl<'a> TreeCoefficients<'a> {
    pub fn new(functor: &'a dyn GammaFunctor, poset: &'a JPoset) -> Self {
        let fe = poset.trees().iter().map(fe_object).collect();
        TreeCoefficients { functor, poset, fe }
    }

    fn morphism(&self, x: usize, y: usize) -> Result<GammaEMorphism> {
        fe_morphism_unchecked(&self.fe[x], &self.fe[y])
    }
}

impl CoefficientSystem for TreeCoefficients<'_> {
    fn value(&self, x: usize) -> AbPresentation {
        self.functor.value(&self.fe[x].tuple()).expect("coefficient value")
    }

    fn map(&self, x: usize, y: usize) -> IntMatrix {
        debug_assert!(self.poset.leq(x, y));
        let f = self.morphism(x, y).expect("fold morphism");
        self.functor.act(&f).expect("coefficient map")
    }
}

/// The shapes `F_E(A)` for `A ∈ J_E`, closed downwards.
pub fn fe_diagram_objects(labels: &[Label]) -> Result<Vec<PointedSetTuple>> {
    let p = JPoset::new(labels)?;
    let tops: Vec<PointedSetTuple> = p.trees().iter().map(|a| fe_object(a).tuple()).collect();
    Ok(downward_closure(&tops))
}

#[derive(Clone, Debug, Serialize)]
pub struct DecPiraReport {
    pub functor: String,
    pub labels: Vec<Label>,
    pub homology: Vec<FgAbGroup>,
    pub cross_effect_sum: FgAbGroup,
    pub h0_agrees: bool,
    pub higher_vanish: bool,
}

impl DecPiraReport {
    pub fn holds(&self) -> bool {
        self.h0_agrees && self.higher_vanish
    }
}

/// Runs the comparison after tabulating `t` on the diagram of `F_E` and
/// validating it.
pub fn dec_pira_check(labels: &[Label], t: &dyn GammaFunctor, name: &str, nmax: usize) -> Result<DecPiraReport> {
    let objects = fe_diagram_objects(labels)?;
    let tab = TabulatedFunctor::from_functor(t, objects)?;
    dec_pira_check_tabulated(labels, &tab, name, nmax)
}

pub fn dec_pira_check_tabulated(
    labels: &[Label],
    tab: &TabulatedFunctor,
    name: &str,
    nmax: usize,
) -> Result<DecPiraReport> {
    let p = JPoset::new(labels)?;
    let coeffs = TreeCoefficients::new(tab, &p);
    // Surface missing table entries as errors rather than panics.
    for x in 0..p.len() {
        tab.value(&coeffs.fe[x].tuple())?;
        for y in 0..p.len() {
            if p.leq(x, y) {
                tab.act(&coeffs.morphism(x, y)?)?;
            }
        }
    }
    let homology = poset_homology(p.poset(), &coeffs, nmax)?;
    let mut sum = FgAbGroup::trivial();
    for a in fancy_f(labels)? {
        sum = sum.direct_sum(&full_cross_effect(tab, &fe_object(&a).tuple())?.group);
    }
    let h0 = homology.first().cloned().ok_or_else(|| Error::Structural("no degrees computed".into()))?;
    Ok(DecPiraReport {
        functor: name.to_string(),
        labels: labels.to_vec(),
        h0_agrees: h0 == sum,
        higher_vanish: homology[1..].iter().all(FgAbGroup::is_trivial),
        homology,
        cross_effect_sum: sum,
    })
}

/// `trials` seeded random functors on `|E| = n`, plus the structured
/// coefficient `H_1 ∘ D_G` for `fam` when its size matches.
pub fn dec_pira_suite(n: usize, trials: usize, seed: u64, fam: Option<&GroupFamily>) -> Result<Vec<DecPiraReport>> {
    let labels: Vec<Label> = (1..=n as Label).collect();
    let nmax = n.saturating_sub(1).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..trials {
        let t = random_functor(&mut rng, n);
        out.push(dec_pira_check(&labels, &t, &t.to_string(), nmax)?);
    }
    if let Some(fam) = fam {
        let t = LibraryFunctor::h1_dg(fam)?;
        out.push(dec_pira_check(fam.labels(), &t, &format!("H_1 ∘ D_G for {fam}"), nmax)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    #[test]
    fn constant_z() {
        let r = dec_pira_check(&[1, 2], &LibraryFunctor::constant_z(), "Z", 1).unwrap();
        assert_eq!(r.homology[0], FgAbGroup::free(1));
        assert_eq!(r.cross_effect_sum, FgAbGroup::free(1));
        assert!(r.holds());
    }

    #[test]
    fn h1_dg_pair_of_z2() {
        let fam = GroupFamily::copies(&FiniteGroup::cyclic(2), 2);
        let r = dec_pira_check(fam.labels(), &LibraryFunctor::h1_dg(&fam).unwrap(), "H1DG", 1).unwrap();
        assert_eq!(r.cross_effect_sum, FgAbGroup::from_cyclic_orders(&[2.into(), 2.into()]));
        assert!(r.holds(), "{r:?}");
    }

    #[test]
    fn random_suite_small() {
        for r in dec_pira_suite(2, 8, 5, None).unwrap() {
            assert!(r.holds(), "{r:?}");
        }
    }
}
