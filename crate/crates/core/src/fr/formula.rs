//! `H_1(FR)` from cross effects: `⊕_{A ∈ 𝓕_E} cr(H_1 ∘ D_G)(F_E(A))`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::functor::{full_cross_effect, GammaFunctor, LibraryFunctor, PointedSetTuple};
use crate::group::GroupFamily;
use crate::homology::{group_homology_table, kunneth_h, FgAbGroup};
use crate::tree::{fancy_f, fe_object};

#[derive(Clone, Debug, Serialize)]
pub struct FormulaTerm {
    pub tree: String,
    pub object: PointedSetTuple,
    pub cross_effect: FgAbGroup,
}

/// The nonzero terms of the sum, and the total.
pub fn h1_fr_formula_terms(fam: &GroupFamily) -> Result<(Vec<FormulaTerm>, FgAbGroup)> {
    if fam.is_empty() {
        return Ok((Vec::new(), FgAbGroup::trivial()));
    }
    let t = LibraryFunctor::h1_dg(fam)?;
    let tables = fam
        .factors()
        .iter()
        .map(|g| group_homology_table(g, 1))
        .collect::<Result<Vec<_>>>()?;
    let mut terms = Vec::new();
    let mut total = FgAbGroup::trivial();
    for a in fancy_f(fam.labels())? {
        let c = fe_object(&a).tuple();
        // The tabulated value must be H_1 of the product by Künneth.
        let copies: Vec<Vec<FgAbGroup>> = c
            .sizes
            .iter()
            .enumerate()
            .flat_map(|(e, &n)| std::iter::repeat_n(tables[e].clone(), n))
            .collect();
        let kunneth = kunneth_h(&copies, 1)?;
        if t.value(&c)?.group() != kunneth {
            return Err(Error::Verification(format!("H_1 ∘ D_G at {c} disagrees with the Künneth formula")));
        }
        let cr = full_cross_effect(&t, &c)?.group;
        total = total.direct_sum(&cr);
        if !cr.is_trivial() {
            terms.push(FormulaTerm {
                tree: a.to_string(),
                object: c,
                cross_effect: cr,
            });
        }
    }
    Ok((terms, total))
}

pub fn h1_fr_formula(fam: &GroupFamily) -> Result<FgAbGroup> {
    Ok(h1_fr_formula_terms(fam)?.1)
}
