//! Presentations of `ΣAut(G) = FR(G) ⋊ aut(G)` and the stability table for
//! `H_1`.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::presentation::fr_presentation;
use crate::error::{check_bound, Error, Result};
use crate::group::{automorphism_group, FiniteGroup, GroupFamily, Label, PartialConj, SymmetricAutomorphism};
use crate::homology::{abelianization, h1_induced_map, FgAbGroup, GenWord, MapKind, Presentation, PresentationMap};

pub const STABILITY_MAX_N: usize = 6;
pub const STABILITY_MAX_ORDER: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SigmaGen {
    Alpha(PartialConj),
    /// A nontrivial automorphism of one factor, as a table.
    Factor { label: Label, table: Vec<usize> },
    /// Exchange of two factors with identical tables.
    Swap { a: Label, b: Label },
}

impl fmt::Display for SigmaGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaGen::Alpha(x) => write!(f, "{x}"),
            SigmaGen::Factor { label, table } => {
                let t: Vec<String> = table.iter().map(ToString::to_string).collect();
                write!(f, "t[{label}:{}]", t.join(","))
            }
            SigmaGen::Swap { a, b } => write!(f, "s[{a},{b}]"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SigmaAutPresentation {
    pub family: GroupFamily,
    pub generators: Vec<SigmaGen>,
    pub presentation: Presentation,
    index: HashMap<SigmaGen, usize>,
}

impl SigmaAutPresentation {
    pub fn generator_index(&self, g: &SigmaGen) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn h1(&self) -> FgAbGroup {
        abelianization(&self.presentation)
    }
}

/// Labels grouped by identical multiplication table.
pub fn table_classes(fam: &GroupFamily) -> Vec<Vec<Label>> {
    let mut classes: Vec<(Vec<Vec<usize>>, Vec<Label>)> = Vec::new();
    for (l, g) in fam.iter() {
        match classes.iter_mut().find(|(t, _)| t.as_slice() == g.table()) {
            Some((_, ls)) => ls.push(l),
            None => classes.push((g.table().to_vec(), vec![l])),
        }
    }
    classes.into_iter().map(|(_, ls)| ls).collect()
}

fn realize(g: &SigmaGen, fam: &GroupFamily) -> Result<SymmetricAutomorphism> {
    match g {
        SigmaGen::Alpha(x) => x.automorphism(fam),
        SigmaGen::Factor { label, table } => SymmetricAutomorphism::factor_automorphism(*label, table, fam),
        SigmaGen::Swap { a, b } => SymmetricAutomorphism::transposition(*a, *b, fam),
    }
}

/// FR generators and relators, the factor automorphisms, the
/// transpositions inside each class, and relators `x y x^{-1} = z` for
/// each `aut` generator `x` (transpositions act on everything, factor
/// automorphisms on FR and on factor automorphisms), with `z` found by
/// comparing automorphisms.
pub fn sigma_aut_presentation(fam: &GroupFamily) -> Result<SigmaAutPresentation> {
    let fr = fr_presentation(fam)?;
    let mut generators: Vec<SigmaGen> = fr.generators.iter().copied().map(SigmaGen::Alpha).collect();
    let fr_count = generators.len();
    for (l, g) in fam.iter() {
        let auts = automorphism_group(g)?;
        for t in auts.into_iter().skip(1) {
            generators.push(SigmaGen::Factor { label: l, table: t });
        }
    }
    for class in table_classes(fam) {
        for (k, &a) in class.iter().enumerate() {
            for &b in &class[k + 1..] {
                generators.push(SigmaGen::Swap { a, b });
            }
        }
    }
    let autos: Vec<SymmetricAutomorphism> = generators.iter().map(|g| realize(g, fam)).collect::<Result<_>>()?;
    let by_aut: HashMap<&SymmetricAutomorphism, usize> = autos.iter().enumerate().map(|(k, a)| (a, k)).collect();
    let lookup = |a: &SymmetricAutomorphism, what: &dyn Fn() -> String| -> Result<GenWord> {
        if a.is_identity() {
            return Ok(Vec::new());
        }
        by_aut
            .get(a)
            .map(|&k| vec![(k, 1)])
            .ok_or_else(|| Error::Verification(format!("{} is not a single generator", what())))
    };

    let mut relators = fr.presentation.relators.clone();
    // Multiplication tables of each Aut(G_e).
    let factor_gens: Vec<usize> = (fr_count..generators.len())
        .filter(|&k| matches!(generators[k], SigmaGen::Factor { .. }))
        .collect();
    for &x in &factor_gens {
        for &y in &factor_gens {
            let (SigmaGen::Factor { label: lx, .. }, SigmaGen::Factor { label: ly, .. }) = (&generators[x], &generators[y])
            else {
                unreachable!()
            };
            if lx != ly {
                continue;
            }
            let prod = autos[x].compose(&autos[y], fam)?;
            let z = lookup(&prod, &|| format!("{} ∘ {}", generators[x], generators[y]))?;
            let mut w = vec![(x, 1), (y, 1)];
            w.extend(z.into_iter().map(|(k, e)| (k, -e)));
            relators.push(w);
        }
    }
    for (k, g) in generators.iter().enumerate().skip(fr_count) {
        if matches!(g, SigmaGen::Swap { .. }) {
            relators.push(vec![(k, 2)]);
        }
    }
    // Action of aut(G) on every generator.
    for x in fr_count..generators.len() {
        for y in 0..generators.len() {
            // `t s t^{-1}` is not a generator; `s t s^{-1}` covers that pair.
            let skip = matches!((&generators[x], &generators[y]), (SigmaGen::Factor { .. }, SigmaGen::Swap { .. }));
            if x == y || skip {
                continue;
            }
            let c = autos[x].conjugate(&autos[y], fam)?;
            let z = lookup(&c, &|| format!("{} {} {}^-1", generators[x], generators[y], generators[x]))?;
            let mut w = vec![(x, 1), (y, 1), (x, -1)];
            w.extend(z.into_iter().map(|(k, e)| (k, -e)));
            relators.push(w);
        }
    }
    let names = generators.iter().map(ToString::to_string).collect();
    let index = generators.iter().cloned().enumerate().map(|(k, g)| (g, k)).collect();
    Ok(SigmaAutPresentation {
        family: fam.clone(),
        generators,
        presentation: Presentation::new(names, relators)?,
        index,
    })
}

/// `ΣAut(H) -> ΣAut(G)` for a sub-family: every generator keeps its name.
pub fn sigma_inclusion(sub: &SigmaAutPresentation, whole: &SigmaAutPresentation) -> Result<PresentationMap> {
    let images = sub
        .generators
        .iter()
        .map(|g| {
            whole
                .generator_index(g)
                .map(|k| vec![(k, 1)])
                .ok_or_else(|| Error::Structural(format!("{g} has no image in the larger family")))
        })
        .collect::<Result<Vec<_>>>()?;
    PresentationMap::new(sub.presentation.clone(), whole.presentation.clone(), images)
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityRow {
    pub n: usize,
    pub h1: FgAbGroup,
    /// Status of the map to the next row, if computed.
    pub map_to_next: Option<MapKind>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityTable {
    pub group: String,
    pub rows: Vec<StabilityRow>,
    pub truncated: bool,
}

impl StabilityTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("group,n,h1,map_to_next,iso\n");
        for r in &self.rows {
            let kind = r.map_to_next.map(|k| k.to_string()).unwrap_or_default();
            let iso = r.map_to_next.map(|k| (k == MapKind::Iso).to_string()).unwrap_or_default();
            out.push_str(&format!("{},{},{},{},{}\n", self.group, r.n, r.h1, kind, iso));
        }
        out
    }
}

/// `H_1(ΣAut(G^{*n}))` for `n` in `1..=max_n` and the maps induced by the
/// inclusions `G^{*n} -> G^{*(n+1)}`.
pub fn stability_h1_table(g: &FiniteGroup, max_n: usize) -> Result<StabilityTable> {
    check_bound("factor order for stability tables", g.order(), STABILITY_MAX_ORDER)?;
    check_bound("n for stability tables", max_n, STABILITY_MAX_N)?;
    let pres: Vec<SigmaAutPresentation> = (1..=max_n)
        .into_par_iter()
        .map(|n| sigma_aut_presentation(&GroupFamily::copies(g, n)))
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for (k, p) in pres.iter().enumerate() {
        let map_to_next = match pres.get(k + 1) {
            Some(q) => Some(h1_induced_map(&sigma_inclusion(p, q)?)?.kind()),
            None => None,
        };
        rows.push(StabilityRow {
            n: k + 1,
            h1: p.h1(),
            map_to_next,
        });
    }
    Ok(StabilityTable {
        group: g.name().to_string(),
        rows,
        truncated: false,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SubfamilyMap {
    pub sub: String,
    pub whole: String,
    pub h1_sub: FgAbGroup,
    pub h1_whole: FgAbGroup,
    pub kind: MapKind,
}

/// The map on `H_1` induced by a sub-family inclusion.
pub fn subfamily_h1_map(whole: &GroupFamily, keep: &[Label]) -> Result<SubfamilyMap> {
    let sub = whole.restrict(keep)?;
    let (ps, pw) = (sigma_aut_presentation(&sub)?, sigma_aut_presentation(whole)?);
    let h = h1_induced_map(&sigma_inclusion(&ps, &pw)?)?;
    Ok(SubfamilyMap {
        sub: sub.to_string(),
        whole: whole.to_string(),
        h1_sub: ps.h1(),
        h1_whole: pw.h1(),
        kind: h.kind(),
    })
}
