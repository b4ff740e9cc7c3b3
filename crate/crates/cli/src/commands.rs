//! One function per subcommand, each producing reports.

use frstab::fr::{
    check_stabilizer, dec_pira_suite, fr_presentation, h1_fr_direct, h1_fr_formula_terms, stability_h1_table,
    FrH1Diagram, Report, FR_RELATION_FAMILIES,
};
use frstab::functor::{polynomial_degree_at_most, DegreeVerdict, IdempotentDiagram};
use frstab::group::{verify_relations, FiniteGroup, GroupFamily, Label};
use frstab::homology::{poset_homology, AbPresentation, ConstantCoefficients, FgAbGroup, MapKind};
use frstab::tree::{enumerate_trees, JPoset};
use frstab::{Error, Result};
use rayon::prelude::*;

use crate::output::Outcome;

/// Stability is claimed from `n >= 2i + 2` on; here `i = 1`.
const STABLE_FROM: usize = 4;

fn resolve_groups(specs: &[String]) -> Result<Vec<FiniteGroup>> {
    if specs.is_empty() {
        return Err(Error::Parse("no groups given".into()));
    }
    specs.iter().map(|s| FiniteGroup::resolve(s.trim())).collect()
}

fn family(specs: &[String]) -> Result<GroupFamily> {
    Ok(GroupFamily::from_groups(resolve_groups(specs)?))
}

pub fn trees(n: usize) -> Result<Outcome> {
    let labels: Vec<Label> = (1..=n as Label).collect();
    let mut out = Outcome::new("trees");
    let trees = enumerate_trees(&labels)?;
    let mut keys: Vec<String> = trees.iter().map(|t| t.canonical_key()).collect();
    keys.sort();
    keys.dedup();
    out.push(Report::new(
        "enumerated trees are pairwise distinct",
        format!("|E|={n}"),
        trees.len(),
        keys.len(),
        keys.len() == trees.len(),
    ));
    let p = JPoset::new(&labels)?;
    let axioms = p.poset().check_axioms();
    out.push(Report::new(
        "folding order is a partial order",
        format!("|E|={n}"),
        format!("{} trees", p.len()),
        axioms.as_ref().map_or_else(|e| e.to_string(), |_| "reflexive, antisymmetric, transitive".into()),
        axioms.is_ok(),
    ));
    let h = poset_homology(p.poset(), &ConstantCoefficients(AbPresentation::free(1)), n.max(1))?;
    let point = h[0] == FgAbGroup::free(1) && h[1..].iter().all(FgAbGroup::is_trivial);
    let shown: Vec<String> = h.iter().map(ToString::to_string).collect();
    out.push(Report::new(
        "order complex has the homology of a point",
        format!("|E|={n}"),
        shown.join(", "),
        "Z, 0, ...",
        point,
    ));
    Ok(out)
}

pub fn dec_pira(n: usize, trials: usize, seed: u64, groups: &[String]) -> Result<Outcome> {
    let fam = if groups.is_empty() { None } else { Some(family(groups)?) };
    let mut out = Outcome::new("dec-pira");
    for r in dec_pira_suite(n, trials, seed, fam.as_ref())? {
        let labels: Vec<String> = r.labels.iter().map(ToString::to_string).collect();
        let ok = r.holds();
        out.push(
            Report::new(
                "H_0 is the sum of cross effects over F_E; higher homology vanishes",
                format!("{} on E={{{}}}", r.functor, labels.join(",")),
                &r.homology[0],
                &r.cross_effect_sum,
                ok,
            )
            .with_witness(&r),
        );
    }
    Ok(out)
}

pub fn fr_h1(groups: &[String]) -> Result<Outcome> {
    let fam = family(groups)?;
    let mut out = Outcome::new("fr-h1");
    let pres = fr_presentation(&fam)?.abelianization();
    let pairs = h1_fr_direct(&fam);
    let (terms, formula) = h1_fr_formula_terms(&fam)?;
    out.push(Report::new(
        "abelianized presentation equals the sum over ordered pairs",
        fam.to_string(),
        &pres,
        &pairs,
        pres == pairs,
    ));
    out.push(
        Report::new(
            "abelianized presentation equals the cross-effect formula",
            fam.to_string(),
            &pres,
            &formula,
            pres == formula,
        )
        .with_witness(&terms),
    );
    Ok(out)
}

pub fn degree(groups: &[String], n: usize, degree: usize) -> Result<Outcome> {
    if n <= degree {
        return Err(Error::Parse(format!("--n {n} must exceed --degree {degree} to test anything")));
    }
    let mut out = Outcome::new("degree");
    for g in resolve_groups(groups)? {
        let d = FrH1Diagram::new(&g, n)?;
        let cross: Vec<(usize, String)> = (0..=n)
            .map(|k| Ok((k, d.full_cross_effect(k)?.group.to_string())))
            .collect::<Result<_>>()?;
        let verdict = polynomial_degree_at_most(&d, degree)?;
        let (lhs, ok) = match &verdict {
            DegreeVerdict::Yes => ("all vanish".to_string(), true),
            DegreeVerdict::No { object, cross_effect } => (format!("{cross_effect} at {object}"), false),
            DegreeVerdict::Undecided { reason } => (format!("undecided: {reason}"), false),
        };
        out.push(
            Report::new(
                format!("E -> H_1(FR) has degree at most {degree}"),
                format!("{}, |E| <= {n}", g.name()),
                lhs,
                format!("cross effects above {degree} slots vanish"),
                ok,
            )
            .with_witness(&cross),
        );
    }
    Ok(out)
}

pub fn stability(groups: &[String], max_n: usize) -> Result<Outcome> {
    let gs = resolve_groups(groups)?;
    let tables = gs.par_iter().map(|g| stability_h1_table(g, max_n)).collect::<Result<Vec<_>>>()?;
    let mut out = Outcome::new("stability");
    let mut csv = String::new();
    for t in &tables {
        for (k, r) in t.rows.iter().enumerate() {
            let Some(kind) = r.map_to_next else { continue };
            let next = &t.rows[k + 1];
            let report = Report::new(
                "H_1 map for G^{*n} -> G^{*(n+1)} is an isomorphism",
                format!("{}, n={}", t.group, r.n),
                format!("{} ({kind})", r.h1),
                &next.h1,
                kind == MapKind::Iso,
            );
            if r.n >= STABLE_FROM {
                out.push(report);
            } else {
                out.push_reference(report);
            }
        }
        let body = t.to_csv();
        csv.push_str(if csv.is_empty() { &body } else { body.split_once('\n').map_or("", |p| p.1) });
    }
    out.csv = Some(csv);
    Ok(out)
}

pub fn relations(groups: &[String]) -> Result<Outcome> {
    let fam = family(groups)?;
    let mut out = Outcome::new("relations");
    for r in verify_relations(&fam)? {
        let used = FR_RELATION_FAMILIES.contains(&(r.family, r.variant));
        let report = Report::new(
            format!("{:?} relations ({:?}) hold as automorphism identities", r.family, r.variant),
            fam.to_string(),
            format!("{} of {} fail", r.failures, r.instances),
            r.first_failure.clone().unwrap_or_else(|| "no counterexample".into()),
            r.holds(),
        )
        .with_witness(&r);
        if used {
            out.push(report);
        } else {
            out.push_reference(report);
        }
    }
    // Building the presentation re-checks every emitted relator.
    let fr = fr_presentation(&fam)?;
    out.push(Report::new(
        "emitted FR relators hold",
        fam.to_string(),
        format!("{} generators", fr.presentation.len()),
        format!("{} relators", fr.presentation.relators.len()),
        true,
    ));
    Ok(out)
}

pub fn stabilizers(groups: &[String]) -> Result<Outcome> {
    let fam = family(groups)?;
    let trees = enumerate_trees(fam.labels())?;
    let reports = trees.par_iter().map(|a| check_stabilizer(a, &fam)).collect::<Result<Vec<_>>>()?;
    let mut out = Outcome::new("stabilizers");
    for r in reports {
        let ok = r.holds();
        out.push(
            Report::new(
                "stabilizer map is an injective homomorphism onto the supported automorphisms",
                format!("{} at {}", fam, r.tree),
                format!("order {}{}", r.domain_order, if r.sampled { " (sampled)" } else { "" }),
                format!(
                    "homomorphism {}, injective {}, supported {}, onto {}",
                    r.homomorphism, r.injective, r.image_supported, r.image_is_all_supported
                ),
                ok,
            )
            .with_witness(&r),
        );
    }
    Ok(out)
}
