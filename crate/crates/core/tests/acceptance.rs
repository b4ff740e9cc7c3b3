//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the output.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use frstab::fr::{
    dec_pira_suite, fr_presentation, h1_fr_formula, stability_h1_table, subfamily_h1_map, FrH1Diagram,
    StabilizerReport,
};
use frstab::functor::IdempotentDiagram;
use frstab::group::{FiniteGroup, GroupFamily, PartialConj, SymmetricAutomorphism};
use frstab::homology::{poset_homology, snf, ConstantCoefficients, AbPresentation, FgAbGroup, IntMatrix, MapKind};
use frstab::tree::{enumerate_trees, JPoset, TreeJ};

const SEED: u64 = 20_240_601;

struct Outcome {
    ok: bool,
    detail: String,
}

fn run(n: usize, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let ok = out.ok && in_time;
    println!(
        "{} criterion {n}: {name} [{:.2}s / limit {}s]{}{}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs(),
        if in_time { "" } else { " (over time)" },
        if out.detail.is_empty() { String::new() } else { format!(" - {}", out.detail) }
    );
    ok
}

// ---------------------------------------------------------------------
// 1. Trees

/// Brute force over parent arrays: mute 0 hangs from the root, mute k > 0
/// from a label, each label from a mute; keep connected, leafless shapes
/// and render them in the text format.
fn oracle_trees(n: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for k in 1..=n {
        let mute_choices = n.pow((k - 1) as u32);
        let label_choices = k.pow(n as u32);
        for mc in 0..mute_choices {
            let mut mute_parent = vec![usize::MAX; k];
            let mut c = mc;
            for m in mute_parent.iter_mut().skip(1) {
                *m = c % n;
                c /= n;
            }
            for lc in 0..label_choices {
                let mut label_parent = vec![0; n];
                let mut c = lc;
                for l in label_parent.iter_mut() {
                    *l = c % k;
                    c /= k;
                }
                if let Some(s) = render(&mute_parent, &label_parent) {
                    out.insert(TreeJ::parse(&s).expect("oracle output parses").canonical_key());
                }
            }
        }
    }
    out
}

fn render(mute_parent: &[usize], label_parent: &[usize]) -> Option<String> {
    let k = mute_parent.len();
    if (0..k).any(|m| !label_parent.contains(&m)) {
        return None;
    }
    // Every mute must reach mute 0 without cycles.
    for start in 0..k {
        let (mut m, mut steps) = (start, 0);
        while m != 0 {
            m = label_parent[mute_parent[m]];
            steps += 1;
            if steps > k {
                return None;
            }
        }
    }
    fn mute(m: usize, mp: &[usize], lp: &[usize]) -> String {
        let mut s = String::from("(m");
        for (l, &p) in lp.iter().enumerate() {
            if p == m {
                s.push_str(&format!("({}", l + 1));
                for (c, &q) in mp.iter().enumerate() {
                    if c != 0 && q == l {
                        s.push_str(&mute(c, mp, lp));
                    }
                }
                s.push(')');
            }
        }
        s.push(')');
        s
    }
    Some(format!("(*{})", mute(0, mute_parent, label_parent)))
}

fn criterion_trees() -> Outcome {
    const FROZEN: [usize; 4] = [1, 3, 19, 189];
    let mut problems = Vec::new();
    for n in 1..=4 {
        let labels: Vec<u32> = (1..=n as u32).collect();
        let trees = enumerate_trees(&labels).unwrap();
        let ours: BTreeSet<String> = trees.iter().map(TreeJ::canonical_key).collect();
        let oracle = oracle_trees(n);
        if ours != oracle || ours.len() != FROZEN[n - 1] || trees.len() != ours.len() {
            problems.push(format!("|E|={n}: {} trees, oracle {}", ours.len(), oracle.len()));
            continue;
        }
        let p = JPoset::new(&labels).unwrap();
        if p.poset().check_axioms().is_err() {
            problems.push(format!("|E|={n}: order axioms"));
        }
        let h = poset_homology(p.poset(), &ConstantCoefficients(AbPresentation::free(1)), n).unwrap();
        if h[0] != FgAbGroup::free(1) || h[1..].iter().any(|g| !g.is_trivial()) {
            problems.push(format!("|E|={n}: homology {h:?}"));
        }
    }
    Outcome {
        ok: problems.is_empty(),
        detail: if problems.is_empty() { "counts 1, 3, 19, 189".into() } else { problems.join("; ") },
    }
}

// ---------------------------------------------------------------------
// 2. Decomposition of H_0

fn criterion_dec_pira() -> Outcome {
    let mut total = 0;
    let mut failures = Vec::new();
    let fams = [
        GroupFamily::copies(&FiniteGroup::cyclic(2), 2),
        GroupFamily::from_groups([FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4)]),
    ];
    for (n, fam) in [(2, &fams[0]), (3, &fams[1])] {
        let reports = dec_pira_suite(n, 20, SEED + n as u64, Some(fam)).unwrap();
        total += reports.len();
        failures.extend(reports.iter().filter(|r| !r.holds()).map(|r| format!("{}: {:?}", r.functor, r.homology)));
    }
    Outcome {
        ok: failures.is_empty() && total >= 42,
        detail: if failures.is_empty() { format!("{total} functors") } else { failures.join("; ") },
    }
}

// ---------------------------------------------------------------------
// 3. H_1(FR)

/// `|G^ab| = |G| / |[G,G]|`, with `[G,G]` closed up by brute force.
fn abelianization_order(g: &FiniteGroup) -> usize {
    let mut sub: BTreeSet<usize> = BTreeSet::from([g.identity()]);
    for a in g.elements() {
        for b in g.elements() {
            sub.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
        }
    }
    loop {
        let next: BTreeSet<usize> = sub.iter().flat_map(|&a| sub.iter().map(move |&b| (a, b))).map(|(a, b)| g.mul(a, b)).collect();
        if next == sub {
            break;
        }
        sub = next;
    }
    g.order() / sub.len()
}

fn criterion_fr_h1() -> Outcome {
    // Cyclic decompositions of the abelianizations, checked against the
    // commutator-subgroup orders below.
    let pool: [(&str, Vec<u64>); 5] = [
        ("Z2", vec![2]),
        ("Z3", vec![3]),
        ("Z4", vec![4]),
        ("Z2xZ2", vec![2, 2]),
        ("S3", vec![2]),
    ];
    let groups: Vec<FiniteGroup> = pool.iter().map(|(n, _)| FiniteGroup::builtin(n).unwrap()).collect();
    for (g, (_, orders)) in groups.iter().zip(&pool) {
        assert_eq!(abelianization_order(g) as u64, orders.iter().product::<u64>());
    }
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 1..=4usize {
        // Multisets of size n from the pool.
        let mut idx = vec![0usize; n];
        loop {
            let fam = GroupFamily::from_groups(idx.iter().map(|&i| groups[i].clone()));
            let expected_orders: Vec<BigInt> = idx
                .iter()
                .flat_map(|&i| pool[i].1.iter().map(|&o| BigInt::from(o)).cycle().take(pool[i].1.len() * (n - 1)))
                .collect();
            let expected = FgAbGroup::from_cyclic_orders(&expected_orders);
            let pres = fr_presentation(&fam).unwrap().abelianization();
            let formula = h1_fr_formula(&fam).unwrap();
            if pres != expected || formula != expected {
                failures.push(format!("{fam}: presentation {pres}, formula {formula}, expected {expected}"));
            }
            checked += 1;
            // Next non-decreasing index sequence.
            let Some(p) = (0..n).rev().find(|&p| idx[p] + 1 < pool.len()) else { break };
            let v = idx[p] + 1;
            for q in idx.iter_mut().skip(p) {
                *q = v;
            }
        }
    }
    Outcome {
        ok: failures.is_empty() && checked == 5 + 15 + 35 + 70,
        detail: if failures.is_empty() { format!("{checked} families") } else { failures.join("; ") },
    }
}

// ---------------------------------------------------------------------
// 4. Degree bound

fn criterion_degree() -> Outcome {
    let mut failures = Vec::new();
    for name in ["Z2", "Z3", "Z4", "V4"] {
        let g = FiniteGroup::builtin(name).unwrap();
        let d = FrH1Diagram::new(&g, 3).unwrap();
        let cr = d.full_cross_effect(3).unwrap().group;
        if !cr.is_trivial() {
            failures.push(format!("{name}: {cr}"));
        }
    }
    Outcome {
        ok: failures.is_empty(),
        detail: if failures.is_empty() { "Z2, Z3, Z4, Z2xZ2".into() } else { failures.join("; ") },
    }
}

// ---------------------------------------------------------------------
// 5. Stability

const FROZEN_STABILITY: &str = include_str!("data/stability_h1.csv");

fn criterion_stability() -> Outcome {
    let mut csv = String::new();
    let mut failures = Vec::new();
    for name in ["Z2", "Z3"] {
        let t = stability_h1_table(&FiniteGroup::builtin(name).unwrap(), 6).unwrap();
        for r in &t.rows {
            if r.n >= 4 && r.map_to_next.is_some_and(|k| k != MapKind::Iso) {
                failures.push(format!("{name} n={} map {:?}", r.n, r.map_to_next));
            }
        }
        let body = t.to_csv();
        csv.push_str(if csv.is_empty() { &body } else { body.split_once('\n').unwrap().1 });
    }
    if csv != FROZEN_STABILITY {
        failures.push(format!("table differs from frozen artifact:\n{csv}"));
    }
    // Five copies of Z/2 and one Z/3, against four copies and the Z/3: the
    // shrunken orbit has 4 >= 2i+2 elements, the other orbit is whole.
    let z2 = FiniteGroup::cyclic(2);
    let whole = GroupFamily::from_groups([z2.clone(), z2.clone(), z2.clone(), z2.clone(), z2, FiniteGroup::cyclic(3)]);
    let m = subfamily_h1_map(&whole, &[1, 2, 3, 4, 6]).unwrap();
    if m.kind != MapKind::Iso {
        failures.push(format!("mixed family map is {}", m.kind));
    }
    Outcome {
        ok: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("maps iso for n >= 4; mixed family {} -> {} iso", m.h1_sub, m.h1_whole)
        } else {
            failures.join("; ")
        },
    }
}

// ---------------------------------------------------------------------
// 6. Relations and stabilizers

fn criterion_relations_stabilizers() -> Outcome {
    // Nontrivial factors only: partial conjugations of a trivial factor are
    // the identity, so injectivity fails there.
    let (z2, z3) = (FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
    let mut fams = Vec::new();
    for n in 1..=3usize {
        let mut idx = vec![0usize; n];
        let pool = [&z2, &z3];
        loop {
            fams.push(GroupFamily::from_groups(idx.iter().map(|&i| pool[i].clone())));
            let Some(p) = (0..n).rev().find(|&p| idx[p] + 1 < pool.len()) else { break };
            let v = idx[p] + 1;
            for q in idx.iter_mut().skip(p) {
                *q = v;
            }
        }
    }
    let mut failures = Vec::new();
    let mut relators = 0;
    let mut trees = 0;
    for fam in &fams {
        let fr = fr_presentation(fam).unwrap();
        // Each relator evaluates to the identity.
        let autos: Vec<SymmetricAutomorphism> =
            fr.generators.iter().map(|x: &PartialConj| x.automorphism(fam).unwrap()).collect();
        let id = SymmetricAutomorphism::identity(fam).action_signature(fam).unwrap();
        for r in &fr.presentation.relators {
            let mut a = SymmetricAutomorphism::identity(fam);
            for &(k, e) in r {
                let g = if e > 0 { autos[k].clone() } else { autos[k].inverse() };
                for _ in 0..e.unsigned_abs() {
                    a = a.compose(&g, fam).unwrap();
                }
            }
            relators += 1;
            if a.action_signature(fam).unwrap() != id {
                failures.push(format!("{fam}: {}", fr.presentation.render_word(r)));
            }
        }
        for a in enumerate_trees(fam.labels()).unwrap() {
            let r: StabilizerReport = frstab::fr::check_stabilizer(&a, fam).unwrap();
            trees += 1;
            if !r.holds() || r.sampled {
                failures.push(format!("{fam}: {r:?}"));
            }
        }
    }
    Outcome {
        ok: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{} families, {relators} relators, {trees} trees", fams.len())
        } else {
            failures.join("; ")
        },
    }
}

// ---------------------------------------------------------------------
// 7. Smith normal form

fn criterion_snf() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    for trial in 0..1000 {
        let (r, c) = (rng.gen_range(1..=30), rng.gen_range(1..=30));
        let m = IntMatrix::from_fn(r, c, |_, _| BigInt::from(rng.gen_range(-100..=100)));
        let d = snf(&m);
        let product = &(&d.u * &m) * &d.v;
        let mut ok = product == d.s;
        ok &= d.u.determinant().abs() == BigInt::from(1) && d.v.determinant().abs() == BigInt::from(1);
        for i in 0..r {
            for j in 0..c {
                if i != j && !d.s.get(i, j).is_zero() {
                    ok = false;
                }
            }
        }
        let diag = d.diagonal();
        ok &= diag.iter().all(|x| !x.is_negative());
        for w in diag.windows(2) {
            // a | b, with zero last.
            ok &= if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
        }
        if !ok {
            failures.push(format!("trial {trial} ({r}x{c})"));
        }
    }
    Outcome {
        ok: failures.is_empty(),
        detail: if failures.is_empty() { "1000 matrices".into() } else { failures.join("; ") },
    }
}

fn main() {
    let secs = Duration::from_secs;
    let results = [
        run(1, "tree poset enumeration, order axioms, contractibility", secs(10), criterion_trees),
        run(2, "H_0 decomposition and vanishing over J_E", secs(60), criterion_dec_pira),
        run(3, "H_1(FR): presentation, direct sum, cross-effect formula", secs(30), criterion_fr_h1),
        run(4, "degree bound for E -> H_1(FR)", secs(10), criterion_degree),
        run(5, "stability of H_1(ΣAut)", secs(300), criterion_stability),
        run(6, "relators and stabilizer isomorphisms", secs(30), criterion_relations_stabilizers),
        run(7, "Smith normal form fuzz", secs(30), criterion_snf),
    ];
    let passed = results.iter().filter(|&&b| b).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
