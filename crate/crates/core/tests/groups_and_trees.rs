use frstab::group::{
    instances, verify_family, FiniteGroup, GroupFamily, PartialConj, RelationFamily, SymmetricAutomorphism, Variant,
};
use frstab::homology::FgAbGroup;
use frstab::tree::{elementary_folds, enumerate_trees, fold_leq, minimal_tree, TreeJ};
use proptest::prelude::*;

fn mixed() -> GroupFamily {
    GroupFamily::from_groups([FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(2)])
}

#[test]
fn relation_variants() {
    let fam = mixed();
    let holds = |f, v| verify_family(&fam, f, v).unwrap().holds();
    assert!(holds(RelationFamily::SameArrow, Variant::Printed));
    assert!(!holds(RelationFamily::SharedSource, Variant::Printed));
    assert!(holds(RelationFamily::SharedSource, Variant::Corrected));
    assert!(!holds(RelationFamily::Triangle, Variant::Printed));
    assert!(holds(RelationFamily::Triangle, Variant::Corrected));

    let four = GroupFamily::copies(&FiniteGroup::cyclic(2), 4);
    let r = verify_family(&four, RelationFamily::Disjoint, Variant::Supplement).unwrap();
    assert!(r.instances > 0 && r.holds());
}

#[test]
fn printed_shared_source_fails_only_when_superscripts_differ() {
    let fam = mixed();
    let all = instances(&fam, RelationFamily::SharedSource, Variant::Printed).unwrap();
    let mut failing = 0;
    for r in &all {
        let same = r.lhs.iter().chain(&r.rhs).all(|x| x.g == r.lhs[0].g);
        if !r.holds(&fam).unwrap() {
            failing += 1;
            assert!(!same, "{r}");
        }
    }
    assert!(failing > 0);
}

fn partial_conj() -> impl Strategy<Value = PartialConj> {
    (1..=3u32, 1..=3u32, 0..3usize)
        .prop_filter("distinct labels", |(i, j, _)| i != j)
        .prop_map(|(i, j, g)| PartialConj::new(i, j, g))
}

fn realize(xs: &[PartialConj], fam: &GroupFamily) -> SymmetricAutomorphism {
    xs.iter().fold(SymmetricAutomorphism::identity(fam), |acc, x| {
        // Reduce g into the factor's range.
        let order = fam.factor(x.i).unwrap().order();
        let y = PartialConj::new(x.i, x.j, x.g % order);
        acc.compose(&y.automorphism(fam).unwrap(), fam).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative_with_inverses(
        a in prop::collection::vec(partial_conj(), 0..4),
        b in prop::collection::vec(partial_conj(), 0..4),
        c in prop::collection::vec(partial_conj(), 0..4),
    ) {
        let fam = mixed();
        let (x, y, z) = (realize(&a, &fam), realize(&b, &fam), realize(&c, &fam));
        let left = x.compose(&y, &fam).unwrap().compose(&z, &fam).unwrap();
        let right = x.compose(&y.compose(&z, &fam).unwrap(), &fam).unwrap();
        prop_assert_eq!(left.action_signature(&fam).unwrap(), right.action_signature(&fam).unwrap());
        prop_assert!(x.compose(&x.inverse(), &fam).unwrap().is_identity());
        prop_assert!(x.verify_inverse(&fam).is_ok());
    }

    #[test]
    fn partial_conjugations_act_on_the_right(i in 1..=3u32, j in 1..=3u32, g in 0..3usize, h in 0..3usize) {
        prop_assume!(i != j);
        let fam = GroupFamily::copies(&FiniteGroup::cyclic(3), 3);
        let gh = fam.factor(i).unwrap().mul(h, g);
        let a = |k| PartialConj::new(i, j, k).automorphism(&fam).unwrap();
        let lhs = a(g).compose(&a(h), &fam).unwrap();
        prop_assert_eq!(lhs.action_signature(&fam).unwrap(), a(gh).action_signature(&fam).unwrap());
    }
}

#[test]
fn trees_round_trip_through_text_and_json() {
    for n in 1..=4u32 {
        let labels: Vec<u32> = (1..=n).collect();
        for t in enumerate_trees(&labels).unwrap() {
            assert_eq!(TreeJ::parse(&t.to_string()).unwrap(), t);
            let back: TreeJ = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
            assert_eq!(back, t);
        }
    }
}

#[test]
fn folds_descend_to_the_minimal_tree() {
    let labels = [1, 2, 3, 4];
    let bottom = minimal_tree(&labels).unwrap();
    for t in enumerate_trees(&labels).unwrap() {
        assert!(fold_leq(&bottom, &t).unwrap(), "{t}");
        for (_, s) in elementary_folds(&t) {
            assert_eq!(s.mute_count() + 1, t.mute_count());
            assert!(fold_leq(&s, &t).unwrap());
            assert!(!fold_leq(&t, &s).unwrap());
        }
    }
}

#[test]
fn group_tables_and_values_serialize() {
    let s3 = FiniteGroup::builtin("S3").unwrap();
    let back: FiniteGroup = serde_json::from_str(&serde_json::to_string(&s3).unwrap()).unwrap();
    assert_eq!(back, s3);
    let g = FgAbGroup::from_cyclic_orders(&[2.into(), 6.into()]).direct_sum(&FgAbGroup::free(1));
    let back: FgAbGroup = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
    assert_eq!(back, g);
}

#[test]
fn table_parsing_rejects_non_groups() {
    assert!(FiniteGroup::parse_table("bad", "order 2\n0 1\n1 1\n").is_err());
    assert!(FiniteGroup::parse_table("short", "order 2\n0 1\n").is_err());
    assert!(FiniteGroup::parse_table("z2", "# comment\norder 2\n0 1\n1 0\n").is_ok());
}
