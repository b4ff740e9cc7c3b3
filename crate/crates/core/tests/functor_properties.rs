use frstab::functor::{
    check_cross_effect_naturality, check_splitting, coend_with_representable, downward_closure, full_cross_effect,
    random_functor, GammaEMorphism, GammaFunctor, LibraryFunctor, PointedSetTuple, TabulatedFunctor,
};
use frstab::homology::IntMatrix;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn functor(seed: u64, coords: usize) -> LibraryFunctor {
    random_functor(&mut ChaCha8Rng::seed_from_u64(seed), coords)
}

fn objects() -> Vec<PointedSetTuple> {
    downward_closure(&[PointedSetTuple::new(vec![2, 1])])
}

fn object() -> impl Strategy<Value = PointedSetTuple> {
    (0..=2usize, 0..=1usize).prop_map(|(a, b)| PointedSetTuple::new(vec![a, b]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_functors_respect_composition(seed in any::<u64>(), x in object(), y in object(), z in object()) {
        let t = functor(seed, 2);
        let vx = t.value(&x).unwrap();
        let id = t.act(&GammaEMorphism::identity(&x)).unwrap();
        prop_assert!(vx.maps_equal_mod(&id, &IntMatrix::identity(vx.gens)));
        let fs = GammaEMorphism::all(&x, &y);
        let gs = GammaEMorphism::all(&y, &z);
        for f in fs.iter().step_by(3) {
            let a = t.act(f).unwrap();
            for g in gs.iter().step_by(3) {
                let lhs = t.act(&g.compose(f).unwrap()).unwrap();
                prop_assert!(vx.maps_equal_mod(&lhs, &(&t.act(g).unwrap() * &a)), "{}", t);
            }
        }
    }

    #[test]
    fn reduced_functors_split_into_cross_effects(seed in any::<u64>(), c in object()) {
        let t = LibraryFunctor::reduced(functor(seed, 2));
        prop_assert!(t.value(&PointedSetTuple::base(2)).unwrap().group().is_trivial());
        let r = check_splitting(&t, &c).unwrap();
        prop_assert!(r.holds, "{} at {}: {:?}", t, c, r);
    }

    #[test]
    fn cross_effects_are_natural(seed in any::<u64>(), c in object(), d in object(), pick in any::<prop::sample::Index>()) {
        let t = functor(seed, 2);
        let fs = GammaEMorphism::all(&c, &d);
        let f = &fs[pick.index(fs.len())];
        for n in d.subtuples() {
            prop_assert!(check_cross_effect_naturality(&t, f, &n).unwrap(), "{} along {:?}", t, f);
        }
    }

    #[test]
    fn coend_with_representable_is_the_cross_effect(seed in any::<u64>(), y in object()) {
        let t = functor(seed, 2);
        prop_assert_eq!(coend_with_representable(&t, &y).unwrap(), full_cross_effect(&t, &y).unwrap().group);
    }
}

#[test]
fn tabulated_round_trip_keeps_values_and_actions() {
    let t = functor(5, 2);
    let tab = TabulatedFunctor::from_functor(&t, objects()).unwrap();
    let back = TabulatedFunctor::from_json(&tab.to_json()).unwrap();
    assert_eq!(back.morphism_count(), tab.morphism_count());
    for x in objects() {
        assert_eq!(back.value(&x).unwrap(), t.value(&x).unwrap());
        for y in objects() {
            for f in GammaEMorphism::all(&x, &y) {
                assert_eq!(back.act(&f).unwrap(), t.act(&f).unwrap());
            }
        }
    }
}

#[test]
fn tabulated_functor_outside_its_objects_is_incomplete() {
    let tab = TabulatedFunctor::from_functor(&LibraryFunctor::additive(2), objects()).unwrap();
    let far = PointedSetTuple::new(vec![3, 0]);
    assert!(matches!(tab.value(&far), Err(frstab::Error::DiagramIncomplete(_))));
}

#[test]
fn library_functor_serializes() {
    let t = LibraryFunctor::tensor(LibraryFunctor::additive(2), LibraryFunctor::mod_n(LibraryFunctor::Linear(0), 4));
    let text = serde_json::to_string(&t).unwrap();
    let back: LibraryFunctor = serde_json::from_str(&text).unwrap();
    assert_eq!(back, t);
}
