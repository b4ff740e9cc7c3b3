//! Seeded random functors for property tests.

use rand::Rng;

use super::gamma::PointedSetTuple;
use super::library::LibraryFunctor;
use crate::homology::AbPresentation;

fn random_leaf(rng: &mut impl Rng, coords: usize) -> LibraryFunctor {
    match rng.gen_range(0..4) {
        0 => {
            let n = rng.gen_range(0..=2);
            let base = AbPresentation::free(n);
            if n > 0 && rng.gen_bool(0.5) {
                LibraryFunctor::Constant(base.reduce_mod(rng.gen_range(2..=6)))
            } else {
                LibraryFunctor::Constant(base)
            }
        }
        1 | 2 => LibraryFunctor::Linear(rng.gen_range(0..coords)),
        _ => {
            // One part in a random coordinate keeps the rank small.
            let mut sizes = vec![0; coords];
            sizes[rng.gen_range(0..coords)] = 1;
            LibraryFunctor::Functions(PointedSetTuple::new(sizes))
        }
    }
}

fn random_expr(rng: &mut impl Rng, coords: usize, depth: usize) -> LibraryFunctor {
    if depth == 0 || rng.gen_bool(0.3) {
        return random_leaf(rng, coords);
    }
    match rng.gen_range(0..5) {
        0 | 1 => LibraryFunctor::sum(random_expr(rng, coords, depth - 1), random_expr(rng, coords, depth - 1)),
        2 => LibraryFunctor::tensor(random_leaf(rng, coords), random_leaf(rng, coords)),
        3 => LibraryFunctor::mod_n(random_expr(rng, coords, depth - 1), rng.gen_range(2..=6)),
        _ => LibraryFunctor::reduced(random_expr(rng, coords, depth - 1)),
    }
}

/// A random functor on `coords` coordinates built from the library.
pub fn random_functor(rng: &mut impl Rng, coords: usize) -> LibraryFunctor {
    random_expr(rng, coords, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::cross::check_splitting;
    use crate::functor::tabulated::{downward_closure, TabulatedFunctor};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_functors_validate_and_split() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let objs = downward_closure(&[PointedSetTuple::new(vec![1, 1, 0]), PointedSetTuple::new(vec![2, 0, 0])]);
        for _ in 0..10 {
            let t = random_functor(&mut rng, 3);
            let tab = TabulatedFunctor::from_functor(&t, objs.clone()).unwrap();
            for c in &objs {
                assert!(check_splitting(&tab, c).unwrap().holds, "{t} at {c}");
            }
        }
    }
}
