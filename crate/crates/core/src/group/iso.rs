//! Isomorphisms between finite groups by backtracking over the images of a
//! generating set.

use std::collections::VecDeque;

use super::finite::FiniteGroup;
use crate::error::{check_bound, Result};

/// Default order limit for [`automorphism_group`].
pub const AUT_ORDER_LIMIT: usize = 12;

/// All isomorphisms `g -> h` as tables `table[x] = image of x`, sorted.
pub fn isomorphisms(g: &FiniteGroup, h: &FiniteGroup) -> Vec<Vec<usize>> {
    if g.order() != h.order() {
        return Vec::new();
    }
    let gens = g.generators();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    search(g, h, &gens, &mut images, &mut out);
    out.sort();
    out
}

fn search(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if images.len() == gens.len() {
        if let Some(t) = extend(g, h, gens, images) {
            out.push(t);
        }
        return;
    }
    let want = g.element_order(gens[images.len()]);
    for y in h.nontrivial() {
        if h.element_order(y) == want && !images.contains(&y) {
            images.push(y);
            search(g, h, gens, images, out);
            images.pop();
        }
    }
}

/// Extends generator images to a map on all of `g`; `None` unless the
/// result is a well-defined bijective homomorphism.
fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut t = vec![usize::MAX; n];
    t[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (&a, &b) in gens.iter().zip(images) {
            let y = g.mul(x, a);
            let img = h.mul(t[x], b);
            if t[y] == usize::MAX {
                t[y] = img;
                queue.push_back(y);
            } else if t[y] != img {
                return None;
            }
        }
    }
    let mut hit = vec![false; n];
    for &v in &t {
        if v == usize::MAX || std::mem::replace(&mut hit[v], true) {
            return None;
        }
    }
    let hom = g.elements().all(|x| g.elements().all(|y| t[g.mul(x, y)] == h.mul(t[x], t[y])));
    hom.then_some(t)
}

/// `Aut(g)` as a sorted list of tables; the identity comes first.
pub fn automorphism_group(g: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
    automorphism_group_bounded(g, AUT_ORDER_LIMIT)
}

pub fn automorphism_group_bounded(g: &FiniteGroup, limit: usize) -> Result<Vec<Vec<usize>>> {
    check_bound("group order for automorphism search", g.order(), limit)?;
    Ok(isomorphisms(g, g))
}

pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    !isomorphisms(g, h).is_empty()
}

pub fn compose_tables(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&x| outer[x]).collect()
}

pub fn invert_table(t: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; t.len()];
    for (x, &y) in t.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every bijection fixing the identity, kept if multiplicative.
    fn brute_force_automorphisms(g: &FiniteGroup) -> Vec<Vec<usize>> {
        fn perms(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest.is_empty() {
                out.push(cur.clone());
                return;
            }
            for i in 0..rest.len() {
                let x = rest.remove(i);
                cur.push(x);
                perms(rest, cur, out);
                cur.pop();
                rest.insert(i, x);
            }
        }
        let mut all = Vec::new();
        let mut rest: Vec<usize> = (0..g.order()).collect();
        perms(&mut rest, &mut Vec::new(), &mut all);
        let mut auts: Vec<Vec<usize>> = all
            .into_iter()
            .filter(|t| g.elements().all(|x| g.elements().all(|y| t[g.mul(x, y)] == g.mul(t[x], t[y]))))
            .collect();
        auts.sort();
        auts
    }

    #[test]
    fn counts_match_brute_force() {
        let cases = [
            (FiniteGroup::cyclic(2), 1),
            (FiniteGroup::cyclic(3), 2),
            (FiniteGroup::symmetric3(), 6),
            (FiniteGroup::klein(), 6),
            (FiniteGroup::cyclic(4), 2),
            (FiniteGroup::cyclic(5), 4),
            (FiniteGroup::cyclic(6), 2),
        ];
        for (g, n) in cases {
            let fast = automorphism_group(&g).unwrap();
            assert_eq!(fast.len(), n, "{g}");
            assert_eq!(fast, brute_force_automorphisms(&g), "{g}");
            assert_eq!(fast[0], (0..g.order()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn bound_is_enforced() {
        let g = FiniteGroup::cyclic(13);
        assert!(automorphism_group(&g).is_err());
        assert_eq!(automorphism_group_bounded(&g, 13).unwrap().len(), 12);
    }

    #[test]
    fn isomorphisms_between_relabelled_copies() {
        // Z/4 with elements relabelled 1 <-> 3 is still Z/4.
        let table = [vec![0, 1, 2, 3], vec![1, 2, 3, 0], vec![2, 3, 0, 1], vec![3, 0, 1, 2]];
        let swap = [0, 3, 2, 1];
        let relabelled: Vec<Vec<usize>> = (0..4)
            .map(|a| (0..4).map(|b| swap[table[swap[a]][swap[b]]]).collect())
            .collect();
        let h = FiniteGroup::from_table("Z4'", relabelled).unwrap();
        assert_eq!(isomorphisms(&FiniteGroup::cyclic(4), &h).len(), 2);
        assert!(!are_isomorphic(&FiniteGroup::cyclic(4), &FiniteGroup::klein()));
    }
}
