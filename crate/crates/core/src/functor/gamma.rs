//! Objects and morphisms of `Γ^E`: tuples of finite pointed sets and
//! coordinatewise maps that may send parts to the basepoint.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{structural, Result};

/// Per coordinate, the number of non-base parts; parts are `0..size` and
/// the basepoint is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointedSetTuple {
    pub sizes: Vec<usize>,
}

impl PointedSetTuple {
    pub fn new(sizes: Vec<usize>) -> Self {
        PointedSetTuple { sizes }
    }

    /// All coordinates reduced to their basepoints.
    pub fn base(coords: usize) -> Self {
        PointedSetTuple { sizes: vec![0; coords] }
    }

    pub fn coords(&self) -> usize {
        self.sizes.len()
    }

    /// Total number of non-base parts.
    pub fn slots(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn full(&self) -> SubTuple {
        SubTuple {
            masks: self.sizes.iter().map(|&n| vec![true; n]).collect(),
        }
    }

    pub fn empty_sub(&self) -> SubTuple {
        SubTuple {
            masks: self.sizes.iter().map(|&n| vec![false; n]).collect(),
        }
    }

    /// Every sub-tuple, in a fixed order.
    pub fn subtuples(&self) -> Vec<SubTuple> {
        let total = self.slots();
        assert!(total < 32, "too many parts to list sub-tuples");
        (0u32..1 << total).map(|bits| SubTuple::from_bits(self, bits)).collect()
    }

    /// Flat slot index of part `k` of coordinate `e`.
    pub fn slot(&self, e: usize, k: usize) -> usize {
        self.sizes[..e].iter().sum::<usize>() + k
    }
}

impl fmt::Display for PointedSetTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.sizes.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", s.join(","))
    }
}

/// A pointed sub-tuple: which non-base parts of each coordinate it keeps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubTuple {
    pub masks: Vec<Vec<bool>>,
}

impl SubTuple {
    pub fn from_bits(c: &PointedSetTuple, bits: u32) -> Self {
        let mut k = 0;
        let masks = c
            .sizes
            .iter()
            .map(|&n| {
                (0..n)
                    .map(|_| {
                        let b = bits >> k & 1 == 1;
                        k += 1;
                        b
                    })
                    .collect()
            })
            .collect();
        SubTuple { masks }
    }

    pub fn is_sub_of(&self, c: &PointedSetTuple) -> bool {
        self.masks.len() == c.coords() && self.masks.iter().zip(&c.sizes).all(|(m, &n)| m.len() == n)
    }

    pub fn count(&self) -> usize {
        self.masks.iter().map(|m| m.iter().filter(|&&b| b).count()).sum()
    }

    pub fn contains(&self, e: usize, k: usize) -> bool {
        self.masks[e][k]
    }

    pub fn intersect(&self, other: &SubTuple) -> SubTuple {
        SubTuple {
            masks: self
                .masks
                .iter()
                .zip(&other.masks)
                .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| x && y).collect())
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &SubTuple) -> bool {
        self.masks
            .iter()
            .zip(&other.masks)
            .all(|(a, b)| a.iter().zip(b).all(|(&x, &y)| !x || y))
    }

    /// The sub-tuples obtained by dropping one kept part.
    pub fn maximal_proper(&self) -> Vec<SubTuple> {
        let mut out = Vec::new();
        for (e, m) in self.masks.iter().enumerate() {
            for (k, &b) in m.iter().enumerate() {
                if b {
                    let mut s = self.clone();
                    s.masks[e][k] = false;
                    out.push(s);
                }
            }
        }
        out
    }
}

/// `f : source -> target`; `maps[e][k]` is the image of part `k` of
/// coordinate `e`, `None` meaning the basepoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GammaEMorphism {
    pub source: PointedSetTuple,
    pub target: PointedSetTuple,
    pub maps: Vec<Vec<Option<usize>>>,
}

impl GammaEMorphism {
    pub fn new(source: PointedSetTuple, target: PointedSetTuple, maps: Vec<Vec<Option<usize>>>) -> Result<Self> {
        if source.coords() != target.coords() || maps.len() != source.coords() {
            return Err(structural("coordinate count mismatch in Γ^E morphism"));
        }
        for (e, m) in maps.iter().enumerate() {
            if m.len() != source.sizes[e] || m.iter().flatten().any(|&y| y >= target.sizes[e]) {
                return Err(structural(format!("coordinate {e} of the Γ^E morphism is out of range")));
            }
        }
        Ok(GammaEMorphism { source, target, maps })
    }

    pub fn identity(x: &PointedSetTuple) -> Self {
        GammaEMorphism {
            source: x.clone(),
            target: x.clone(),
            maps: x.sizes.iter().map(|&n| (0..n).map(Some).collect()).collect(),
        }
    }

    /// The map to the all-basepoint object.
    pub fn to_base(x: &PointedSetTuple) -> Self {
        GammaEMorphism {
            source: x.clone(),
            target: PointedSetTuple::base(x.coords()),
            maps: x.sizes.iter().map(|&n| vec![None; n]).collect(),
        }
    }

    /// `self ∘ other` (`other` first).
    pub fn compose(&self, other: &GammaEMorphism) -> Result<GammaEMorphism> {
        if other.target != self.source {
            return Err(structural("composing Γ^E morphisms with mismatched ends"));
        }
        let maps = other
            .maps
            .iter()
            .zip(&self.maps)
            .map(|(inner, outer)| inner.iter().map(|x| x.and_then(|k| outer[k])).collect())
            .collect();
        Ok(GammaEMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            maps,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self
                .maps
                .iter()
                .all(|m| m.iter().enumerate().all(|(k, &y)| y == Some(k)))
    }

    /// No two parts of a coordinate share an image.
    pub fn is_injective_on_support(&self) -> bool {
        self.maps.iter().all(|m| {
            let mut seen = std::collections::BTreeSet::new();
            m.iter().flatten().all(|y| seen.insert(*y))
        })
    }

    /// Parts of the source not sent to the basepoint.
    pub fn support(&self) -> SubTuple {
        SubTuple {
            masks: self.maps.iter().map(|m| m.iter().map(Option::is_some).collect()).collect(),
        }
    }

    pub fn image(&self, m: &SubTuple) -> SubTuple {
        let mut out = self.target.empty_sub();
        for (e, map) in self.maps.iter().enumerate() {
            for (k, y) in map.iter().enumerate() {
                if let (true, Some(y)) = (m.masks[e][k], y) {
                    out.masks[e][*y] = true;
                }
            }
        }
        out
    }

    pub fn preimage(&self, n: &SubTuple) -> SubTuple {
        SubTuple {
            masks: self
                .maps
                .iter()
                .enumerate()
                .map(|(e, map)| map.iter().map(|y| y.is_some_and(|y| n.masks[e][y])).collect())
                .collect(),
        }
    }

    /// All morphisms `source -> target`.
    pub fn all(source: &PointedSetTuple, target: &PointedSetTuple) -> Vec<GammaEMorphism> {
        let mut out = vec![Vec::new()];
        for (e, &n) in source.sizes.iter().enumerate() {
            let choices: Vec<Option<usize>> = std::iter::once(None).chain((0..target.sizes[e]).map(Some)).collect();
            let mut coord = vec![Vec::new()];
            for _ in 0..n {
                coord = coord
                    .into_iter()
                    .flat_map(|c: Vec<Option<usize>>| {
                        choices.iter().map(move |&x| {
                            let mut d = c.clone();
                            d.push(x);
                            d
                        })
                    })
                    .collect();
            }
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<Vec<Option<usize>>>| {
                    coord.iter().map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c.clone());
                        p
                    })
                })
                .collect();
        }
        out.into_iter()
            .map(|maps| GammaEMorphism {
                source: source.clone(),
                target: target.clone(),
                maps,
            })
            .collect()
    }
}

/// `d_{C,M}`: the identity on the parts of `M`, the basepoint elsewhere.
pub fn idempotent(c: &PointedSetTuple, m: &SubTuple) -> Result<GammaEMorphism> {
    if !m.is_sub_of(c) {
        return Err(structural("sub-tuple does not fit the object"));
    }
    Ok(GammaEMorphism {
        source: c.clone(),
        target: c.clone(),
        maps: m
            .masks
            .iter()
            .map(|mask| mask.iter().enumerate().map(|(k, &b)| b.then_some(k)).collect())
            .collect(),
    })
}
