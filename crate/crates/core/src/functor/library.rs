//! Functors `(Γ^E)^op -> Ab` and a small library of them.
//!
//! Matrices act on row vectors: for `f : X -> Y`, `act(f)` is a
//! `gens(T(Y)) x gens(T(X))` matrix, so `act(g ∘ f) = act(g) * act(f)`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::gamma::{GammaEMorphism, PointedSetTuple};
use crate::error::{structural, Result};
use crate::group::GroupFamily;
use crate::homology::{AbPresentation, IntMatrix};

pub trait GammaFunctor {
    fn value(&self, x: &PointedSetTuple) -> Result<AbPresentation>;
    fn act(&self, f: &GammaEMorphism) -> Result<IntMatrix>;
}

impl<T: GammaFunctor + ?Sized> GammaFunctor for &T {
    fn value(&self, x: &PointedSetTuple) -> Result<AbPresentation> {
        (**self).value(x)
    }

    fn act(&self, f: &GammaEMorphism) -> Result<IntMatrix> {
        (**self).act(f)
    }
}

/// Functors built from a few basic pieces by sums, tensor products and
/// quotients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LibraryFunctor {
    /// The same group everywhere, identity maps.
    Constant(AbPresentation),
    /// `X ↦ Z[X_e - ⋆]`; `y ↦ Σ_{f(x)=y} x`.
    Linear(usize),
    /// `X ↦ Z[Γ^E(X, Y)]` by precomposition.
    Functions(PointedSetTuple),
    Tensor(Box<LibraryFunctor>, Box<LibraryFunctor>),
    Sum(Box<LibraryFunctor>, Box<LibraryFunctor>),
    ModN(Box<LibraryFunctor>, u64),
    /// `T(X) / image of T(∅)`, so that the value at `∅` vanishes.
    Reduced(Box<LibraryFunctor>),
}

impl LibraryFunctor {
    pub fn constant_z() -> Self {
        LibraryFunctor::Constant(AbPresentation::free(1))
    }

    pub fn tensor(a: LibraryFunctor, b: LibraryFunctor) -> Self {
        LibraryFunctor::Tensor(Box::new(a), Box::new(b))
    }

    pub fn sum(a: LibraryFunctor, b: LibraryFunctor) -> Self {
        LibraryFunctor::Sum(Box::new(a), Box::new(b))
    }

    pub fn mod_n(a: LibraryFunctor, n: u64) -> Self {
        LibraryFunctor::ModN(Box::new(a), n)
    }

    pub fn reduced(a: LibraryFunctor) -> Self {
        LibraryFunctor::Reduced(Box::new(a))
    }

    /// `⊕_e Z[X_e - ⋆]`, the additive functor.
    pub fn additive(coords: usize) -> Self {
        (1..coords).fold(LibraryFunctor::Linear(0), |acc, e| Self::sum(acc, LibraryFunctor::Linear(e)))
    }

    /// `X ↦ H_1(∏_e G_e^{X_e - ⋆}) = ⊕_e Z[X_e - ⋆] ⊗ G_e^ab`, acting by
    /// the diagonal maps `(g_y) ↦ (g_{f(x)})`.
    pub fn h1_dg(fam: &GroupFamily) -> Result<Self> {
        if fam.is_empty() {
            return Err(structural("H_1 ∘ D_G needs a nonempty family"));
        }
        let terms = fam.factors().iter().enumerate().map(|(e, g)| {
            Self::tensor(LibraryFunctor::Linear(e), LibraryFunctor::Constant(g.abelianization_presentation()))
        });
        Ok(terms.reduce(Self::sum).unwrap())
    }
}

impl fmt::Display for LibraryFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LibraryFunctor::Constant(p) => write!(f, "const({})", p.group()),
            LibraryFunctor::Linear(e) => write!(f, "L{e}"),
            LibraryFunctor::Functions(y) => write!(f, "Z[-,{y}]"),
            LibraryFunctor::Tensor(a, b) => write!(f, "({a} ⊗ {b})"),
            LibraryFunctor::Sum(a, b) => write!(f, "({a} ⊕ {b})"),
            LibraryFunctor::ModN(a, n) => write!(f, "{a}/{n}"),
            LibraryFunctor::Reduced(a) => write!(f, "red({a})"),
        }
    }
}

/// Number of morphisms `x -> y`.
fn hom_count(x: &PointedSetTuple, y: &PointedSetTuple) -> usize {
    x.sizes.iter().zip(&y.sizes).map(|(&a, &b)| (b + 1).pow(a as u32)).product()
}

/// Mixed-radix code of a morphism into `y` (digit 0 is the basepoint).
fn hom_code(maps: &[Vec<Option<usize>>], y: &PointedSetTuple) -> usize {
    let mut code = 0;
    for (e, m) in maps.iter().enumerate() {
        for v in m {
            code = code * (y.sizes[e] + 1) + v.map_or(0, |k| k + 1);
        }
    }
    code
}

fn hom_decode(mut code: usize, x: &PointedSetTuple, y: &PointedSetTuple) -> Vec<Vec<Option<usize>>> {
    let mut maps: Vec<Vec<Option<usize>>> = x.sizes.iter().map(|&n| vec![None; n]).collect();
    for e in (0..x.coords()).rev() {
        for k in (0..x.sizes[e]).rev() {
            let b = y.sizes[e] + 1;
            let d = code % b;
            code /= b;
            maps[e][k] = d.checked_sub(1);
        }
    }
    maps
}

fn check_coords(coords: usize, x: &PointedSetTuple) -> Result<()> {
    if x.coords() != coords {
        return Err(structural(format!("object {x} has the wrong number of coordinates")));
    }
    Ok(())
}

impl GammaFunctor for LibraryFunctor {
    fn value(&self, x: &PointedSetTuple) -> Result<AbPresentation> {
        Ok(match self {
            LibraryFunctor::Constant(p) => p.clone(),
            LibraryFunctor::Linear(e) => {
                if *e >= x.coords() {
                    return Err(structural(format!("coordinate {e} out of range")));
                }
                AbPresentation::free(x.sizes[*e])
            }
            LibraryFunctor::Functions(y) => {
                check_coords(y.coords(), x)?;
                AbPresentation::free(hom_count(x, y))
            }
            LibraryFunctor::Tensor(a, b) => a.value(x)?.tensor(&b.value(x)?),
            LibraryFunctor::Sum(a, b) => a.value(x)?.direct_sum(&b.value(x)?),
            LibraryFunctor::ModN(a, n) => a.value(x)?.reduce_mod(*n),
            LibraryFunctor::Reduced(a) => {
                let v = a.value(x)?;
                let from_base = a.act(&GammaEMorphism::to_base(x))?;
                v.with_extra_relations(&from_base)
            }
        })
    }

    fn act(&self, f: &GammaEMorphism) -> Result<IntMatrix> {
        Ok(match self {
            LibraryFunctor::Constant(p) => IntMatrix::identity(p.gens),
            LibraryFunctor::Linear(e) => {
                if *e >= f.source.coords() {
                    return Err(structural(format!("coordinate {e} out of range")));
                }
                let mut m = IntMatrix::zeros(f.target.sizes[*e], f.source.sizes[*e]);
                for (x, y) in f.maps[*e].iter().enumerate() {
                    if let Some(y) = y {
                        m.set(*y, x, 1);
                    }
                }
                m
            }
            LibraryFunctor::Functions(y0) => {
                check_coords(y0.coords(), &f.source)?;
                let rows = hom_count(&f.target, y0);
                let mut m = IntMatrix::zeros(rows, hom_count(&f.source, y0));
                for code in 0..rows {
                    let phi = GammaEMorphism {
                        source: f.target.clone(),
                        target: y0.clone(),
                        maps: hom_decode(code, &f.target, y0),
                    };
                    let pulled = phi.compose(f)?;
                    m.set(code, hom_code(&pulled.maps, y0), BigInt::from(1));
                }
                m
            }
            LibraryFunctor::Tensor(a, b) => a.act(f)?.kron(&b.act(f)?),
            LibraryFunctor::Sum(a, b) => a.act(f)?.direct_sum(&b.act(f)?),
            LibraryFunctor::ModN(a, _) | LibraryFunctor::Reduced(a) => a.act(f)?,
        })
    }
}
