//! `Γ^E`, `Θ`, functors to abelian groups and their cross effects.

pub mod cross;
pub mod degree;
pub mod gamma;
pub mod library;
pub mod random;
pub mod representable;
pub mod tabulated;
pub mod theta;

pub use cross::{
    check_cross_effect_naturality, check_splitting, cross_effect, cross_effect_from, full_cross_effect, CrossEffect,
    SplittingReport,
};
pub use degree::{polynomial_degree_at_most, DegreeVerdict, GammaDiagram, IdempotentDiagram};
pub use gamma::{idempotent, GammaEMorphism, PointedSetTuple, SubTuple};
pub use library::{GammaFunctor, LibraryFunctor};
pub use random::random_functor;
pub use representable::{coend_with_representable, Representable};
pub use tabulated::{downward_closure, TabulatedFunctor};
pub use theta::ThetaMorphism;
