//! Exact integer linear algebra and the homology computations built on it.

pub mod abelian;
pub mod chain;
pub mod group_homology;
pub mod kunneth;
pub mod lattice;
pub mod matrix;
pub mod poset;
pub mod presentation;
pub mod snf;
pub mod sparse;

pub use abelian::{AbPresentation, AbelianHom, FgAbGroup, MapKind};
pub use chain::ChainComplexZ;
pub use lattice::Lattice;
pub use matrix::IntMatrix;
pub use group_homology::{group_homology, group_homology_table};
pub use kunneth::{kunneth_h, kunneth_pair};
pub use poset::{
    order_complex, poset_homology, validate_coefficients, CoefficientSystem, ConstantCoefficients, FinitePoset,
    TableCoefficients,
};
pub use presentation::{abelianization, h1_induced_map, GenWord, Presentation, PresentationMap};
pub use snf::{invariant_factors, snf, Snf};
