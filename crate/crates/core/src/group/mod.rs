//! Finite groups, their free products, and symmetric automorphisms.

pub mod automorphism;
pub mod family;
pub mod finite;
pub mod iso;
pub mod relations;
pub mod whitehead;
pub mod word;

pub use automorphism::{apply_automorphism, whitehead_generator, AutData, SymmetricAutomorphism};
pub use family::{GroupFamily, Label};
pub use finite::FiniteGroup;
pub use iso::{automorphism_group, automorphism_group_bounded, isomorphisms, AUT_ORDER_LIMIT};
pub use relations::{
    instances, verify_family, verify_relations, PartialConj, RelationFamily, RelationInstance, RelationReport, Variant,
};
pub use whitehead::{components_without, is_supported_by, WhiteheadData};
pub use word::{word_mul, Word};
