//! Symmetric automorphisms of free products of finite groups, the poset of
//! labelled trees they act on, and the integer homology computations used
//! to test homological stability statements about them.

pub mod error;
pub mod fr;
pub mod functor;
pub mod group;
pub mod homology;
pub mod limits;
pub mod tree;

pub use error::{Error, Result};
