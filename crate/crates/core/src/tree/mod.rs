//! The poset `J_E` of planted bipartite labelled trees.

pub mod enumerate;
pub mod fe;
pub mod fold;
pub mod jf;
pub mod treej;

pub use enumerate::{enumerate_trees, enumerate_trees_bounded, minimal_tree, TREE_LABEL_LIMIT};
pub use fe::{fancy_f, fancy_f_membership, fe_morphism, fe_morphism_unchecked, fe_object, FeObject};
pub use fold::{elementary_folds, fold_leq, FoldStep, JPoset};
pub use jf::jf_map;
pub use treej::TreeJ;
