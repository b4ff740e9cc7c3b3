//! Fouxe-Rabinovitch groups, symmetric automorphism groups and the
//! verifications that tie them to trees and functors.

pub mod decpira;
pub mod degree;
pub mod formula;
pub mod presentation;
pub mod report;
pub mod sigma;
pub mod stabilizer;

pub use decpira::{dec_pira_check, dec_pira_check_tabulated, dec_pira_suite, fe_diagram_objects, DecPiraReport};
pub use degree::FrH1Diagram;
pub use formula::{h1_fr_formula, h1_fr_formula_terms, FormulaTerm};
pub use presentation::{
    fr_generators, fr_idempotent, fr_inclusion, fr_presentation, h1_fr_direct, AutEvaluator, FrPresentation,
    FR_RELATION_FAMILIES,
};
pub use stabilizer::{check_stabilizer, stabilizer_map, StabilizerModel, StabilizerReport};
pub use report::{Report, Verdict};
pub use sigma::{
    sigma_aut_presentation, sigma_inclusion, stability_h1_table, subfamily_h1_map, table_classes, SigmaAutPresentation,
    SigmaGen, StabilityRow, StabilityTable, SubfamilyMap, STABILITY_MAX_N, STABILITY_MAX_ORDER,
};
