//! Z2Z4-additive codes at desk scale.
//!
//! Words of Z2^alpha x Z4^beta ([`ring`]), codes spanned by generator rows
//! ([`code`]), Lee-weight classification including relative two-weight
//! structure ([`classify`]), and coordinate-permutation symmetry
//! ([`symmetry`]). Everything is exact and exhaustive; [`Limits`] keeps the
//! exhaustive parts bounded.

pub mod classify;
pub mod code;
pub mod error;
pub mod limits;
pub mod ring;
pub mod symmetry;

pub use classify::{
    check_g1_row_units, classify, even_weight_criterion, find_relative_structure, is_one_weight,
    is_two_distance, predicted_single_gen_weights, verify_relative, weight_profile,
    ClassificationReport, EvenWeightCheck, GeneratorStats, RelativeStructure, RowUnitsEntry,
    TwoDistance, WeightProfile,
};
pub use code::{ambient_size, ambient_words, AdditiveCode, BinaryCode, Codewords, SubcodeWitness};
pub use error::{Error, Result};
pub use limits::Limits;
pub use ring::{word, BinaryWord, MixedWord, Z2, Z4};
pub use symmetry::{
    audit_cyclic_paut, find_equivalence, image_code, paut, paut_order_formula, paut_report,
    verify_group, CyclicAudit, PAutGroup, PAutReport, Perm, PermPair,
};
