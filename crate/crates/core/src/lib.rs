//! Classical, barred and vincular permutation patterns.
//!
//! The crate covers pattern containment for all three kinds, the `bond`
//! and `bar` transforms between barred and vincular patterns, a syntactic
//! test for naturally coincidental barred patterns (those whose avoidance
//! class equals that of their bond set), and a brute-force oracle that
//! compares avoidance classes length by length.
//!
//! Positions are zero-based. Bond sites run over `0..=n`; site 0 and site
//! `n` are the left and right anchors.

pub mod cache;
pub mod classifier;
mod error;
pub mod matcher;
pub mod oracle;
pub mod pattern;
pub mod permutation;
pub mod text;
pub mod transforms;

pub use error::{Error, Result};
pub use matcher::{
    avoids_all, barred_witness, classical_occurrences, contains, contains_barred,
    contains_classical, contains_vincular, vincular_occurrences, BarredSemantics, Occurrence,
};
pub use pattern::{BarredPattern, Pattern, VincularPattern};
pub use permutation::{normalize, Permutation};
pub use text::{format_pattern, parse_barred, parse_pattern, parse_permutation, parse_vincular};
pub use transforms::{bar_set, bond_set, boycotts, Boycott};
