//! Gluing patterns of graphs with leaves and a sound test for when the
//! induced assembly map on homology is forced to vanish.
//!
//! A verdict of [`Outcome::ForcedZero`] is a proof; [`Outcome::Inconclusive`]
//! only means no obstruction was found.

pub mod catalog;
mod file;
mod morita;
mod pattern;
mod verdict;

pub use file::{format_pattern, parse_pattern};
pub use morita::{morita_verdict, MoritaGraph, MoritaKind, MoritaVertex};
pub use pattern::{ClassModule, GluingPattern, LeafRef, Pairing, Signature, Vertex};
pub use verdict::{
    assembly_verdict, coinvariant_pairing, Criterion, Outcome, TraceStep, Verdict, VerdictOptions, Witness,
    DEFAULT_SUBGLUING_BUDGET,
};

/// Checks a pattern and returns the signature of the glued graph.
pub fn validate_pattern(pattern: &GluingPattern) -> crate::Result<Signature> {
    pattern.validate()
}
