//! The free associative algebra `Q<X>` on a finite generating set.
//!
//! Polynomials are stored sparsely as a map from [`Word`] to nonzero rational
//! coefficient. Words are ordered degree-lexicographically, which fixes both
//! the canonical printing order and the notion of leading word.

mod gens;
mod parse;
mod poly;
mod word;

pub use gens::GeneratorSet;
pub use parse::{parse_poly, ParseError, ParseErrorKind};
pub use poly::NcPoly;
pub use word::Word;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator sets differ: [{left}] vs [{right}]")]
    GeneratorMismatch { left: String, right: String },
    #[error("expected {expected} images, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },
    #[error("generator index {index} out of range for {count} generators")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),
}
