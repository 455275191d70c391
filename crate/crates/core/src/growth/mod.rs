//! Growth of monomial algebras built from a recurrent word.
//!
//! The factors of a word span a monomial algebra whose degree-`n` piece has
//! the length-`n` factors as a basis. Counting them with a suffix automaton
//! gives the filtered dimensions `d_n = 1 + c_1 + … + c_n`.

mod automaton;
mod compare;
mod gk;
mod series;
mod word;

pub use automaton::{bounded_factor_complexity, factor_complexity, SuffixAutomaton};
pub use compare::{commutative_quotient_growth, growth_rate_le, Dominance, MonomialQuotientSpec};
pub use gk::{gk_dim_estimate, GkEstimate};
pub use series::GrowthSeries;
pub use word::{build_u, from_ascii, to_ascii, Reading, RecurrentWordSpec, DEFAULT_MAX_WORD_LEN, X, Y};

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrowthError {
    #[error("invalid word parameters: {0}")]
    InvalidSpec(String),
    #[error("only the indexed reading u_n of the recursion is supported")]
    UnsupportedReading,
    #[error("word needs length {}, budget is {budget}", required.map_or("beyond 2^128".to_string(), |r| r.to_string()))]
    WordTooLong { required: Option<u128>, budget: u128 },
    #[error("max length {max_len} exceeds word length {word_len}")]
    MaxLenOutOfRange { max_len: usize, word_len: usize },
    #[error("invalid growth series: {0}")]
    InvalidSeries(String),
    #[error("window [{start}, {end}] must satisfy 2 <= start <= end <= {len}")]
    InvalidWindow { start: usize, end: usize, len: usize },
    #[error("window [{start}, {end}] has fewer than 3 points")]
    WindowTooSmall { start: usize, end: usize },
    #[error("no index is available for comparison")]
    EmptyRange,
}

fn label(spec: &RecurrentWordSpec, what: &str) -> String {
    format!("{what} of u_{} (base {})", spec.depth, spec.base)
}

/// Growth of the algebra spanned by the factors of `u_N`.
///
/// Factors of length at most `L_{N-1}` are the same for all deeper words;
/// [`is_factor_stable`] reports whether `max_len` is within that guard.
pub fn factor_algebra_growth(spec: &RecurrentWordSpec, max_len: usize) -> Result<GrowthSeries, GrowthError> {
    let word = build_u(spec, DEFAULT_MAX_WORD_LEN)?;
    let c = factor_complexity(&word, max_len)?;
    Ok(GrowthSeries::from_graded(label(spec, "factor algebra"), c.into_iter().map(BigUint::from).collect()))
}

/// Growth of the quotient keeping factors with at most `y_bound` letters `y`.
pub fn y_bounded_quotient_growth(
    spec: &RecurrentWordSpec,
    max_len: usize,
    y_bound: usize,
) -> Result<GrowthSeries, GrowthError> {
    let word = build_u(spec, DEFAULT_MAX_WORD_LEN)?;
    let c = bounded_factor_complexity(&word, max_len, Y, y_bound)?;
    let what = format!("quotient with at most {y_bound} y per word");
    Ok(GrowthSeries::from_graded(label(spec, &what), c.into_iter().map(BigUint::from).collect()))
}

pub fn is_factor_stable(spec: &RecurrentWordSpec, max_len: usize) -> bool {
    match spec.stable_length() {
        Some(l) => max_len as u128 <= l,
        None => false,
    }
}
