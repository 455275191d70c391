//! JSON shapes written with `--json`.
//!
//! Rationals and big integers are strings; matrices are row lists.

use serde::{Deserialize, Serialize};

pub use hopfian::hopf::{AutomorphismRecord, DominanceRecord, GrowthComparisonRecord, SeparationRecord};

pub type MatrixStrings = Vec<Vec<String>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WordRecord {
    pub base: u64,
    pub depth: u32,
    pub length: u64,
    pub word: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexityRecord {
    pub source: String,
    pub word_length: usize,
    pub y_bound: Option<usize>,
    pub complexity: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub label: String,
    /// Present for series computed from a recurrent word.
    pub factor_stable: Option<bool>,
    pub d: Vec<String>,
    pub c: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GkOutput {
    pub label: String,
    pub window: (usize, usize),
    pub estimate: f64,
    pub least_squares_slope: f64,
    pub exact_degree: Option<usize>,
    pub unbounded: bool,
    pub ratios: Vec<(usize, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareRecord {
    pub a: String,
    pub b: String,
    pub results: Vec<DominanceRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PiTestRecord {
    pub polynomial: String,
    pub generators: Vec<String>,
    pub n: usize,
    /// `exact` or `randomized`.
    pub mode: String,
    /// `identity`, `probable_identity` or `nonidentity`.
    pub verdict: String,
    pub seed: u64,
    pub modulus: Option<u64>,
    pub trials: Option<usize>,
    pub sample_size: Option<u64>,
    pub per_trial_bound: Option<String>,
    pub error_bound: Option<f64>,
    pub witness: Option<Vec<MatrixStrings>>,
    pub value: Option<MatrixStrings>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JacobianRecord {
    pub generators: Vec<String>,
    pub images: Vec<String>,
    pub jacobian: MatrixStrings,
    pub degree_bound: Option<usize>,
    /// `two_sided`, `right_only`, `left_only`, `constant_term_singular` or `none_within_bound`.
    pub inverse_outcome: Option<String>,
    pub inverse: Option<MatrixStrings>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparationDemoRecord {
    pub reports: Vec<SeparationRecord>,
}
