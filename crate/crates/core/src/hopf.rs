//! Verified reports tying the modules together.
//!
//! Each report carries a `statement` naming the mathematical fact it
//! instantiates, and is checked exactly before it is returned.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::comm::CommPoly;
use crate::endo::{
    abelianized_jacobian_det, is_epimorphism_bounded_degree, jacobian, substitution_is_identity, EndoError,
    Endomorphism, EpimorphismSearch, Obstruction, TensorMatrix,
};
use crate::freealg::NcPoly;
use crate::growth::{gk_dim_estimate, growth_rate_le, Dominance, GkEstimate, GrowthError, GrowthSeries};
use crate::pitest::{separation_witness_with, PiError, Separation, SeparationConfig, WitnessMethod};
use crate::rational::{int, to_string, Rational};

pub const SEPARATION_STATEMENT: &str =
    "a nonzero polynomial of degree d is not an identity of n x n matrices for some n <= d, so the T-ideals I_n intersect in zero";
pub const GROWTH_STATEMENT: &str =
    "if R/I grows strictly slower than R for every nonzero ideal I, an epimorphism of R onto itself is injective";
pub const AUTOMORPHISM_STATEMENT: &str =
    "a surjective endomorphism of a free associative algebra is an automorphism, and its Jacobian matrix is invertible";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationReport {
    pub polynomial: NcPoly,
    pub degree: usize,
    pub separation: Separation,
    pub narrative: String,
}

/// Separates `f` from the T-ideal `I_n` for the least possible `n`.
pub fn demonstrate_kernel_separation(f: &NcPoly) -> Result<SeparationReport, PiError> {
    demonstrate_kernel_separation_with(f, &SeparationConfig::default())
}

pub fn demonstrate_kernel_separation_with(f: &NcPoly, config: &SeparationConfig) -> Result<SeparationReport, PiError> {
    let separation = separation_witness_with(f, config)?;
    let degree = f.degree() as usize;
    assert!(separation.verify(f), "witness failed exact re-evaluation");
    assert!(separation.n <= degree.max(1));
    let n = separation.n;
    let narrative = format!(
        "f has degree {degree} and is nonzero on the {n} x {n} witness, so f is not in I_{n}. \
         An epimorphism of Q<X> with f in its kernel would pass to a non-injective epimorphism \
         of Q<X>/I_{n}, the algebra of {n} x {n} generic matrices, which is Hopfian."
    );
    Ok(SeparationReport { polynomial: f.clone(), degree, separation, narrative })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationRecord {
    pub statement: String,
    pub polynomial: String,
    pub generators: Vec<String>,
    pub degree: usize,
    pub n: usize,
    pub method: WitnessMethod,
    pub matrices: Vec<Vec<Vec<String>>>,
    pub value: Vec<Vec<String>>,
    pub narrative: String,
}

impl SeparationReport {
    pub fn to_record(&self) -> SeparationRecord {
        let w = self.separation.to_record();
        SeparationRecord {
            statement: SEPARATION_STATEMENT.to_string(),
            polynomial: self.polynomial.to_string(),
            generators: self.polynomial.gens().names().to_vec(),
            degree: self.degree,
            n: w.n,
            method: w.method,
            matrices: w.matrices,
            value: w.value,
            narrative: self.narrative.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrowthClassification {
    /// `q_n <= a_n` throughout and `q_n < a_n` from `first_strict` to the end.
    QuotientStrictlySmaller {
        first_strict: usize,
    },
    Equivalent,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthCheckConfig {
    pub c_grid: Vec<Rational>,
    pub k_grid: Vec<usize>,
}

impl Default for GrowthCheckConfig {
    fn default() -> Self {
        GrowthCheckConfig { c_grid: vec![int(1), int(2), int(4)], k_grid: vec![1, 2, 3] }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthComparisonReport {
    pub algebra: GrowthSeries,
    pub quotient: GrowthSeries,
    /// `quotient_n <= c·algebra_{kn}` over the grid.
    pub quotient_le_algebra: Vec<Dominance>,
    /// `algebra_n <= c·quotient_{kn}` over the grid.
    pub algebra_le_quotient: Vec<Dominance>,
    /// Estimates on `[max(2, M/10), M]`; absent when that window is too short.
    pub gk: Option<(GkEstimate, GkEstimate)>,
    pub classification: GrowthClassification,
}

pub fn growth_hypothesis_check(
    algebra: &GrowthSeries,
    quotient: &GrowthSeries,
) -> Result<GrowthComparisonReport, GrowthError> {
    growth_hypothesis_check_with(algebra, quotient, &GrowthCheckConfig::default())
}

/// Compares a quotient's growth with the algebra's over the common range.
pub fn growth_hypothesis_check_with(
    algebra: &GrowthSeries,
    quotient: &GrowthSeries,
    config: &GrowthCheckConfig,
) -> Result<GrowthComparisonReport, GrowthError> {
    let m = algebra.len().min(quotient.len());
    if m == 0 {
        return Err(GrowthError::EmptyRange);
    }
    let (a, q) = (algebra.truncated(m), quotient.truncated(m));
    let quotient_le_algebra = growth_rate_le(&q, &a, &config.c_grid, &config.k_grid)?;
    let algebra_le_quotient = growth_rate_le(&a, &q, &config.c_grid, &config.k_grid)?;
    let window = ((m / 10).max(2), m);
    let gk = match (gk_dim_estimate(&a, window), gk_dim_estimate(&q, window)) {
        (Ok(x), Ok(y)) => Some((x, y)),
        _ => None,
    };

    let dominated = (1..=m).all(|n| q.d(n) <= a.d(n));
    let strict_from = (1..=m).rev().take_while(|&n| q.d(n) < a.d(n)).last();
    let classification = if a.dims() == q.dims() {
        GrowthClassification::Equivalent
    } else if let (true, Some(first_strict)) = (dominated, strict_from) {
        GrowthClassification::QuotientStrictlySmaller { first_strict }
    } else if quotient_le_algebra.iter().any(Dominance::holds) && algebra_le_quotient.iter().any(Dominance::holds) {
        GrowthClassification::Equivalent
    } else {
        GrowthClassification::Inconclusive
    };
    Ok(GrowthComparisonReport { algebra: a, quotient: q, quotient_le_algebra, algebra_le_quotient, gk, classification })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DominanceRecord {
    pub c: String,
    pub k: usize,
    pub holds: bool,
    pub tested_up_to: usize,
    pub violations: usize,
    pub first_violation: Option<usize>,
    pub last_violation: Option<usize>,
}

impl From<&Dominance> for DominanceRecord {
    fn from(d: &Dominance) -> Self {
        DominanceRecord {
            c: to_string(&d.c),
            k: d.k,
            holds: d.holds(),
            tested_up_to: d.tested_up_to,
            violations: d.violations,
            first_violation: d.first_violation,
            last_violation: d.last_violation,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GkRecord {
    pub window: (usize, usize),
    pub estimate: f64,
    pub least_squares_slope: f64,
    pub exact_degree: Option<usize>,
    pub unbounded: bool,
}

impl From<&GkEstimate> for GkRecord {
    fn from(e: &GkEstimate) -> Self {
        GkRecord {
            window: e.window,
            estimate: e.estimate,
            least_squares_slope: e.least_squares_slope,
            exact_degree: e.exact_degree,
            unbounded: e.unbounded,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthComparisonRecord {
    pub statement: String,
    pub algebra_label: String,
    pub quotient_label: String,
    pub range: usize,
    pub classification: String,
    pub first_strict: Option<usize>,
    pub quotient_le_algebra: Vec<DominanceRecord>,
    pub algebra_le_quotient: Vec<DominanceRecord>,
    pub gk_algebra: Option<GkRecord>,
    pub gk_quotient: Option<GkRecord>,
}

impl GrowthComparisonReport {
    pub fn to_record(&self) -> GrowthComparisonRecord {
        let (classification, first_strict) = match self.classification {
            GrowthClassification::QuotientStrictlySmaller { first_strict } => {
                ("quotient_strictly_smaller", Some(first_strict))
            }
            GrowthClassification::Equivalent => ("equivalent", None),
            GrowthClassification::Inconclusive => ("inconclusive", None),
        };
        GrowthComparisonRecord {
            statement: GROWTH_STATEMENT.to_string(),
            algebra_label: self.algebra.label().to_string(),
            quotient_label: self.quotient.label().to_string(),
            range: self.algebra.len(),
            classification: classification.to_string(),
            first_strict,
            quotient_le_algebra: self.quotient_le_algebra.iter().map(DominanceRecord::from).collect(),
            algebra_le_quotient: self.algebra_le_quotient.iter().map(DominanceRecord::from).collect(),
            gk_algebra: self.gk.as_ref().map(|(a, _)| GkRecord::from(a)),
            gk_quotient: self.gk.as_ref().map(|(_, q)| GkRecord::from(q)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismCertificate {
    pub inverse: Endomorphism,
    /// `(deg ψ - 1)·deg φ`, the degree of `φ(J(ψ))`.
    pub jacobian_bound: usize,
    pub jacobian_det: CommPoly,
}

impl AutomorphismCertificate {
    /// `φ(J(ψ))`, returned only when it inverts `J(φ)` on both sides.
    ///
    /// The chain rule makes this the inverse; it is computed on request since
    /// its size grows with `deg ψ · deg φ`.
    pub fn jacobian_inverse(&self, phi: &Endomorphism) -> Result<Option<TensorMatrix>, EndoError> {
        let j = jacobian(phi);
        let candidate = phi.apply_to_tensor_matrix(&jacobian(&self.inverse))?;
        Ok((j.mul(&candidate).is_identity() && candidate.mul(&j).is_identity()).then_some(candidate))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutomorphismOutcome {
    Certified(AutomorphismCertificate),
    /// No certificate of degree `<= bound`; not a refutation.
    Unknown {
        bound: usize,
    },
    NotSurjective(Obstruction),
}

impl AutomorphismOutcome {
    pub fn certificate(&self) -> Option<&AutomorphismCertificate> {
        match self {
            AutomorphismOutcome::Certified(c) => Some(c),
            _ => None,
        }
    }
}

/// Inverts `φ` through a degree-`bound` epimorphism certificate.
///
/// Both compositions are checked to be the identity.
pub fn certify_automorphism(phi: &Endomorphism, bound: usize) -> Result<AutomorphismOutcome, EndoError> {
    let cert = match is_epimorphism_bounded_degree(phi, bound)? {
        EpimorphismSearch::Certificate(g) => g,
        EpimorphismSearch::Unknown { bound } => return Ok(AutomorphismOutcome::Unknown { bound }),
        EpimorphismSearch::NotSurjective(o) => return Ok(AutomorphismOutcome::NotSurjective(o)),
    };
    let inverse = Endomorphism::new(phi.gens(), cert)?;
    // the search already verified ψ(φ(x)) = x exactly; this is the other side
    if !substitution_is_identity(phi.images(), inverse.images())? {
        return Ok(AutomorphismOutcome::Unknown { bound });
    }
    let jacobian_bound = (inverse.degree().max(1) as usize - 1) * phi.degree().max(1) as usize;
    let jacobian_det = abelianized_jacobian_det(phi);
    Ok(AutomorphismOutcome::Certified(AutomorphismCertificate { inverse, jacobian_bound, jacobian_det }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomorphismRecord {
    pub statement: String,
    pub generators: Vec<String>,
    pub images: Vec<String>,
    pub degree_bound: usize,
    pub outcome: String,
    pub inverse: Option<Vec<String>>,
    pub jacobian_bound: Option<usize>,
    pub jacobian_inverse: Option<Vec<Vec<String>>>,
    pub jacobian_det: Option<String>,
    pub obstruction: Option<String>,
}

impl AutomorphismOutcome {
    /// For a certified map this also computes the Jacobian inverse.
    pub fn to_record(&self, phi: &Endomorphism, bound: usize) -> Result<AutomorphismRecord, EndoError> {
        let mut rec = AutomorphismRecord {
            statement: AUTOMORPHISM_STATEMENT.to_string(),
            generators: phi.gens().names().to_vec(),
            images: phi.images().iter().map(ToString::to_string).collect(),
            degree_bound: bound,
            outcome: String::new(),
            inverse: None,
            jacobian_bound: None,
            jacobian_inverse: None,
            jacobian_det: None,
            obstruction: None,
        };
        match self {
            AutomorphismOutcome::Certified(c) => {
                rec.outcome = "automorphism".into();
                rec.inverse = Some(c.inverse.images().iter().map(ToString::to_string).collect());
                rec.jacobian_bound = Some(c.jacobian_bound);
                rec.jacobian_inverse = c.jacobian_inverse(phi)?.as_ref().map(TensorMatrix::to_strings);
                rec.jacobian_det = Some(c.jacobian_det.to_string());
            }
            AutomorphismOutcome::Unknown { .. } => rec.outcome = "unknown".into(),
            AutomorphismOutcome::NotSurjective(Obstruction::SingularLinearPart { rank }) => {
                rec.outcome = "not_surjective".into();
                rec.obstruction = Some(format!(
                    "linear part has rank {rank} < {}, so the images cannot generate the degree-one part",
                    phi.gens().len()
                ));
            }
        }
        Ok(rec)
    }
}

/// Whether the abelianized Jacobian determinant is a nonzero constant.
pub fn has_unit_jacobian_det(det: &CommPoly) -> bool {
    det.as_constant().is_some_and(|c| !c.is_zero())
}
