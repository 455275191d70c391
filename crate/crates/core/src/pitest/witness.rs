use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{eval_on_generic_matrices, Budget, GenericMatrixSpace, PiError};
use crate::algebra::{Fp, RatMatrix, SquareMatrix, UnitalAlgebra};
use crate::freealg::NcPoly;
use crate::rational::{int, Rational};

/// `2^61 - 1`, used to screen candidates before exact evaluation.
const SCREEN_PRIME: u64 = (1 << 61) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessMethod {
    MatrixUnits,
    SmallIntegers,
    Symbolic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    /// Least `n` with `f ∉ I_n`.
    pub n: usize,
    pub witness: Vec<RatMatrix>,
    pub value: RatMatrix,
    pub method: WitnessMethod,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationConfig {
    pub seed: u64,
    /// Random small-integer tuples tried per rung.
    pub random_trials: usize,
    /// Matrix-unit enumeration is skipped on rungs with more tuples than this.
    pub max_unit_tuples: usize,
    pub budget: Option<Budget>,
}

impl Default for SeparationConfig {
    fn default() -> Self {
        SeparationConfig { seed: 0, random_trials: 64, max_unit_tuples: 100_000, budget: None }
    }
}

pub fn separation_witness(f: &NcPoly) -> Result<Separation, PiError> {
    separation_witness_with(f, &SeparationConfig::default())
}

/// Finds the least `n` such that `f` is not an identity of `n × n` matrices,
/// together with rational matrices on which `f` is nonzero.
///
/// Rungs `n = 1, 2, …` are tried up to `max(deg f, 1)`. On each rung the
/// candidates are tuples of matrix units (fewest nonzero matrices first),
/// then random matrices with entries in `[-3, 3]`; if none separates, the
/// generic evaluation decides, and a nonzero one yields a witness by
/// specialising its variables to small integers.
pub fn separation_witness_with(f: &NcPoly, config: &SeparationConfig) -> Result<Separation, PiError> {
    if f.is_zero() {
        return Err(PiError::ZeroPolynomial);
    }
    let bound = (f.degree() as usize).max(1);
    let screen = f.terms().all(|(_, c)| Fp::from_rational(c, SCREEN_PRIME).is_some());
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for n in 1..=bound {
        if let Some(budget) = &config.budget {
            budget.check(f, n)?;
        }
        if let Some(found) = search_rung(f, n, config, screen, &mut rng)? {
            return Ok(found);
        }
    }
    Err(PiError::LadderBoundExceeded { bound })
}

fn search_rung(
    f: &NcPoly,
    n: usize,
    config: &SeparationConfig,
    screen: bool,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Separation>, PiError> {
    let count = f.gens().len();
    let try_entries = |entries: &[Vec<i64>], method| -> Result<Option<Separation>, PiError> {
        if screen {
            let mats: Vec<SquareMatrix<Fp>> = entries
                .iter()
                .map(|e| {
                    SquareMatrix::from_fn(n, |i, j| {
                        Fp::new(e[i * n + j].rem_euclid(SCREEN_PRIME as i64) as u64, SCREEN_PRIME)
                    })
                })
                .collect();
            if f.substitute(&mats)?.is_zero_elem() {
                return Ok(None);
            }
        }
        let witness: Vec<RatMatrix> =
            entries.iter().map(|e| SquareMatrix::from_fn(n, |i, j| int(e[i * n + j]))).collect();
        let value = f.substitute(&witness)?;
        Ok((!value.is_zero_elem()).then_some(Separation { n, witness, value, method }))
    };

    let choices = n * n + 1;
    let total = (choices as u128).checked_pow(count as u32).unwrap_or(u128::MAX);
    if total <= config.max_unit_tuples as u128 {
        // Slot value `n²` means the zero matrix and sorts last among equal supports.
        let mut tuples: Vec<Vec<usize>> = (0..total as usize)
            .map(|mut code| {
                let mut t = vec![0; count];
                for slot in t.iter_mut().rev() {
                    *slot = code % choices;
                    code /= choices;
                }
                t
            })
            .collect();
        tuples.sort_by_key(|t| (t.iter().filter(|&&u| u < n * n).count(), t.clone()));
        for t in tuples {
            let entries: Vec<Vec<i64>> = t.iter().map(|&u| (0..n * n).map(|k| i64::from(k == u)).collect()).collect();
            if let Some(found) = try_entries(&entries, WitnessMethod::MatrixUnits)? {
                return Ok(Some(found));
            }
        }
    }

    for _ in 0..config.random_trials {
        let entries: Vec<Vec<i64>> = (0..count).map(|_| (0..n * n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        if let Some(found) = try_entries(&entries, WitnessMethod::SmallIntegers)? {
            return Ok(Some(found));
        }
    }

    let space = GenericMatrixSpace::new(n, count)?;
    let generic = eval_on_generic_matrices(f, &space)?;
    let Some((_, _, entry)) = generic.first_nonzero() else {
        return Ok(None);
    };
    let mut rest = entry.clone();
    let mut point = vec![Rational::zero(); space.num_vars()];
    for (v, slot) in point.iter_mut().enumerate() {
        let mut a = 0i64;
        loop {
            let next = rest.substitute_var(v, &int(a));
            if !next.is_zero() {
                rest = next;
                *slot = int(a);
                break;
            }
            a += 1;
        }
    }
    let witness: Vec<RatMatrix> =
        (0..count).map(|k| SquareMatrix::from_fn(n, |i, j| point[space.var_index(k, i, j)].clone())).collect();
    let value = f.substitute(&witness)?;
    assert!(!value.is_zero_elem(), "specialisation keeps a nonzero entry nonzero");
    Ok(Some(Separation { n, witness, value, method: WitnessMethod::Symbolic }))
}

/// JSON-friendly witness: rationals as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub n: usize,
    pub matrices: Vec<Vec<Vec<String>>>,
    pub value: Vec<Vec<String>>,
    pub method: WitnessMethod,
}

impl Separation {
    pub fn to_record(&self) -> WitnessRecord {
        WitnessRecord {
            n: self.n,
            matrices: self.witness.iter().map(RatMatrix::to_strings).collect(),
            value: self.value.to_strings(),
            method: self.method,
        }
    }

    /// Re-evaluates `f` on the witness and compares with the stored value.
    pub fn verify(&self, f: &NcPoly) -> bool {
        !self.value.is_zero_elem() && f.substitute(&self.witness).map(|v| v == self.value).unwrap_or(false)
    }
}

impl WitnessRecord {
    pub fn to_separation(&self) -> Option<Separation> {
        let witness = self.matrices.iter().map(|m| RatMatrix::from_strings(m)).collect::<Option<Vec<_>>>()?;
        Some(Separation { n: self.n, witness, value: RatMatrix::from_strings(&self.value)?, method: self.method })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{parse_poly, GeneratorSet};
    use crate::pitest::standard_polynomial;

    fn p(s: &str) -> NcPoly {
        parse_poly(s, &GeneratorSet::standard(2)).unwrap()
    }

    #[test]
    fn single_variable() {
        let f = parse_poly("x", &GeneratorSet::standard(1)).unwrap();
        let s = separation_witness(&f).unwrap();
        assert_eq!(s.n, 1);
        assert_eq!(s.witness, vec![RatMatrix::identity(1)]);
        assert_eq!(s.value, RatMatrix::identity(1));
    }

    #[test]
    fn linear_form_uses_first_unit() {
        let s = separation_witness(&p("x + y")).unwrap();
        assert_eq!((s.n, s.witness.clone()), (1, vec![RatMatrix::identity(1), RatMatrix::zero(1)]));
    }

    #[test]
    fn commutator_needs_two() {
        let s = separation_witness(&p("x*y - y*x")).unwrap();
        assert_eq!(s.n, 2);
        assert_eq!(s.witness, vec![RatMatrix::unit(2, 0, 0), RatMatrix::unit(2, 0, 1)]);
        assert_eq!(s.value, RatMatrix::unit(2, 0, 1));
        assert_eq!(s.method, WitnessMethod::MatrixUnits);
    }

    #[test]
    fn s4_needs_three() {
        let f = standard_polynomial(4);
        let s = separation_witness(&f).unwrap();
        assert_eq!(s.n, 3);
        assert!(s.verify(&f));
    }

    #[test]
    fn symbolic_fallback_alone() {
        let config = SeparationConfig { max_unit_tuples: 0, random_trials: 0, ..Default::default() };
        let f = p("x*y - y*x + 1/2*x^2*y - 1/2*y*x^2");
        let s = separation_witness_with(&f, &config).unwrap();
        assert_eq!((s.n, s.method), (2, WitnessMethod::Symbolic));
        assert!(s.verify(&f));
    }

    #[test]
    fn errors() {
        assert_eq!(separation_witness(&p("0")), Err(PiError::ZeroPolynomial));
        let tight = SeparationConfig { budget: Some(Budget { max_n: 1, max_degree: 6 }), ..Default::default() };
        assert!(matches!(separation_witness_with(&p("x*y - y*x"), &tight), Err(PiError::BudgetExceeded(_))));
    }

    #[test]
    fn constants_separate_at_one() {
        let s = separation_witness(&p("3")).unwrap();
        assert_eq!(s.n, 1);
        assert_eq!(s.value, RatMatrix::from_i64(&[&[3]]));
    }

    #[test]
    fn record_roundtrip() {
        let s = separation_witness(&p("x*y - y*x")).unwrap();
        let rec = s.to_record();
        assert_eq!(rec.value, vec![vec!["0".to_string(), "1".to_string()], vec!["0".to_string(), "0".to_string()]]);
        assert_eq!(rec.to_separation().unwrap(), s);
    }
}
