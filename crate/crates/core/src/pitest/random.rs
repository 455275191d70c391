use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::PiError;
use crate::algebra::{Fp, RatMatrix, SquareMatrix, UnitalAlgebra};
use crate::freealg::NcPoly;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum IdentityVerdict {
    /// `f(witness) = value ≠ 0`, checked over `Q`.
    NonIdentity { trial: usize, witness: Vec<RatMatrix>, value: RatMatrix },
    /// Every trial vanished. `per_trial_bound = deg f / |S|` bounds the chance
    /// that a single trial misses a non-identity; `error_bound` is its power.
    ProbableIdentity { trials: usize, sample_size: u64, per_trial_bound: Rational, error_bound: f64 },
}

impl IdentityVerdict {
    pub fn is_nonidentity(&self) -> bool {
        matches!(self, IdentityVerdict::NonIdentity { .. })
    }
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_probable_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn validate_modulus(f: &NcPoly, p: u64, min_size: u64) -> Result<(), PiError> {
    let bad = |reason: String| Err(PiError::InvalidModulus { modulus: p, reason });
    if p >= 1 << 63 {
        return bad("must be below 2^63".into());
    }
    if !is_probable_prime(p) {
        return bad("not prime".into());
    }
    if p < min_size {
        return bad(format!("sample set needs at least {min_size} elements"));
    }
    if let Some((_, c)) = f.terms().find(|(_, c)| c.denom() >= &BigInt::from(p)) {
        return bad(format!("coefficient denominator {} is not below the modulus", c.denom()));
    }
    Ok(())
}

/// Evaluates `f` on `trials` random `n × n` matrices.
///
/// Entries come from `S = {-h, …, h}` with `|S| ≥ max(2·deg f·n, 2)`, or from
/// all of `F_p` when a modulus is given. A nonzero evaluation is always
/// re-checked over `Q` before it is reported.
pub fn randomized_identity_test(
    f: &NcPoly,
    n: usize,
    trials: usize,
    seed: u64,
    modulus: Option<u64>,
) -> Result<IdentityVerdict, PiError> {
    if n == 0 {
        return Err(PiError::InvalidSize);
    }
    if trials == 0 {
        return Err(PiError::InvalidTrials);
    }
    let deg = f.degree().max(0) as u64;
    let min_size = (2 * deg * n as u64).max(2);
    if let Some(p) = modulus {
        validate_modulus(f, p, min_size)?;
    }
    let half = min_size / 2;
    let sample_size = modulus.unwrap_or(2 * half + 1);
    let per_trial_bound = Rational::new(BigInt::from(deg), BigInt::from(sample_size));
    if f.is_zero() {
        return Ok(IdentityVerdict::ProbableIdentity {
            trials,
            sample_size,
            per_trial_bound: Rational::zero(),
            error_bound: 0.0,
        });
    }

    let count = f.gens().len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let entries: Vec<Vec<i64>> = (0..count)
            .map(|_| {
                (0..n * n)
                    .map(|_| match modulus {
                        Some(p) => {
                            let v = rng.gen_range(0..p);
                            if v > p / 2 {
                                v as i64 - p as i64
                            } else {
                                v as i64
                            }
                        }
                        None => rng.gen_range(-(half as i64)..=half as i64),
                    })
                    .collect()
            })
            .collect();
        let witness: Vec<RatMatrix> =
            entries.iter().map(|e| SquareMatrix::from_fn(n, |i, j| int(e[i * n + j]))).collect();
        let screened_nonzero = match modulus {
            Some(p) => {
                let mats: Vec<SquareMatrix<Fp>> = entries
                    .iter()
                    .map(|e| SquareMatrix::from_fn(n, |i, j| Fp::new(e[i * n + j].rem_euclid(p as i64) as u64, p)))
                    .collect();
                !f.substitute(&mats)?.is_zero_elem()
            }
            None => true,
        };
        if !screened_nonzero {
            continue;
        }
        let value = f.substitute(&witness)?;
        if !value.is_zero_elem() {
            return Ok(IdentityVerdict::NonIdentity { trial, witness, value });
        }
    }
    let bound = per_trial_bound.to_f64().unwrap_or(1.0);
    Ok(IdentityVerdict::ProbableIdentity {
        trials,
        sample_size,
        per_trial_bound,
        error_bound: bound.powi(trials as i32),
    })
}
