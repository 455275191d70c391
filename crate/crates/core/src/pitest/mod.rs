//! Polynomial identities of matrix algebras.
//!
//! The identities of `n × n` matrices form a T-ideal `I_n` of `Q<X>`. It is
//! never materialised: membership `f ∈ I_n` is decided by evaluating `f` on
//! generic matrices, whose entries are independent commuting variables. Over
//! an infinite field `f ∈ I_n` exactly when that evaluation vanishes.

mod random;
mod witness;

pub use random::{is_probable_prime, randomized_identity_test, IdentityVerdict};
pub use witness::{
    separation_witness, separation_witness_with, Separation, SeparationConfig, WitnessMethod, WitnessRecord,
};

use thiserror::Error;

use crate::algebra::{SquareMatrix, UnitalAlgebra};
use crate::comm::CommPoly;
use crate::freealg::{AlgebraError, GeneratorSet, NcPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PiError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("matrix size must be at least 1")]
    InvalidSize,
    #[error("trial count must be at least 1")]
    InvalidTrials,
    #[error("invalid modulus {modulus}: {reason}")]
    InvalidModulus { modulus: u64, reason: String },
    #[error("the zero polynomial is an identity of every matrix algebra; no witness exists")]
    ZeroPolynomial,
    #[error("budget exhausted: {0}")]
    BudgetExceeded(String),
    #[error("no separating matrix size up to the degree bound {bound}; the ladder refuses to go further")]
    LadderBoundExceeded { bound: usize },
}

/// Limits on exact generic-matrix evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_n: usize,
    pub max_degree: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_n: 4, max_degree: 6 }
    }
}

impl Budget {
    pub fn check(&self, f: &NcPoly, n: usize) -> Result<(), PiError> {
        if n > self.max_n {
            return Err(PiError::BudgetExceeded(format!("matrix size {n} exceeds max n = {}", self.max_n)));
        }
        if f.degree() > self.max_degree as i64 {
            return Err(PiError::BudgetExceeded(format!(
                "degree {} exceeds max degree = {}",
                f.degree(),
                self.max_degree
            )));
        }
        Ok(())
    }
}

/// `count` generic `n × n` matrices; variable `(k, i, j)` has index `k·n² + i·n + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericMatrixSpace {
    n: usize,
    count: usize,
}

impl GenericMatrixSpace {
    pub fn new(n: usize, count: usize) -> Result<Self, PiError> {
        if n == 0 || count == 0 {
            return Err(PiError::InvalidSize);
        }
        Ok(GenericMatrixSpace { n, count })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn num_vars(&self) -> usize {
        self.count * self.n * self.n
    }

    pub fn var_index(&self, k: usize, i: usize, j: usize) -> usize {
        k * self.n * self.n + i * self.n + j
    }

    /// `x_12`-style names built from the generator names, 1-based.
    pub fn variable_names(&self, gens: &GeneratorSet) -> Vec<String> {
        let mut out = Vec::with_capacity(self.num_vars());
        for k in 0..self.count {
            let base = if k < gens.len() { gens.name(k).to_string() } else { format!("m{}", k + 1) };
            for i in 1..=self.n {
                for j in 1..=self.n {
                    out.push(if self.n <= 9 { format!("{base}_{i}{j}") } else { format!("{base}_{i}_{j}") });
                }
            }
        }
        out
    }
}

/// The `k`-th generic matrix (0-based).
pub fn generic_matrix(space: &GenericMatrixSpace, k: usize) -> Result<SquareMatrix<CommPoly>, PiError> {
    if k >= space.count {
        return Err(AlgebraError::IndexOutOfRange { index: k, count: space.count }.into());
    }
    let nv = space.num_vars();
    Ok(SquareMatrix::from_fn(space.n, |i, j| CommPoly::var(nv, space.var_index(k, i, j))))
}

pub fn eval_on_generic_matrices(f: &NcPoly, space: &GenericMatrixSpace) -> Result<SquareMatrix<CommPoly>, PiError> {
    let l = f.gens().len();
    if l > space.count {
        return Err(AlgebraError::ArityMismatch { expected: space.count, actual: l }.into());
    }
    let mats = (0..l).map(|k| generic_matrix(space, k)).collect::<Result<Vec<_>, _>>()?;
    Ok(f.substitute(&mats)?)
}

/// Decides `f ∈ I_n` by exact generic-matrix evaluation.
pub fn is_matrix_identity(f: &NcPoly, n: usize) -> Result<bool, PiError> {
    let space = GenericMatrixSpace::new(n, f.gens().len())?;
    Ok(eval_on_generic_matrices(f, &space)?.is_zero_elem())
}

/// `s_k = Σ_σ sign(σ) x_σ(1) ⋯ x_σ(k)` over `k` standard generators.
pub fn standard_polynomial(k: usize) -> NcPoly {
    assert!(k >= 1, "standard polynomial needs k >= 1");
    let gens = GeneratorSet::standard(k);
    let mut terms = Vec::new();
    let mut perm: Vec<u8> = (0..k as u8).collect();
    loop {
        let inversions =
            (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        terms.push((crate::freealg::Word::from_letters(perm.clone()), crate::rational::int(sign)));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    NcPoly::from_terms(&gens, terms)
}

fn next_permutation(p: &mut [u8]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
