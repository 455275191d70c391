use num_traits::Zero;

use super::{Endomorphism, TensorMatrix, TensorPoly};
use crate::algebra::UnitalAlgebra;
use crate::comm::CommPoly;
use crate::freealg::{AlgebraError, NcPoly, Word};
use crate::linalg;
use crate::rational::Rational;

/// Free partial derivative `∂f/∂x_j`.
///
/// On a word `x_{i1}⋯x_{ik}` this is the sum, over positions `t` with
/// `i_t = j`, of `x_{i1}⋯x_{i(t-1)} ⊗ x_{i(t+1)}⋯x_{ik}`.
pub fn partial_derivative(f: &NcPoly, j: usize) -> Result<TensorPoly, AlgebraError> {
    let gens = f.gens();
    if j >= gens.len() {
        return Err(AlgebraError::IndexOutOfRange { index: j, count: gens.len() });
    }
    let mut terms = Vec::new();
    for (w, c) in f.terms() {
        let letters = w.letters();
        for (t, &g) in letters.iter().enumerate() {
            if g as usize == j {
                let prefix = Word::from_letters(letters[..t].to_vec());
                let suffix = Word::from_letters(letters[t + 1..].to_vec());
                terms.push(((prefix, suffix), c.clone()));
            }
        }
    }
    Ok(TensorPoly::from_terms(gens, terms))
}

/// Jacobian matrix: rows are images, columns are derivation variables.
pub fn jacobian(phi: &Endomorphism) -> TensorMatrix {
    let gens = phi.gens();
    TensorMatrix::from_fn(gens, gens.len(), |i, j| {
        partial_derivative(phi.image(i), j).expect("column index is a generator index")
    })
}

/// Outcome of the bounded-degree inverse search for a Jacobian matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JacobianInverse {
    TwoSided(TensorMatrix),
    /// `J·B = I` holds but `B·J = I` does not.
    RightOnly(TensorMatrix),
    /// `B·J = I` holds but `J·B = I` does not.
    LeftOnly(TensorMatrix),
    /// The `1⊗1` coefficient matrix is singular, so no inverse exists at any bound.
    ConstantTermSingular,
    NoneWithinBound {
        bound: usize,
    },
}

impl JacobianInverse {
    pub fn two_sided(&self) -> Option<&TensorMatrix> {
        match self {
            JacobianInverse::TwoSided(b) => Some(b),
            _ => None,
        }
    }
}

/// Searches for `B` with entries of total tensor degree at most `bound` and
/// `J·B = B·J = I`.
///
/// The degree-`k` component of `J·B = I` reads `J_0 B_k = -Σ_{i≥1} J_i B_{k-i}`,
/// so the components are solved one degree at a time against the constant
/// matrix `J_0`. Every inverse of bounded degree coincides with this graded
/// solution, so if the components beyond `bound` do not vanish there is none.
pub fn jacobian_inverse_bounded_degree(j: &TensorMatrix, bound: usize) -> JacobianInverse {
    let gens = j.gens().clone();
    let Some(inv0) = linalg::inverse(&j.constant_term_matrix()) else {
        return JacobianInverse::ConstantTermSingular;
    };
    let inv0 = TensorMatrix::from_rational(&gens, &inv0);
    let deg_j = j.degree().max(0) as usize;
    let parts: Vec<TensorMatrix> = (0..=deg_j).map(|k| j.homogeneous(k)).collect();

    let mut comps: Vec<TensorMatrix> = vec![inv0.clone()];
    let mut trailing_zero = 0usize;
    let mut k = 1;
    // Components past `bound + deg_j` are determined by the `deg_j` before them.
    while k <= bound + deg_j {
        if deg_j == 0 || trailing_zero >= deg_j {
            break;
        }
        let mut acc = TensorMatrix::zero(&gens);
        for i in 1..=deg_j.min(k) {
            let prev = &comps[k - i];
            if !prev.is_zero() && !parts[i].is_zero() {
                acc = acc.add(&parts[i].mul(prev));
            }
        }
        let next = inv0.mul(&acc).scale(&-Rational::from_integer(1.into()));
        if next.is_zero() {
            trailing_zero += 1;
        } else {
            trailing_zero = 0;
            if k > bound {
                return JacobianInverse::NoneWithinBound { bound };
            }
        }
        comps.push(next);
        k += 1;
    }

    let candidate =
        comps
            .into_iter()
            .take(bound + 1)
            .fold(TensorMatrix::zero(&gens), |acc, c| if c.is_zero() { acc } else { acc.add(&c) });
    let right = j.mul(&candidate).is_identity();
    let left = candidate.mul(j).is_identity();
    match (right, left) {
        (true, true) => JacobianInverse::TwoSided(candidate),
        (true, false) => JacobianInverse::RightOnly(candidate),
        (false, true) => JacobianInverse::LeftOnly(candidate),
        (false, false) => JacobianInverse::NoneWithinBound { bound },
    }
}

fn abelianize(f: &NcPoly) -> CommPoly {
    let l = f.gens().len();
    CommPoly::from_terms(
        l,
        f.terms().map(|(w, c)| {
            let mut e = vec![0u32; l];
            for &g in w.letters() {
                e[g as usize] += 1;
            }
            (e, c.clone())
        }),
    )
}

fn determinant(m: &[Vec<CommPoly>], nvars: usize) -> CommPoly {
    let n = m.len();
    if n == 0 {
        return CommPoly::one(nvars);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = CommPoly::zero(nvars);
    for (col, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<CommPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = entry.times(&determinant(&minor, nvars));
        det = if col % 2 == 0 { det.plus(&term) } else { det.plus(&term.scaled(&-Rational::from_integer(1.into()))) };
    }
    det
}

/// Determinant of the classical Jacobian of the abelianized images.
pub fn abelianized_jacobian_det(phi: &Endomorphism) -> CommPoly {
    let l = phi.gens().len();
    let ab: Vec<CommPoly> = phi.images().iter().map(abelianize).collect();
    let m: Vec<Vec<CommPoly>> = ab.iter().map(|f| (0..l).map(|j| f.partial_derivative(j)).collect()).collect();
    let det = determinant(&m, l);
    debug_assert!(det.terms().all(|(_, c)| !c.is_zero()));
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{parse_poly, GeneratorSet};
    use crate::rational::int;

    fn g() -> crate::freealg::GeneratorSet {
        GeneratorSet::standard(2)
    }

    fn p(s: &str) -> NcPoly {
        parse_poly(s, &g()).unwrap()
    }

    fn t(a: &str, b: &str) -> TensorPoly {
        TensorPoly::tensor(&p(a), &p(b))
    }

    fn endo(x: &str, y: &str) -> Endomorphism {
        Endomorphism::new(&g(), vec![p(x), p(y)]).unwrap()
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(partial_derivative(&p("x"), 0).unwrap(), TensorPoly::one(&g()));
        assert!(partial_derivative(&p("y"), 0).unwrap().is_zero());
        assert_eq!(partial_derivative(&p("x^2"), 0).unwrap(), t("x", "1").add(&t("1", "x")));
        assert_eq!(partial_derivative(&p("x*y*x"), 1).unwrap(), t("x", "x"));
        assert!(partial_derivative(&p("x"), 2).is_err());
    }

    #[test]
    fn jacobian_examples() {
        assert!(jacobian(&Endomorphism::identity(&g())).is_identity());
        let j = jacobian(&endo("x", "y + x^2"));
        assert_eq!(j.get(0, 0), &TensorPoly::one(&g()));
        assert!(j.get(0, 1).is_zero());
        assert_eq!(j.get(1, 0), &t("x", "1").add(&t("1", "x")));
        assert_eq!(j.get(1, 1), &TensorPoly::one(&g()));
        let s = jacobian(&endo("y", "x"));
        assert!(s.get(0, 0).is_zero() && s.get(1, 1).is_zero());
        assert_eq!(s.get(0, 1), &TensorPoly::one(&g()));
    }

    #[test]
    fn inverse_of_elementary_jacobian() {
        let j = jacobian(&endo("x", "y + x^2"));
        let inv = jacobian_inverse_bounded_degree(&j, 1);
        let b = inv.two_sided().expect("triangular Jacobian is invertible");
        assert_eq!(b.get(1, 0), &t("x", "1").add(&t("1", "x")).scale(&int(-1)));
        assert_eq!(b.get(0, 0), &TensorPoly::one(&g()));
        // bound too small for the off-diagonal term
        assert_eq!(jacobian_inverse_bounded_degree(&j, 0), JacobianInverse::NoneWithinBound { bound: 0 });
    }

    #[test]
    fn identity_inverse_at_zero() {
        let id = TensorMatrix::identity(&g());
        assert_eq!(jacobian_inverse_bounded_degree(&id, 0), JacobianInverse::TwoSided(id));
    }

    #[test]
    fn constant_term_obstruction() {
        let j = jacobian(&endo("x^2", "y"));
        for d in 0..=3 {
            assert_eq!(jacobian_inverse_bounded_degree(&j, d), JacobianInverse::ConstantTermSingular);
        }
    }

    #[test]
    fn abelianized_determinants() {
        assert_eq!(abelianized_jacobian_det(&Endomorphism::identity(&g())), CommPoly::one(2));
        assert_eq!(abelianized_jacobian_det(&endo("x", "y + x^2")), CommPoly::one(2));
        assert_eq!(abelianized_jacobian_det(&endo("x^2", "y")), CommPoly::var(2, 0).scaled(&int(2)));
    }
}
