//! Endomorphisms of `Q<X>` and the noncommutative Jacobian.

mod epi;
mod file;
mod jacobian;
mod tame;
mod tensor;
mod verify;

pub use epi::{is_epimorphism_bounded_degree, EpimorphismSearch, Obstruction};
pub use file::{parse_endo_file, EndoFileError};
pub use jacobian::{
    abelianized_jacobian_det, jacobian, jacobian_inverse_bounded_degree, partial_derivative, JacobianInverse,
};
pub use tame::tame_inverse;
pub use tensor::{TensorMatrix, TensorPoly};
pub use verify::substitution_is_identity;

use std::fmt;

use thiserror::Error;

use crate::algebra::RatMatrix;
use crate::freealg::{AlgebraError, GeneratorSet, NcPoly, Word};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EndoError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("degree bound must be at least {min}, got {got}")]
    InvalidBound { min: usize, got: usize },
}

/// Unital algebra endomorphism `x_i ↦ images[i]` of `Q<X>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    gens: GeneratorSet,
    images: Vec<NcPoly>,
}

impl Endomorphism {
    pub fn new(gens: &GeneratorSet, images: Vec<NcPoly>) -> Result<Self, AlgebraError> {
        if images.len() != gens.len() {
            return Err(AlgebraError::ArityMismatch { expected: gens.len(), actual: images.len() });
        }
        for img in &images {
            gens.check_same(img.gens())?;
        }
        Ok(Endomorphism { gens: gens.clone(), images })
    }

    pub fn identity(gens: &GeneratorSet) -> Self {
        Endomorphism { gens: gens.clone(), images: (0..gens.len()).map(|i| NcPoly::var(gens, i)).collect() }
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn images(&self) -> &[NcPoly] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &NcPoly {
        &self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.gens)
    }

    /// Maximal degree of an image.
    pub fn degree(&self) -> i64 {
        self.images.iter().map(NcPoly::degree).max().unwrap_or(-1)
    }

    pub fn apply(&self, f: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.gens.check_same(f.gens())?;
        f.substitute(&self.images)
    }

    /// `(self ∘ other)(x_i) = self(other(x_i))`.
    pub fn compose(&self, other: &Endomorphism) -> Result<Endomorphism, AlgebraError> {
        self.gens.check_same(&other.gens)?;
        let images = other.images.iter().map(|g| self.apply(g)).collect::<Result<Vec<_>, _>>()?;
        Ok(Endomorphism { gens: self.gens.clone(), images })
    }

    /// Applies `self` to both tensor factors.
    pub fn apply_to_tensor(&self, t: &TensorPoly) -> Result<TensorPoly, AlgebraError> {
        self.gens.check_same(t.gens())?;
        t.map_factors(&self.images)
    }

    pub fn apply_to_tensor_matrix(&self, m: &TensorMatrix) -> Result<TensorMatrix, AlgebraError> {
        self.gens.check_same(m.gens())?;
        m.map_factors(&self.images)
    }

    /// Constant terms of the images.
    pub fn constant_parts(&self) -> Vec<Rational> {
        self.images.iter().map(NcPoly::constant_term).collect()
    }

    /// Row `i`, column `j`: coefficient of `x_j` in `φ(x_i)`.
    pub fn linear_part(&self) -> RatMatrix {
        let l = self.gens.len();
        RatMatrix::from_fn(l, |i, j| self.images[i].coefficient(&Word::letter(j)))
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: {}", self.gens)?;
        for (i, img) in self.images.iter().enumerate() {
            writeln!(f, "{} -> {}", self.gens.name(i), img)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_poly;

    fn g() -> GeneratorSet {
        GeneratorSet::standard(2)
    }

    fn p(s: &str) -> NcPoly {
        parse_poly(s, &g()).unwrap()
    }

    fn endo(x: &str, y: &str) -> Endomorphism {
        Endomorphism::new(&g(), vec![p(x), p(y)]).unwrap()
    }

    #[test]
    fn apply_examples() {
        let f = p("x^2*y - 1/3*y + 4");
        assert_eq!(Endomorphism::identity(&g()).apply(&f).unwrap(), f);
        assert_eq!(endo("x^2", "y").apply(&p("x*y + 1")).unwrap(), p("x^2*y + 1"));
        assert_eq!(endo("x", "y + x^2").apply(&p("y - x^2")).unwrap(), p("y"));
    }

    #[test]
    fn compose_examples() {
        let phi = endo("x", "y + x^2");
        let psi = endo("x", "y - x^2");
        assert_eq!(phi.compose(&Endomorphism::identity(&g())).unwrap(), phi);
        assert!(phi.compose(&psi).unwrap().is_identity());
        let swap = endo("y", "x");
        assert!(swap.compose(&swap).unwrap().is_identity());
    }

    #[test]
    fn compose_order() {
        // (a∘b)(x) = a(b(x)): b: x ↦ y, a: y ↦ y^2 gives x ↦ y^2
        let a = endo("x", "y^2");
        let b = endo("y", "x");
        assert_eq!(a.compose(&b).unwrap().image(0), &p("y^2"));
    }

    #[test]
    fn arity_checked() {
        assert!(Endomorphism::new(&g(), vec![p("x")]).is_err());
        let other = GeneratorSet::standard(3);
        let q = parse_poly("x", &other).unwrap();
        assert!(endo("x", "y").apply(&q).is_err());
    }

    #[test]
    fn linear_part_reads_degree_one() {
        let phi = endo("2*x + y + x*y", "3 + y");
        assert_eq!(phi.linear_part(), RatMatrix::from_i64(&[&[2, 1], &[0, 1]]));
        assert_eq!(phi.constant_parts()[1], crate::rational::int(3));
    }
}
