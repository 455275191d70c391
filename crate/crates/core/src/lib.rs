//! Exact computer algebra for the free associative algebra over the rationals.
//!
//! The crate is organised around the computable ingredients of the Hopfian
//! property of `Q<X>`:
//!
//! * [`freealg`]: sparse noncommutative polynomials, parsing and substitution.
//! * [`endo`]: endomorphisms, free partial derivatives, the Jacobian matrix over
//!   `Q<X> ⊗ Q<X>^op`, and bounded-degree inverse searches.
//! * [`pitest`]: generic matrices, exact and randomized identity testing, and
//!   separation witnesses.
//! * [`growth`]: growth series, factor complexity of recurrent words,
//!   Gelfand-Kirillov dimension estimates and growth-rate comparison.
//! * [`hopf`]: harnesses assembling the above into verified reports.

pub mod algebra;
pub mod comm;
pub mod endo;
pub mod freealg;
pub mod growth;
pub mod hopf;
pub mod linalg;
pub mod pitest;
pub mod rational;

pub use algebra::{Fp, RatMatrix, SquareMatrix, UnitalAlgebra};
pub use comm::CommPoly;
pub use endo::{Endomorphism, TensorMatrix, TensorPoly};
pub use freealg::{AlgebraError, GeneratorSet, NcPoly, ParseError, Word};
pub use growth::{GrowthSeries, RecurrentWordSpec};

pub use rational::Rational;
