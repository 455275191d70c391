//! Target rings for substitution.
//!
//! A polynomial in `Q<X>` can be evaluated in any associative unital ring with
//! a rational scalar action. [`UnitalAlgebra`] captures exactly the operations
//! that evaluation needs; the unit and zero are produced from an existing
//! element so that size-carrying rings (matrices, polynomial rings with a
//! fixed variable count) need no global context.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::Rational;

pub trait UnitalAlgebra: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
    fn is_zero_elem(&self) -> bool;

    /// `self += c·rhs`; rings with large elements override this to avoid a copy.
    fn add_scaled(&mut self, rhs: &Self, c: &Rational) {
        *self = self.plus(&rhs.scaled(c));
    }
}

impl UnitalAlgebra for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

/// Element of the prime field `F_p`, `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    pub value: u64,
    pub modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Self {
        Fp { value: value % modulus, modulus }
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::new(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> Option<Fp> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.modulus - 2))
        }
    }

    /// Reduces a rational whose denominator is invertible mod `p`.
    pub fn from_rational(q: &Rational, modulus: u64) -> Option<Fp> {
        let m = BigInt::from(modulus);
        let reduce = |x: &BigInt| x.mod_floor(&m).to_u64().expect("residue fits in u64");
        let den = Fp::new(reduce(q.denom()), modulus).inverse()?;
        Some(Fp::new(reduce(q.numer()), modulus).times(&den))
    }
}

impl UnitalAlgebra for Fp {
    fn zero_like(&self) -> Self {
        Fp::new(0, self.modulus)
    }
    fn one_like(&self) -> Self {
        Fp::new(1, self.modulus)
    }
    fn plus(&self, rhs: &Self) -> Self {
        Fp::new(((self.value as u128 + rhs.value as u128) % self.modulus as u128) as u64, self.modulus)
    }
    fn times(&self, rhs: &Self) -> Self {
        Fp::new(((self.value as u128 * rhs.value as u128) % self.modulus as u128) as u64, self.modulus)
    }
    fn scaled(&self, c: &Rational) -> Self {
        let c = Fp::from_rational(c, self.modulus)
            .expect("scalar denominators are validated against the modulus before evaluation");
        self.times(&c)
    }
    fn is_zero_elem(&self) -> bool {
        self.value == 0
    }
}

/// Dense `n × n` matrix over a unital algebra, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareMatrix<E> {
    n: usize,
    entries: Vec<E>,
}

pub type RatMatrix = SquareMatrix<Rational>;

impl<E: UnitalAlgebra> SquareMatrix<E> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        assert!(n >= 1, "matrices must be at least 1x1");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let n = rows.len();
        assert!(n >= 1 && rows.iter().all(|r| r.len() == n), "rows must form a square matrix");
        SquareMatrix { n, entries: rows.into_iter().flatten().collect() }
    }

    /// The identity matrix, using `sample` to produce zero and one.
    pub fn identity_like(n: usize, sample: &E) -> Self {
        let (zero, one) = (sample.zero_like(), sample.one_like());
        Self::from_fn(n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.entries[i * self.n + j] = value;
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[E]> {
        self.entries.chunks(self.n)
    }

    pub fn map<F: UnitalAlgebra>(&self, f: impl FnMut(&E) -> F) -> SquareMatrix<F> {
        SquareMatrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    /// Position and value of the first nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &E)> {
        self.entries.iter().position(|e| !e.is_zero_elem()).map(|p| (p / self.n, p % self.n, &self.entries[p]))
    }

    /// Embeds `self` as the top-left block of an `m × m` matrix.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m >= self.n);
        let zero = self.entries[0].zero_like();
        Self::from_fn(m, |i, j| if i < self.n && j < self.n { self.get(i, j).clone() } else { zero.clone() })
    }
}

impl<E: UnitalAlgebra> UnitalAlgebra for SquareMatrix<E> {
    fn zero_like(&self) -> Self {
        let z = self.entries[0].zero_like();
        SquareMatrix { n: self.n, entries: vec![z; self.n * self.n] }
    }

    fn one_like(&self) -> Self {
        Self::identity_like(self.n, &self.entries[0])
    }

    fn plus(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        SquareMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.plus(b)).collect() }
    }

    fn times(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let n = self.n;
        let zero = self.entries[0].zero_like();
        let mut out = vec![zero; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero_elem() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero_elem() {
                        continue;
                    }
                    let cell = &mut out[i * n + j];
                    *cell = cell.plus(&a.times(b));
                }
            }
        }
        SquareMatrix { n, entries: out }
    }

    fn scaled(&self, c: &Rational) -> Self {
        SquareMatrix { n: self.n, entries: self.entries.iter().map(|e| e.scaled(c)).collect() }
    }

    fn is_zero_elem(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero_elem())
    }
}

impl RatMatrix {
    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| Rational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::identity_like(n, &Rational::zero())
    }

    /// The matrix unit `e_{ij}` (0-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        Self::from_fn(n, |a, b| if (a, b) == (i, j) { Rational::one() } else { Rational::zero() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| crate::rational::int(v)).collect()).collect())
    }

    /// Rows of `p/q` strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows().map(|r| r.iter().map(|q| q.to_string()).collect()).collect()
    }

    pub fn from_strings(rows: &[Vec<String>]) -> Option<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return None;
        }
        let parsed: Option<Vec<Vec<Rational>>> =
            rows.iter().map(|r| r.iter().map(|s| crate::rational::parse(s)).collect()).collect();
        parsed.map(Self::from_rows)
    }

    pub fn max_abs_entry(&self) -> Rational {
        self.entries.iter().map(|q| q.abs()).max().unwrap_or_else(Rational::zero)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_strings();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn matrix_units_multiply() {
        let e11 = RatMatrix::unit(2, 0, 0);
        let e12 = RatMatrix::unit(2, 0, 1);
        assert_eq!(e11.times(&e12), e12);
        assert!(e12.times(&e11).is_zero_elem());
    }

    #[test]
    fn fp_inverse_and_scaling() {
        let a = Fp::new(3, 7);
        assert_eq!(a.times(&a.inverse().unwrap()).value, 1);
        let half = crate::rational::frac(1, 2);
        assert_eq!(Fp::new(2, 7).scaled(&half).value, 1);
        assert_eq!(Fp::from_rational(&crate::rational::frac(-1, 3), 7).unwrap().value, 2);
    }

    #[test]
    fn embed_keeps_block() {
        let m = RatMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let big = m.embed(3);
        assert_eq!(big.get(1, 1), &int(4));
        assert_eq!(big.get(2, 2), &int(0));
    }
}
