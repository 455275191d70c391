//! `Q<X> ⊗ Q<X>^op` and square matrices over it.
//!
//! A [`TensorPoly`] is a finite sum of `c · u⊗v` for word pairs `(u, v)`.
//! Multiplication is twisted on the right factor:
//! `(a⊗b)·(c⊗d) = ac ⊗ db`. With this product the Jacobian satisfies the
//! chain rule `J(φ∘ψ) = φ(J(ψ)) · J(φ)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::RatMatrix;
use crate::freealg::{AlgebraError, GeneratorSet, NcPoly, Word};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly {
    gens: GeneratorSet,
    terms: BTreeMap<(Word, Word), Rational>,
}

fn collect_terms(map: HashMap<(Word, Word), Rational>) -> BTreeMap<(Word, Word), Rational> {
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl TensorPoly {
    pub fn zero(gens: &GeneratorSet) -> Self {
        TensorPoly { gens: gens.clone(), terms: BTreeMap::new() }
    }

    /// `c · 1⊗1`.
    pub fn scalar(gens: &GeneratorSet, c: Rational) -> Self {
        Self::pure(gens, Word::empty(), Word::empty(), c)
    }

    pub fn one(gens: &GeneratorSet) -> Self {
        Self::scalar(gens, Rational::one())
    }

    /// `c · u⊗v`.
    pub fn pure(gens: &GeneratorSet, u: Word, v: Word, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((u, v), c);
        }
        TensorPoly { gens: gens.clone(), terms }
    }

    /// `f ⊗ g`, expanded bilinearly.
    pub fn tensor(f: &NcPoly, g: &NcPoly) -> Self {
        let gens = f.gens().clone();
        let mut acc = HashMap::new();
        for (u, a) in f.terms() {
            for (v, b) in g.terms() {
                *acc.entry((u.clone(), v.clone())).or_insert_with(Rational::zero) += a * b;
            }
        }
        TensorPoly { gens, terms: collect_terms(acc) }
    }

    pub fn from_terms(gens: &GeneratorSet, terms: impl IntoIterator<Item = ((Word, Word), Rational)>) -> Self {
        let mut acc = HashMap::new();
        for (k, c) in terms {
            *acc.entry(k).or_insert_with(Rational::zero) += c;
        }
        TensorPoly { gens: gens.clone(), terms: collect_terms(acc) }
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximal `|u| + |v|`; `-1` for zero.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|(u, v)| (u.len() + v.len()) as i64).max().unwrap_or(-1)
    }

    /// Coefficient of `1⊗1`.
    pub fn constant_term(&self) -> Rational {
        self.terms.get(&(Word::empty(), Word::empty())).cloned().unwrap_or_else(Rational::zero)
    }

    /// Component of total degree `k`.
    pub fn homogeneous(&self, k: usize) -> TensorPoly {
        TensorPoly {
            gens: self.gens.clone(),
            terms: self
                .terms
                .iter()
                .filter(|((u, v), _)| u.len() + v.len() == k)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> TensorPoly {
        if c.is_zero() {
            return TensorPoly::zero(&self.gens);
        }
        TensorPoly { gens: self.gens.clone(), terms: self.terms.iter().map(|(k, a)| (k.clone(), a * c)).collect() }
    }

    pub fn checked_add(&self, other: &TensorPoly) -> Result<TensorPoly, AlgebraError> {
        if self.gens != other.gens {
            return Err(AlgebraError::GeneratorMismatch { left: self.gens.to_string(), right: other.gens.to_string() });
        }
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let slot = terms.entry(k.clone()).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(k);
            }
        }
        Ok(TensorPoly { gens: self.gens.clone(), terms })
    }

    pub fn add(&self, other: &TensorPoly) -> TensorPoly {
        self.checked_add(other).expect("generator mismatch in tensor sum")
    }

    pub fn sub(&self, other: &TensorPoly) -> TensorPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Twisted product `(a⊗b)·(c⊗d) = ac ⊗ db`.
    pub fn mul(&self, other: &TensorPoly) -> TensorPoly {
        assert!(self.gens == other.gens, "generator mismatch in tensor product");
        let mut acc: HashMap<(Word, Word), Rational> = HashMap::new();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                *acc.entry((a.concat(c), d.concat(b))).or_insert_with(Rational::zero) += x * y;
            }
        }
        TensorPoly { gens: self.gens.clone(), terms: collect_terms(acc) }
    }

    /// Outer left action `f·(a⊗b) = fa ⊗ b`, which is `(f⊗1)·t`.
    pub fn left_action(&self, f: &NcPoly) -> TensorPoly {
        TensorPoly::tensor(f, &NcPoly::one(&self.gens)).mul(self)
    }

    /// Outer right action `(a⊗b)·g = a ⊗ bg`, which is `(1⊗g)·t`.
    pub fn right_action(&self, g: &NcPoly) -> TensorPoly {
        TensorPoly::tensor(&NcPoly::one(&self.gens), g).mul(self)
    }

    /// Applies an algebra map to both factors: `u⊗v ↦ φ(u)⊗φ(v)`.
    pub fn map_factors(&self, images: &[NcPoly]) -> Result<TensorPoly, AlgebraError> {
        let mut acc: HashMap<(Word, Word), Rational> = HashMap::new();
        let mut cache: HashMap<&Word, NcPoly> = HashMap::new();
        let gens = images.first().map(|p| p.gens().clone()).unwrap_or_else(|| self.gens.clone());
        for ((u, v), c) in &self.terms {
            for w in [u, v] {
                if !cache.contains_key(w) {
                    let img = NcPoly::monomial(&self.gens, w.clone(), Rational::one()).substitute(images)?;
                    cache.insert(w, img);
                }
            }
            let (fu, fv) = (&cache[u], &cache[v]);
            for (a, x) in fu.terms() {
                for (b, y) in fv.terms() {
                    *acc.entry((a.clone(), b.clone())).or_insert_with(Rational::zero) += c * x * y;
                }
            }
        }
        Ok(TensorPoly { gens, terms: collect_terms(acc) })
    }

    /// Collapses `u⊗v ↦ u·v`, the multiplication map `Q<X>⊗Q<X> → Q<X>`.
    pub fn contract(&self) -> NcPoly {
        NcPoly::from_terms(&self.gens, self.terms.iter().map(|((u, v), c)| (u.concat(v), c.clone())))
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| {
            let (da, db) = (a.0 .0.len() + a.0 .1.len(), b.0 .0.len() + b.0 .1.len());
            db.cmp(&da).then_with(|| a.0.cmp(b.0))
        });
        for (i, ((u, v), c)) in ordered.into_iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}⊗{}", u.display(&self.gens), v.display(&self.gens))?;
        }
        Ok(())
    }
}

/// Square matrix with [`TensorPoly`] entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorMatrix {
    gens: GeneratorSet,
    size: usize,
    entries: Vec<TensorPoly>,
}

impl TensorMatrix {
    pub fn from_fn(gens: &GeneratorSet, size: usize, mut f: impl FnMut(usize, usize) -> TensorPoly) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        TensorMatrix { gens: gens.clone(), size, entries }
    }

    pub fn identity(gens: &GeneratorSet) -> Self {
        Self::from_fn(gens, gens.len(), |i, j| if i == j { TensorPoly::one(gens) } else { TensorPoly::zero(gens) })
    }

    pub fn zero(gens: &GeneratorSet) -> Self {
        Self::from_fn(gens, gens.len(), |_, _| TensorPoly::zero(gens))
    }

    /// Scalar matrix `m ⊗ (1⊗1)`.
    pub fn from_rational(gens: &GeneratorSet, m: &RatMatrix) -> Self {
        Self::from_fn(gens, m.size(), |i, j| TensorPoly::scalar(gens, m.get(i, j).clone()))
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &TensorPoly {
        &self.entries[i * self.size + j]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.gens)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(TensorPoly::is_zero)
    }

    pub fn degree(&self) -> i64 {
        self.entries.iter().map(TensorPoly::degree).max().unwrap_or(-1)
    }

    /// Coefficients of `1⊗1`, entrywise.
    pub fn constant_term_matrix(&self) -> RatMatrix {
        RatMatrix::from_fn(self.size, |i, j| self.get(i, j).constant_term())
    }

    pub fn homogeneous(&self, k: usize) -> TensorMatrix {
        TensorMatrix {
            gens: self.gens.clone(),
            size: self.size,
            entries: self.entries.iter().map(|e| e.homogeneous(k)).collect(),
        }
    }

    pub fn add(&self, other: &TensorMatrix) -> TensorMatrix {
        assert_eq!(self.size, other.size);
        TensorMatrix {
            gens: self.gens.clone(),
            size: self.size,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> TensorMatrix {
        TensorMatrix {
            gens: self.gens.clone(),
            size: self.size,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    /// Matrix product using the twisted entry product.
    pub fn mul(&self, other: &TensorMatrix) -> TensorMatrix {
        assert_eq!(self.size, other.size);
        let n = self.size;
        Self::from_fn(&self.gens, n, |i, j| {
            (0..n).fold(TensorPoly::zero(&self.gens), |acc, k| {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc.add(&a.mul(b))
                }
            })
        })
    }

    pub fn map_factors(&self, images: &[NcPoly]) -> Result<TensorMatrix, AlgebraError> {
        let entries = self.entries.iter().map(|e| e.map_factors(images)).collect::<Result<Vec<_>, _>>()?;
        Ok(TensorMatrix { gens: self.gens.clone(), size: self.size, entries })
    }

    /// Entries as display strings, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries.chunks(self.size).map(|r| r.iter().map(|e| e.to_string()).collect()).collect()
    }
}

impl fmt::Display for TensorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_strings().into_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_poly;
    use crate::rational::int;

    fn g() -> GeneratorSet {
        GeneratorSet::standard(2)
    }

    fn p(s: &str) -> NcPoly {
        parse_poly(s, &g()).unwrap()
    }

    #[test]
    fn twisted_product() {
        let a = TensorPoly::tensor(&p("x"), &p("y"));
        let b = TensorPoly::tensor(&p("y"), &p("x"));
        // (x⊗y)(y⊗x) = xy ⊗ xy
        assert_eq!(a.mul(&b), TensorPoly::tensor(&p("x*y"), &p("x*y")));
        let c = TensorPoly::tensor(&p("1"), &p("x*y"));
        // (1⊗xy)(x⊗y) = x ⊗ y*xy
        assert_eq!(c.mul(&TensorPoly::tensor(&p("x"), &p("y"))), TensorPoly::tensor(&p("x"), &p("y*x*y")));
    }

    #[test]
    fn unit_and_actions() {
        let t = TensorPoly::tensor(&p("x + 2*y"), &p("y*x"));
        assert_eq!(TensorPoly::one(&g()).mul(&t), t);
        assert_eq!(t.mul(&TensorPoly::one(&g())), t);
        assert_eq!(t.left_action(&p("y")), TensorPoly::tensor(&p("y*x + 2*y^2"), &p("y*x")));
        assert_eq!(t.right_action(&p("x")), TensorPoly::tensor(&p("x + 2*y"), &p("y*x^2")));
        assert_eq!(t.contract(), p("x*y*x + 2*y^2*x"));
    }

    #[test]
    fn map_factors_swaps() {
        let t = TensorPoly::tensor(&p("x"), &p("y"));
        assert_eq!(t.map_factors(&[p("y"), p("x")]).unwrap(), TensorPoly::tensor(&p("y"), &p("x")));
        let s = TensorPoly::tensor(&p("x"), &p("1"));
        assert_eq!(s.map_factors(&[p("x^2"), p("y")]).unwrap(), TensorPoly::tensor(&p("x^2"), &p("1")));
    }

    #[test]
    fn matrix_identity_product() {
        let id = TensorMatrix::identity(&g());
        let m = TensorMatrix::from_fn(&g(), 2, |i, j| TensorPoly::scalar(&g(), int((i + 2 * j) as i64)));
        assert_eq!(id.mul(&m), m);
        assert_eq!(m.mul(&id), m);
        assert!(id.is_identity());
    }
}
