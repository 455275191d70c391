use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, GeneratorSet, Word};
use crate::algebra::UnitalAlgebra;
use crate::rational::Rational;

/// Element of `Q<X>`: finitely many words with nonzero rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcPoly {
    gens: GeneratorSet,
    terms: BTreeMap<Word, Rational>,
}

fn accumulate(map: &mut HashMap<Word, Rational>, w: Word, c: Rational) {
    match map.entry(w) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

impl NcPoly {
    pub fn zero(gens: &GeneratorSet) -> Self {
        NcPoly { gens: gens.clone(), terms: BTreeMap::new() }
    }

    pub fn one(gens: &GeneratorSet) -> Self {
        Self::constant(gens, Rational::one())
    }

    pub fn constant(gens: &GeneratorSet, c: Rational) -> Self {
        Self::monomial(gens, Word::empty(), c)
    }

    /// The generator `x_i` (0-based).
    pub fn var(gens: &GeneratorSet, i: usize) -> Self {
        assert!(i < gens.len(), "generator index {i} out of range");
        Self::monomial(gens, Word::letter(i), Rational::one())
    }

    pub fn monomial(gens: &GeneratorSet, w: Word, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            debug_assert!(w.letters().iter().all(|&g| (g as usize) < gens.len()));
            terms.insert(w, c);
        }
        NcPoly { gens: gens.clone(), terms }
    }

    /// Sums the given terms; repeated words are merged, zeros dropped.
    pub fn from_terms(gens: &GeneratorSet, terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut acc: HashMap<Word, Rational> = HashMap::new();
        for (w, c) in terms {
            accumulate(&mut acc, w, c);
        }
        Self::from_map(gens, acc)
    }

    fn from_map(gens: &GeneratorSet, map: HashMap<Word, Rational>) -> Self {
        NcPoly { gens: gens.clone(), terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    /// Terms in ascending degree-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Word::empty())
    }

    /// Maximal word length; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.keys().next_back().map_or(-1, |w| w.len() as i64)
    }

    /// Maximal number of occurrences of generator `i` in a term; `-1` for zero.
    pub fn multidegree(&self, i: usize) -> i64 {
        self.terms.keys().map(|w| w.count(i) as i64).max().unwrap_or(-1)
    }

    /// Largest word in degree-lexicographic order.
    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    /// Degree-`k` homogeneous component.
    pub fn homogeneous(&self, k: usize) -> NcPoly {
        NcPoly {
            gens: self.gens.clone(),
            terms: self.terms.iter().filter(|(w, _)| w.len() == k).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncated(&self, max_degree: usize) -> NcPoly {
        NcPoly {
            gens: self.gens.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() <= max_degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero(&self.gens);
        }
        NcPoly { gens: self.gens.clone(), terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect() }
    }

    pub fn checked_add(&self, other: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.gens.check_same(&other.gens)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            let entry = terms.entry(w.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(w);
            }
        }
        Ok(NcPoly { gens: self.gens.clone(), terms })
    }

    pub fn checked_sub(&self, other: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &NcPoly) -> Result<NcPoly, AlgebraError> {
        self.gens.check_same(&other.gens)?;
        Ok(self.mul_bounded(other, usize::MAX))
    }

    /// Product with every word longer than `max_degree` discarded.
    pub fn mul_truncated(&self, other: &NcPoly, max_degree: usize) -> NcPoly {
        self.gens.check_same(&other.gens).expect("generator mismatch in product");
        self.mul_bounded(other, max_degree)
    }

    fn mul_bounded(&self, other: &NcPoly, max_degree: usize) -> NcPoly {
        let mut acc: HashMap<Word, Rational> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if u.len() + v.len() > max_degree {
                    // `other` is in deglex order, so later words are no shorter
                    break;
                }
                accumulate(&mut acc, u.concat(v), a * b);
            }
        }
        Self::from_map(&self.gens, acc)
    }

    /// Evaluates at `images` in any unital algebra: `x_i ↦ images[i]`.
    ///
    /// Words sharing a prefix share the partial product, so the number of
    /// ring multiplications equals the size of the prefix trie of the support.
    pub fn substitute<A: UnitalAlgebra>(&self, images: &[A]) -> Result<A, AlgebraError> {
        if images.len() != self.gens.len() {
            return Err(AlgebraError::ArityMismatch { expected: self.gens.len(), actual: images.len() });
        }
        let one = images[0].one_like();
        Ok(self.substitute_with(images, &one, |a, b| a.times(b)))
    }

    /// Substitution into `Q<X>` itself, keeping only degrees `<= max_degree`.
    ///
    /// Valid as a truncation of the exact result when every image has zero
    /// constant term.
    pub fn substitute_truncated(&self, images: &[NcPoly], max_degree: usize) -> NcPoly {
        assert_eq!(images.len(), self.gens.len(), "arity mismatch in substitution");
        let target = images[0].gens.clone();
        let restricted = self.truncated(max_degree);
        let one = NcPoly::one(&target);
        restricted.substitute_with(images, &one, |a, b| a.mul_truncated(b, max_degree))
    }

    fn substitute_with<A: UnitalAlgebra>(&self, images: &[A], one: &A, mul: impl Fn(&A, &A) -> A) -> A {
        let mut words: Vec<(&Word, &Rational)> = self.terms.iter().collect();
        words.sort_by(|a, b| a.0.letters().cmp(b.0.letters()));
        let mut stack: Vec<A> = vec![one.clone()];
        let mut prev: &[u8] = &[];
        let mut acc = one.zero_like();
        for (w, c) in words {
            let letters = w.letters();
            let common = prev.iter().zip(letters).take_while(|(a, b)| a == b).count();
            stack.truncate(common + 1);
            for &g in &letters[common..] {
                let next = mul(stack.last().unwrap(), &images[g as usize]);
                stack.push(next);
            }
            acc.add_scaled(&stack[letters.len()], c);
            prev = letters;
        }
        acc
    }
}

impl UnitalAlgebra for NcPoly {
    fn zero_like(&self) -> Self {
        NcPoly::zero(&self.gens)
    }
    fn one_like(&self) -> Self {
        NcPoly::one(&self.gens)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_scaled(&mut self, rhs: &Self, c: &Rational) {
        self.gens.check_same(&rhs.gens).expect("generator mismatch in sum");
        for (w, a) in &rhs.terms {
            let t = a * c;
            match self.terms.entry(w.clone()) {
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += t;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
                std::collections::btree_map::Entry::Vacant(e) => {
                    if !t.is_zero() {
                        e.insert(t);
                    }
                }
            }
        }
    }
}

// Operator forms panic on a generator mismatch; use the `checked_*` methods
// where the generator sets are not known to agree.
impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        self.checked_add(rhs).expect("generator mismatch in sum")
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        self.checked_sub(rhs).expect("generator mismatch in difference")
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        self.checked_mul(rhs).expect("generator mismatch in product")
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly { gens: self.gens.clone(), terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl fmt::Display for NcPoly {
    /// Canonical form: degree descending, lexicographic within a degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&Word, &Rational)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.letters().cmp(b.0.letters())));
        for (i, (w, c)) in ordered.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", w.display(&self.gens))?;
            } else {
                write!(f, "{mag}*{}", w.display(&self.gens))?;
            }
        }
        Ok(())
    }
}
