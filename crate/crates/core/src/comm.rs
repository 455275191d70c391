//! Commutative polynomials over the rationals with a fixed variable count.
//!
//! These hold the entries of generic matrices and abelianized Jacobians.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::UnitalAlgebra;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CommPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl CommPoly {
    pub fn zero(nvars: usize) -> Self {
        CommPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable {i} out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exponents: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exponents.len());
        if !c.is_zero() {
            p.terms.insert(exponents, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut acc: HashMap<Vec<u32>, Rational> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            *acc.entry(e).or_insert_with(Rational::zero) += c;
        }
        CommPoly { nvars, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `-1` for zero.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|e| e.iter().map(|&x| x as i64).sum()).max().unwrap_or(-1)
    }

    pub fn degree_in(&self, var: usize) -> i64 {
        self.terms.keys().map(|e| e[var] as i64).max().unwrap_or(-1)
    }

    /// The constant polynomial's value, if `self` is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&vec![0; self.nvars]).cloned(),
            _ => None,
        }
    }

    pub fn partial_derivative(&self, var: usize) -> CommPoly {
        let terms = self.terms.iter().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
            let mut e = e.clone();
            let k = e[var];
            e[var] -= 1;
            (e, c * Rational::from_integer(k.into()))
        });
        CommPoly::from_terms(self.nvars, terms)
    }

    /// Substitutes a rational for one variable, keeping the variable count.
    pub fn substitute_var(&self, var: usize, value: &Rational) -> CommPoly {
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e = e.clone();
            let k = std::mem::take(&mut e[var]);
            (e, c * num_traits::pow(value.clone(), k as usize))
        });
        CommPoly::from_terms(self.nvars, terms)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, v)| acc * num_traits::pow(v.clone(), k as usize))
            })
            .sum()
    }

    pub fn display_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        // highest total degree first
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (i, (e, c)) in ordered.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mag = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| if k == 1 { names[v].clone() } else { format!("{}^{k}", names[v]) })
                .collect();
            if vars.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&vars.join("*"));
            } else {
                out.push_str(&format!("{mag}*{}", vars.join("*")));
            }
        }
        out
    }
}

impl UnitalAlgebra for CommPoly {
    fn zero_like(&self) -> Self {
        CommPoly::zero(self.nvars)
    }

    fn one_like(&self) -> Self {
        CommPoly::one(self.nvars)
    }

    fn plus(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let slot = terms.entry(e.clone()).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(e);
            }
        }
        CommPoly { nvars: self.nvars, terms }
    }

    fn times(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut acc: HashMap<Vec<u32>, Rational> = HashMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += x * y;
            }
        }
        CommPoly { nvars: self.nvars, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return CommPoly::zero(self.nvars);
        }
        CommPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect() }
    }

    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("t{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn arithmetic_and_derivative() {
        let x = CommPoly::var(2, 0);
        let y = CommPoly::var(2, 1);
        let f = x.times(&x).plus(&y.scaled(&int(3)));
        assert_eq!(f.degree(), 2);
        assert_eq!(f.partial_derivative(0), x.scaled(&int(2)));
        assert_eq!(f.evaluate(&[int(2), int(1)]), int(7));
        assert_eq!(f.substitute_var(0, &int(2)), CommPoly::constant(2, int(4)).plus(&y.scaled(&int(3))));
        assert!(x.times(&y).plus(&y.times(&x).scaled(&int(-1))).is_zero());
    }

    #[test]
    fn display() {
        let names = vec!["x".to_string(), "y".to_string()];
        let f = CommPoly::var(2, 0).scaled(&int(2));
        assert_eq!(f.display_with(&names), "2*x");
        assert_eq!(CommPoly::one(2).display_with(&names), "1");
    }
}
