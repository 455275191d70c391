use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use super::{GrowthError, GrowthSeries};
use crate::rational::Rational;

/// Outcome of `a_n <= c·b_{kn}` over every `n` with both sides available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dominance {
    pub c: Rational,
    pub k: usize,
    /// Largest `n` tested.
    pub tested_up_to: usize,
    pub violations: usize,
    pub first_violation: Option<usize>,
    pub last_violation: Option<usize>,
}

impl Dominance {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

/// Every `(c, k)` pair of the grid, `c` outer.
pub fn growth_rate_le(
    a: &GrowthSeries,
    b: &GrowthSeries,
    c_grid: &[Rational],
    k_grid: &[usize],
) -> Result<Vec<Dominance>, GrowthError> {
    if c_grid.is_empty() || k_grid.is_empty() {
        return Err(GrowthError::EmptyRange);
    }
    if let Some(c) = c_grid.iter().find(|c| !c.is_positive()) {
        return Err(GrowthError::InvalidSpec(format!("grid constant c = {c} must be positive")));
    }
    let mut out = Vec::with_capacity(c_grid.len() * k_grid.len());
    for c in c_grid {
        for &k in k_grid {
            let top = b.len().checked_div(k).map_or(0, |q| a.len().min(q));
            if top == 0 {
                return Err(GrowthError::EmptyRange);
            }
            let (num, den): (BigInt, BigInt) = (c.numer().clone(), c.denom().clone());
            let violated: Vec<usize> =
                (1..=top).filter(|&n| BigInt::from(a.d(n)) * &den > &num * BigInt::from(b.d(k * n))).collect();
            out.push(Dominance {
                c: c.clone(),
                k,
                tested_up_to: top,
                violations: violated.len(),
                first_violation: violated.first().copied(),
                last_violation: violated.last().copied(),
            });
        }
    }
    Ok(out)
}

/// Commutative monomial algebra `F[t_1, …, t_v] / (forbidden)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialQuotientSpec {
    variables: usize,
    forbidden: Vec<Vec<u32>>,
}

impl MonomialQuotientSpec {
    pub fn new(variables: usize, forbidden: Vec<Vec<u32>>) -> Result<Self, GrowthError> {
        if variables == 0 {
            return Err(GrowthError::InvalidSpec("at least one variable is required".into()));
        }
        for m in &forbidden {
            if m.len() != variables {
                return Err(GrowthError::InvalidSpec(format!("forbidden monomial {m:?} needs {variables} exponents")));
            }
            if m.iter().all(|&e| e == 0) {
                return Err(GrowthError::InvalidSpec("forbidden monomials must be nonconstant".into()));
            }
        }
        Ok(MonomialQuotientSpec { variables, forbidden })
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    fn is_standard(&self, e: &[u32]) -> bool {
        !self.forbidden.iter().any(|m| m.iter().zip(e).all(|(a, b)| a <= b))
    }
}

/// `d_n` = number of monomials of degree at most `n` not divisible by any
/// forbidden monomial.
pub fn commutative_quotient_growth(spec: &MonomialQuotientSpec, max_n: usize) -> GrowthSeries {
    let mut layer: BTreeSet<Vec<u32>> = BTreeSet::new();
    let unit = vec![0u32; spec.variables];
    if spec.is_standard(&unit) {
        layer.insert(unit);
    }
    let mut graded = Vec::with_capacity(max_n);
    for _ in 0..max_n {
        // Standard monomials are closed under division, so each one of degree
        // d + 1 is a variable times one of degree d.
        let mut next = BTreeSet::new();
        for e in &layer {
            for v in 0..spec.variables {
                let mut f = e.clone();
                f[v] += 1;
                if spec.is_standard(&f) {
                    next.insert(f);
                }
            }
        }
        graded.push(BigUint::from(next.len()));
        layer = next;
    }
    GrowthSeries::from_graded(format!("commutative monomial quotient in {} variables", spec.variables), graded)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn dims(s: &GrowthSeries) -> Vec<u64> {
        s.dims().iter().map(|d| u64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn reflexive_and_dominated() {
        let q = GrowthSeries::quadratic(50);
        let l = GrowthSeries::linear(50);
        let r = growth_rate_le(&q, &q, &[int(1)], &[1]).unwrap();
        assert!(r[0].holds());
        assert!(growth_rate_le(&l, &q, &[int(1)], &[1]).unwrap()[0].holds());
        let back = growth_rate_le(&q, &l, &[int(1)], &[1]).unwrap();
        assert_eq!((back[0].first_violation, back[0].last_violation), (Some(1), Some(50)));
    }

    #[test]
    fn square_against_linear_grid() {
        let a = GrowthSeries::from_fn("(n+1)^2", 40, |n| BigUint::from((n + 1) * (n + 1))).unwrap();
        let b = GrowthSeries::linear(80);
        let r = growth_rate_le(&a, &b, &[int(1), int(2)], &[1, 2]).unwrap();
        let get = |c: i64, k: usize| r.iter().find(|d| d.c == int(c) && d.k == k).unwrap();
        assert_eq!(get(1, 1).first_violation, Some(1));
        assert_eq!(get(1, 2).first_violation, Some(1));
        let two_two = get(2, 2);
        assert_eq!((two_two.first_violation, two_two.last_violation, two_two.tested_up_to), (Some(3), Some(40), 40));
        assert!(r.iter().all(|d| !d.holds()));
    }

    #[test]
    fn range_errors() {
        let s = GrowthSeries::linear(3);
        assert_eq!(growth_rate_le(&s, &s, &[int(1)], &[4]), Err(GrowthError::EmptyRange));
        assert!(growth_rate_le(&s, &s, &[int(0)], &[1]).is_err());
        assert_eq!(growth_rate_le(&s, &s, &[], &[1]), Err(GrowthError::EmptyRange));
    }

    #[test]
    fn commutative_examples() {
        let free = MonomialQuotientSpec::new(2, vec![]).unwrap();
        assert_eq!(
            commutative_quotient_growth(&free, 30),
            GrowthSeries::quadratic(30).with_label(commutative_quotient_growth(&free, 30).label())
        );
        let y2 = MonomialQuotientSpec::new(2, vec![vec![0, 2]]).unwrap();
        assert_eq!(dims(&commutative_quotient_growth(&y2, 5)), vec![3, 5, 7, 9, 11]);
        let x3 = MonomialQuotientSpec::new(1, vec![vec![3]]).unwrap();
        assert_eq!(dims(&commutative_quotient_growth(&x3, 5)), vec![2, 3, 3, 3, 3]);
        assert!(MonomialQuotientSpec::new(2, vec![vec![0, 0]]).is_err());
        assert!(MonomialQuotientSpec::new(2, vec![vec![1]]).is_err());
    }
}
