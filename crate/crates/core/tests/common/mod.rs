#![allow(dead_code)]

use hopfian::freealg::{GeneratorSet, NcPoly, Word};
use hopfian::rational::{frac, Rational};
use hopfian::Endomorphism;
use proptest::prelude::*;

pub fn gens(l: usize) -> GeneratorSet {
    GeneratorSet::standard(l)
}

/// Sparse polynomial on `l` generators with up to `max_terms` terms of degree at most `max_deg`.
pub fn poly(l: usize, max_deg: usize, max_terms: usize) -> impl Strategy<Value = NcPoly> {
    let term = (prop::collection::vec(0..l as u8, 0..=max_deg), -5i64..=5, 1i64..=3);
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        NcPoly::from_terms(&gens(l), terms.into_iter().map(|(w, p, q)| (Word::from_letters(w), frac(p, q))))
    })
}

pub fn nonzero_poly(l: usize, max_deg: usize, max_terms: usize) -> impl Strategy<Value = NcPoly> {
    poly(l, max_deg, max_terms).prop_filter("nonzero", |f| !f.is_zero())
}

pub fn endo(l: usize, max_deg: usize, max_terms: usize) -> impl Strategy<Value = Endomorphism> {
    prop::collection::vec(poly(l, max_deg, max_terms), l)
        .prop_map(move |imgs| Endomorphism::new(&gens(l), imgs).unwrap())
}

/// Dense Gaussian elimination over `Q`: some solution of `A x = b`, if any.
pub fn dense_solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>, ncols: usize) -> Option<Vec<Rational>> {
    use num_traits::Zero;
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        b.swap(r, p);
        let inv = Rational::from_integer(1.into()) / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        b[r] = &b[r] * &inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
                let t = &b[r] * &f;
                b[i] -= t;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if b[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = b[i].clone();
    }
    Some(x)
}

/// All words of length at most `d` on `l` letters, shortest first.
pub fn words_up_to(l: usize, d: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::<u8>::new()];
    for _ in 0..d {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..l as u8).map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(Word::from_letters));
    }
    out
}
