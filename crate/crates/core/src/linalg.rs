//! Gauss-Jordan elimination over the rationals.

use num_traits::{One, Zero};

use crate::algebra::RatMatrix;
use crate::rational::Rational;

/// Reduces `rows` in place to reduced row echelon form; returns pivot columns.
fn rref(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &RatMatrix) -> usize {
    let mut rows: Vec<Vec<Rational>> = m.rows().map(|r| r.to_vec()).collect();
    rref(&mut rows, m.size()).len()
}

pub fn inverse(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.size();
    let mut rows: Vec<Vec<Rational>> = m
        .rows()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.to_vec();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut rows, n);
    if pivots.len() < n {
        return None;
    }
    Some(RatMatrix::from_rows(rows.into_iter().map(|r| r[n..].to_vec()).collect()))
}

/// One solution of `A x = b` for a dense `A` with `ncols` columns, if any.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    assert_eq!(a.len(), b.len());
    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows, ncols);
    if rows.iter().skip(pivots.len()).any(|r| !r[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][ncols].clone();
    }
    Some(x)
}
