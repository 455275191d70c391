use num_bigint::BigInt;
use num_traits::Zero;

use super::{GrowthError, GrowthSeries};
use crate::rational::ln_biguint;

/// Highest polynomial degree the exact fit looks for.
const MAX_EXACT_DEGREE: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct GkEstimate {
    pub window: (usize, usize),
    /// `exact_degree` when present, otherwise the least-squares slope.
    pub estimate: f64,
    /// Slope of `ln d_n` against `ln n` over the window.
    pub least_squares_slope: f64,
    /// Set when `d_n` agrees with a polynomial of this degree on the whole
    /// window, checked by vanishing finite differences.
    pub exact_degree: Option<usize>,
    /// The slope on the second half of the window exceeds the first by more
    /// than half of `max(first, 1)`.
    pub unbounded: bool,
    /// `(n, ln d_n / ln n)` across the window.
    pub ratios: Vec<(usize, f64)>,
}

fn slope(points: &[(f64, f64)]) -> f64 {
    let m = points.len() as f64;
    let (sx, sy) = points.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let (num, den) =
        points.iter().fold((0.0, 0.0), |(n, d), (x, y)| (n + (x - mx) * (y - my), d + (x - mx) * (x - mx)));
    num / den
}

fn exact_polynomial_degree(values: &[BigInt]) -> Option<usize> {
    let mut diffs = values.to_vec();
    for k in 0..=MAX_EXACT_DEGREE {
        // Degree k needs k + 1 points to fit and two more to confirm.
        if diffs.len() < 3 {
            return None;
        }
        let next: Vec<BigInt> = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        if next.iter().all(Zero::is_zero) {
            return Some(k);
        }
        diffs = next;
    }
    None
}

/// Estimates the polynomial growth degree of `s` on `window = (start, end)`.
pub fn gk_dim_estimate(s: &GrowthSeries, window: (usize, usize)) -> Result<GkEstimate, GrowthError> {
    let (a, b) = window;
    if a < 2 || b > s.len() || a > b {
        return Err(GrowthError::InvalidWindow { start: a, end: b, len: s.len() });
    }
    if b - a + 1 < 3 {
        return Err(GrowthError::WindowTooSmall { start: a, end: b });
    }
    let points: Vec<(f64, f64)> = (a..=b).map(|n| ((n as f64).ln(), ln_biguint(&s.d(n)))).collect();
    let least_squares_slope = slope(&points);
    let ratios = (a..=b).zip(&points).map(|(n, (x, y))| (n, y / x)).collect();
    let values: Vec<BigInt> = (a..=b).map(|n| BigInt::from(s.d(n))).collect();
    let exact_degree = exact_polynomial_degree(&values);
    let mid = points.len() / 2;
    let (first, second) = (slope(&points[..=mid]), slope(&points[mid..]));
    let unbounded = exact_degree.is_none() && second - first > 0.5 * first.max(1.0);
    Ok(GkEstimate {
        window,
        estimate: exact_degree.map_or(least_squares_slope, |k| k as f64),
        least_squares_slope,
        exact_degree,
        unbounded,
        ratios,
    })
}
