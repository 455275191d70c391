//! Reduction of a map to an affine one by elementary steps.
//!
//! While some image `f_i` has degree above one, look for another image `f_j`
//! and `c, k` with `top(f_i) = c top(f_j)^k` and replace `f_i` by
//! `f_i - c f_j^k`. Each step is an elementary automorphism applied on the
//! outside, so if the process ends in an invertible affine map the input is an
//! automorphism and the recorded steps give its inverse. Nothing here expands
//! past the degree of the input or of its inverse.

use crate::freealg::NcPoly;
use crate::linalg;
use crate::rational::Rational;
use num_traits::Zero;

use super::Endomorphism;

fn power(f: &NcPoly, k: usize) -> NcPoly {
    let mut out = NcPoly::one(f.gens());
    for _ in 0..k {
        out = &out * f;
    }
    out
}

/// `(j, k, c)` with `top(f_i) = c top(f_j)^k`.
fn reduction(f: &[NcPoly], i: usize) -> Option<(usize, usize, Rational)> {
    let a = f[i].degree() as usize;
    let top = f[i].homogeneous(a);
    let w = top.leading_word()?.clone();
    (0..f.len()).filter(|&j| j != i).find_map(|j| {
        let b = f[j].degree();
        if b < 1 || !a.is_multiple_of(b as usize) {
            return None;
        }
        let k = a / b as usize;
        let lifted = power(&f[j].homogeneous(b as usize), k);
        let d = lifted.coefficient(&w);
        if d.is_zero() {
            return None;
        }
        let c = top.coefficient(&w) / d;
        (lifted.scale(&c) == top).then_some((j, k, c))
    })
}

/// Two-sided inverse of the map `x_i -> images[i]` when the reduction above
/// reaches an invertible affine map. `None` says nothing about invertibility.
pub fn tame_inverse(images: &[NcPoly]) -> Option<Vec<NcPoly>> {
    let gens = images.first()?.gens().clone();
    let l = images.len();
    let mut f = images.to_vec();
    // outer[i](images) = f[i] at every step
    let mut outer: Vec<NcPoly> = (0..l).map(|i| NcPoly::var(&gens, i)).collect();
    loop {
        let mut order: Vec<usize> = (0..l).filter(|&i| f[i].degree() > 1).collect();
        if order.is_empty() {
            break;
        }
        order.sort_by_key(|&i| std::cmp::Reverse(f[i].degree()));
        let (i, j, k, c) = order.iter().find_map(|&i| reduction(&f, i).map(|(j, k, c)| (i, j, k, c)))?;
        f[i] = &f[i] - &power(&f[j], k).scale(&c);
        outer[i] = &outer[i] - &power(&outer[j], k).scale(&c);
    }
    let affine = Endomorphism::new(&gens, f).ok()?;
    let inv = linalg::inverse(&affine.linear_part())?;
    let shifted: Vec<NcPoly> =
        outer.iter().zip(affine.constant_parts()).map(|(o, v)| o - &NcPoly::constant(&gens, v)).collect();
    // x = M^{-1}(f - v)
    Some(
        (0..l)
            .map(|i| {
                (0..l).fold(NcPoly::zero(&gens), |acc, j| {
                    let c = inv.get(i, j);
                    if c.is_zero() {
                        acc
                    } else {
                        &acc + &shifted[j].scale(c)
                    }
                })
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{parse_poly, GeneratorSet};

    fn p(s: &str) -> NcPoly {
        parse_poly(s, &GeneratorSet::standard(2)).unwrap()
    }

    #[test]
    fn inverts_elementary_chains() {
        let phi = vec![p("2*x + 1/3*y*y - 1"), p("1/2*y + 5")];
        let psi = tame_inverse(&phi).unwrap();
        assert_eq!(psi, vec![p("1/2*x - 2/3*y^2 + 20/3*y - 97/6"), p("2*y - 10")]);
        let nested = vec![p("x + y^2 + y*x^2 + x^2*y + x^4"), p("y + x^2")];
        let psi = tame_inverse(&nested).unwrap();
        let back: Vec<NcPoly> = psi.iter().map(|g| g.substitute(&nested).unwrap()).collect();
        assert_eq!(back, vec![p("x"), p("y")]);
    }

    #[test]
    fn stalls_on_non_automorphisms() {
        assert!(tame_inverse(&[p("x^2"), p("y")]).is_none());
        assert!(tame_inverse(&[p("x + y"), p("x + y")]).is_none());
        assert!(tame_inverse(&[p("x*y"), p("y*x")]).is_none());
    }
}
