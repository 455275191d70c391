//! Exact check that a substitution collapses to the generators.
//!
//! Expanding `g(φ)` over `Q` creates every intermediate word of length up to
//! `deg g · deg φ` with a big rational coefficient. Here words are packed into
//! a `u128` and coefficients live in `F_p` for a few 61-bit primes. After
//! clearing denominators the expansion has integer coefficients bounded by an
//! explicit height `B`; once the primes multiply past `2B`, vanishing modulo
//! each of them is the same as vanishing over `Z`. A nonzero residue modulo
//! any prime already refutes the identity, so both answers are exact.
//!
//! Dense inputs make even the packed expansion explode, so when `inner`
//! reduces to an affine map by elementary steps its inverse is built directly
//! and compared with `outer`: an invertible map has exactly one left inverse.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rustc_hash::FxHashMap;

use crate::freealg::{AlgebraError, NcPoly};
use crate::pitest::is_probable_prime;

use super::tame_inverse;

/// Whether `outer[i](inner[0], …, inner[l-1]) = x_i` for every `i`.
pub fn substitution_is_identity(outer: &[NcPoly], inner: &[NcPoly]) -> Result<bool, AlgebraError> {
    let l = inner.len();
    if outer.len() != l {
        return Err(AlgebraError::ArityMismatch { expected: l, actual: outer.len() });
    }
    if l == 0 {
        return Ok(true);
    }
    let gens = inner[0].gens();
    for p in outer.iter().chain(inner) {
        gens.check_same(p.gens())?;
    }
    if gens.len() != l {
        return Err(AlgebraError::ArityMismatch { expected: gens.len(), actual: l });
    }
    if outer.iter().any(NcPoly::is_zero) {
        return Ok(false);
    }
    if let Some(psi) = tame_inverse(inner) {
        return Ok(outer == psi.as_slice());
    }
    let bits = bits_per_letter(l);
    let inner_deg = inner.iter().map(|p| p.degree().max(0) as usize).max().unwrap_or(0);
    for (i, g) in outer.iter().enumerate() {
        let longest = g.degree() as usize * inner_deg;
        let holds = if longest.max(1) * bits < 127 {
            packed_check(g, inner, i, bits)
        } else {
            g.substitute(inner)? == NcPoly::var(gens, i)
        };
        if !holds {
            return Ok(false);
        }
    }
    Ok(true)
}

fn bits_per_letter(l: usize) -> usize {
    (usize::BITS - (l.max(2) - 1).leading_zeros()) as usize
}

/// A word as `1` followed by its letters, `bits` each.
fn pack(letters: &[u8], bits: usize) -> u128 {
    letters.iter().fold(1u128, |acc, &g| (acc << bits) | g as u128)
}

fn lcm_of_denominators<'a>(coeffs: impl Iterator<Item = &'a crate::rational::Rational>) -> BigInt {
    coeffs.fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

fn residue(x: &BigInt, p: u64) -> u64 {
    let r = (x % BigInt::from(p)).to_i128().expect("residue fits");
    r.rem_euclid(p as i128) as u64
}

struct IntTerm {
    letters: u128,
    len: usize,
    coef: BigInt,
}

fn packed_check(g: &NcPoly, inner: &[NcPoly], target: usize, bits: usize) -> bool {
    // s·φ_j has integer coefficients; h_w = m·g_w·s^(D - |w|)
    let s = lcm_of_denominators(inner.iter().flat_map(|p| p.terms().map(|(_, c)| c)));
    let images: Vec<Vec<IntTerm>> = inner
        .iter()
        .map(|p| {
            p.terms()
                .map(|(w, c)| IntTerm {
                    letters: pack(w.letters(), bits) ^ (1u128 << (w.len() * bits)),
                    len: w.len(),
                    coef: (c * &s).to_integer(),
                })
                .collect()
        })
        .collect();
    let norms: Vec<BigUint> =
        images.iter().map(|t| t.iter().map(|x| x.coef.magnitude().clone()).sum::<BigUint>()).collect();
    let m = lcm_of_denominators(g.terms().map(|(_, c)| c));
    let d = g.degree() as usize;
    let mut words: Vec<(&[u8], BigInt)> = g
        .terms()
        .map(|(w, c)| {
            let h = (c * &m).to_integer() * num_traits::pow(s.clone(), d - w.len());
            (w.letters(), h)
        })
        .collect();
    words.sort_by(|a, b| a.0.cmp(b.0));
    let scale = &m * num_traits::pow(s.clone(), d);

    let mut height = scale.magnitude().clone();
    for (w, h) in &words {
        height += w.iter().fold(h.magnitude().clone(), |acc, &j| acc * &norms[j as usize]);
    }
    let needed = height * 2u32;

    let mut modulus = BigUint::one();
    let mut p = (1u64 << 61) - 1;
    while modulus <= needed {
        while !is_probable_prime(p) {
            p -= 2;
        }
        if !check_mod(&words, &images, &scale, target, bits, p) {
            return false;
        }
        modulus *= p;
        p -= 2;
    }
    true
}

fn check_mod(
    words: &[(&[u8], BigInt)],
    images: &[Vec<IntTerm>],
    scale: &BigInt,
    target: usize,
    bits: usize,
    p: u64,
) -> bool {
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let images: Vec<Vec<(u128, usize, u64)>> = images
        .iter()
        .map(|t| t.iter().map(|x| (x.letters, x.len, residue(&x.coef, p))).filter(|x| x.2 != 0).collect())
        .collect();
    let mut unit = FxHashMap::default();
    unit.insert(1u128, 1u64);
    let mut stack: Vec<FxHashMap<u128, u64>> = vec![unit];
    let mut prev: &[u8] = &[];
    let mut total: FxHashMap<u128, u64> = FxHashMap::default();
    for (w, h) in words {
        let common = prev.iter().zip(w.iter()).take_while(|(a, b)| a == b).count();
        stack.truncate(common + 1);
        for &j in &w[common..] {
            let last = stack.last().expect("stack holds the unit");
            let mut next =
                FxHashMap::with_capacity_and_hasher(last.len() * images[j as usize].len(), Default::default());
            for (&u, &a) in last {
                for &(v, len, b) in &images[j as usize] {
                    let slot = next.entry((u << (len * bits)) | v).or_insert(0u64);
                    *slot = (*slot + mulmod(a, b)) % p;
                }
            }
            next.retain(|_, c| *c != 0);
            stack.push(next);
        }
        let c = residue(h, p);
        for (&u, &a) in stack.last().expect("nonempty") {
            let slot = total.entry(u).or_insert(0);
            *slot = (*slot + mulmod(a, c)) % p;
        }
        prev = w;
    }
    let want_key = pack(&[target as u8], bits);
    let want = residue(scale, p);
    total.iter().all(|(&k, &c)| if k == want_key { c == want } else { c == 0 })
        && (want == 0 || total.get(&want_key) == Some(&want))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{parse_poly, GeneratorSet};

    fn p(s: &str) -> NcPoly {
        parse_poly(s, &GeneratorSet::standard(2)).unwrap()
    }

    #[test]
    fn inverse_pairs() {
        let phi = vec![p("x + y^2"), p("y")];
        let psi = vec![p("x - y^2"), p("y")];
        assert!(substitution_is_identity(&psi, &phi).unwrap());
        assert!(substitution_is_identity(&phi, &psi).unwrap());
        assert!(!substitution_is_identity(&phi, &phi).unwrap());
    }

    #[test]
    fn rational_coefficients_and_constants() {
        let phi = vec![p("2*x + 1/3*y*y - 1"), p("1/2*y + 5")];
        let psi = vec![p("1/2*x - 2/3*y^2 + 20/3*y - 97/6"), p("2*y - 10")];
        assert!(substitution_is_identity(&psi, &phi).unwrap());
        assert!(substitution_is_identity(&phi, &psi).unwrap());
        let off = vec![p("1/2*x - 2/3*y^2 + 20/3*y - 97/6 + 1/1000000007"), p("2*y - 10")];
        assert!(!substitution_is_identity(&off, &phi).unwrap());
    }

    #[test]
    fn packed_pass_agrees_with_expansion() {
        let phi = vec![p("2*x + 1/3*y*y - 1"), p("1/2*y + 5")];
        let psi = vec![p("1/2*x - 2/3*y^2 + 20/3*y - 97/6"), p("2*y - 10")];
        let skew = vec![p("x + y*x*y - 1/2*x*x"), p("y - 3*x")];
        for (outer, inner) in [(&psi, &phi), (&phi, &psi), (&phi, &phi), (&skew, &psi), (&psi, &skew)] {
            for (i, g) in outer.iter().enumerate() {
                let expected = g.substitute(inner).unwrap() == NcPoly::var(g.gens(), i);
                assert_eq!(packed_check(g, inner, i, 1), expected);
            }
        }
    }

    #[test]
    fn packing_width() {
        assert_eq!(bits_per_letter(1), 1);
        assert_eq!(bits_per_letter(2), 1);
        assert_eq!(bits_per_letter(3), 2);
        assert_eq!(bits_per_letter(5), 3);
        assert_eq!(pack(&[1, 0], 1), 0b110);
    }

    #[test]
    fn zero_outer_fails() {
        assert!(!substitution_is_identity(&[p("0"), p("y")], &[p("x"), p("y")]).unwrap());
    }
}
