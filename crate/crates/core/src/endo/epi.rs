use num_traits::Zero;

use super::{substitution_is_identity, EndoError, Endomorphism};
use crate::freealg::NcPoly;
use crate::linalg;

/// A finite proof that an endomorphism is not onto.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// After removing constant terms the images generate the augmentation
    /// ideal only if their linear parts span the degree-one space.
    SingularLinearPart { rank: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EpimorphismSearch {
    /// Polynomials `g_i` with `g_i(φ(x_1), …, φ(x_l)) = x_i`, verified exactly.
    Certificate(Vec<NcPoly>),
    /// No certificate of degree at most `bound`; not a refutation.
    Unknown {
        bound: usize,
    },
    NotSurjective(Obstruction),
}

impl EpimorphismSearch {
    pub fn certificate(&self) -> Option<&[NcPoly]> {
        match self {
            EpimorphismSearch::Certificate(g) => Some(g),
            _ => None,
        }
    }
}

/// Looks for `g_1, …, g_l` of degree at most `bound` with `g_i(φ) = x_i`.
///
/// With the constant terms `c` split off, `φ = c + L·x + N(x)` where `N` has
/// no terms below degree two. Any certificate `g` gives `G(z) = g(z + c)`
/// satisfying `G(L·x + N(x)) = x`, and then `G` is the unique composition
/// inverse in the completed algebra: `L·G + N(G) = x`. Its graded pieces are
/// computed by the fixed point `G ← L⁻¹(x − N(G))`, each pass fixing one more
/// degree. A certificate of degree `≤ bound` exists exactly when the degree
/// `bound + 1` piece vanishes and the truncation checks out.
pub fn is_epimorphism_bounded_degree(phi: &Endomorphism, bound: usize) -> Result<EpimorphismSearch, EndoError> {
    if bound < 1 {
        return Err(EndoError::InvalidBound { min: 1, got: bound });
    }
    let gens = phi.gens();
    let l = gens.len();
    let consts = phi.constant_parts();
    let lin = phi.linear_part();
    let Some(lin_inv) = linalg::inverse(&lin) else {
        return Ok(EpimorphismSearch::NotSurjective(Obstruction::SingularLinearPart { rank: linalg::rank(&lin) }));
    };

    let vars: Vec<NcPoly> = (0..l).map(|i| NcPoly::var(gens, i)).collect();
    let combine = |m: &crate::algebra::RatMatrix, v: &[NcPoly]| -> Vec<NcPoly> {
        (0..l).map(|i| (0..l).fold(NcPoly::zero(gens), |acc, j| &acc + &v[j].scale(m.get(i, j)))).collect()
    };
    let linear_images = combine(&lin, &vars);
    let nonlinear: Vec<NcPoly> = phi
        .images()
        .iter()
        .zip(&linear_images)
        .zip(&consts)
        .map(|((img, lin_i), c)| &(img - lin_i) - &NcPoly::constant(gens, c.clone()))
        .collect();

    let top = bound + 1;
    let mut g = combine(&lin_inv, &vars);
    // after the pass with cap k, pieces of degree <= k are final
    for cap in 2..=top {
        let rhs: Vec<NcPoly> = vars.iter().zip(&nonlinear).map(|(x, n)| x - &n.substitute_truncated(&g, cap)).collect();
        g = combine(&lin_inv, &rhs);
    }
    if g.iter().any(|gi| !gi.homogeneous(top).is_zero()) {
        return Ok(EpimorphismSearch::Unknown { bound });
    }

    let certificate = if consts.iter().all(Zero::is_zero) {
        g
    } else {
        let shifted: Vec<NcPoly> =
            vars.iter().zip(&consts).map(|(x, c)| x - &NcPoly::constant(gens, c.clone())).collect();
        g.iter().map(|gi| gi.substitute(&shifted)).collect::<Result<Vec<_>, _>>()?
    };
    if !substitution_is_identity(&certificate, phi.images())? {
        return Ok(EpimorphismSearch::Unknown { bound });
    }
    Ok(EpimorphismSearch::Certificate(certificate))
}
