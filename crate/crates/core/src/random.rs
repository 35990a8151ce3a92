//! Seeded generators for random homogeneous matrices.

use std::sync::Arc;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::{Algebra, CliffordElement};
use crate::error::{Error, Result};
use crate::graded_matrix::{GradedMatrix, RankVector};
use crate::group::GroupElement;
use crate::matrix::Matrix;

pub const MAX_REJECTIONS: usize = 2000;

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial))
}

/// A basis monomial of the given degree times an integer in `[-9, 9]`.
pub fn random_entry<R: Rng>(
    alg: &Arc<Algebra>,
    degree: &GroupElement,
    rng: &mut R,
) -> CliffordElement {
    let masks = alg.masks_of_degree(degree);
    if masks.is_empty() {
        return CliffordElement::zero(alg);
    }
    let mask = masks[rng.random_range(0..masks.len())];
    let c: i64 = rng.random_range(-9..=9);
    CliffordElement::monomial(alg, mask, BigRational::from_integer(c.into()))
}

/// A random matrix with every entry homogeneous of the required degree.
pub fn random_graded<R: Rng>(
    alg: &Arc<Algebra>,
    ranks: &RankVector,
    degree: &GroupElement,
    rng: &mut R,
) -> GradedMatrix<CliffordElement> {
    let one = CliffordElement::one(alg);
    let n = ranks.total();
    let m = Matrix::from_fn(n, n, &one, |i, j| {
        let d = ranks.weight(i).add(&ranks.weight(j)).add(degree);
        random_entry(alg, &d, rng)
    });
    GradedMatrix::new_unchecked(ranks.clone(), *degree, m).expect("square by construction")
}

/// Rejection sampling until `accept` holds.
pub fn random_accepted<R: Rng>(
    alg: &Arc<Algebra>,
    ranks: &RankVector,
    degree: &GroupElement,
    rng: &mut R,
    accept: impl Fn(&GradedMatrix<CliffordElement>) -> bool,
) -> Result<GradedMatrix<CliffordElement>> {
    for _ in 0..MAX_REJECTIONS {
        let x = random_graded(alg, ranks, degree, rng);
        if accept(&x) {
            return Ok(x);
        }
    }
    Err(Error::Precondition(format!(
        "an accepted sample within {MAX_REJECTIONS} draws"
    )))
}

/// A random invertible degree 0 matrix.
pub fn random_invertible0<R: Rng>(
    alg: &Arc<Algebra>,
    ranks: &RankVector,
    rng: &mut R,
) -> Result<GradedMatrix<CliffordElement>> {
    let zero = GroupElement::zero(ranks.arity())?;
    random_accepted(alg, ranks, &zero, rng, crate::berezinian::is_invertible0)
}

/// A random degree 0, purely even matrix on which the UDL route is defined.
pub fn random_regular0<R: Rng>(
    alg: &Arc<Algebra>,
    ranks: &RankVector,
    rng: &mut R,
) -> Result<GradedMatrix<CliffordElement>> {
    let zero = GroupElement::zero(ranks.arity())?;
    random_accepted(alg, ranks, &zero, rng, |x| {
        crate::berezinian::is_invertible0(x) && crate::gdet::gdet0(x).is_ok()
    })
}

/// A rational quaternion with numerators in `[-9, 9]` and denominators in `[1, 5]`.
pub fn random_quaternion<R: Rng>(alg: &Arc<Algebra>, rng: &mut R) -> CliffordElement {
    let mut c = || {
        BigRational::new(
            rng.random_range(-9i64..=9).into(),
            rng.random_range(1i64..=5).into(),
        )
    };
    crate::clifford::quaternion_rational(alg, [c(), c(), c(), c()])
}
