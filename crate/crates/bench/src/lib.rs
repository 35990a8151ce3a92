//! Benchmark fixtures; the benches live in `benches/`.

use std::sync::Arc;

use gradalg::random::{random_invertible0, random_regular0, trial_rng};
use gradalg::{
    gber, Algebra, AlgebraDescriptor, CliffordElement, GradedMatrix, GroupElement, RankVector,
};

pub fn ranks(r: &[usize]) -> RankVector {
    RankVector::new(r.to_vec(), 3).expect("valid ranks")
}

/// A seeded invertible degree 0 matrix on which the UDL route is defined.
pub fn regular(alg: &Arc<Algebra>, r: &[usize], seed: u64) -> GradedMatrix<CliffordElement> {
    random_regular0(alg, &ranks(r), &mut trial_rng(seed, 0)).expect("regular sample")
}

/// The first seeded invertible degree 0 matrix from `seed` on whose
/// Berezinian is defined.
pub fn berezinian_input(
    alg: &Arc<Algebra>,
    r: &[usize],
    seed: u64,
) -> GradedMatrix<CliffordElement> {
    (0..)
        .map(|t| {
            random_invertible0(alg, &ranks(r), &mut trial_rng(seed, t)).expect("invertible sample")
        })
        .find(|x| gber(x).is_ok())
        .expect("unbounded search")
}

/// `H` with odd generators of degrees (0,0,1) and (1,1,1).
pub fn extension() -> Arc<Algebra> {
    let g = |c: &[u8]| GroupElement::from_coords(c).expect("valid degree");
    Algebra::new(AlgebraDescriptor {
        p: 0,
        q: 2,
        odd: vec![g(&[0, 0, 1]), g(&[1, 1, 1])],
    })
    .expect("valid algebra")
}
