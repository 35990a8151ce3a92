//! The graded trace.

use crate::error::{Error, Result};
use crate::graded_matrix::GradedMatrix;
use crate::group::sign;
use crate::scalar::Scalar;

/// `gtr(X) = sum_k (-1)^{<gamma_k + x, gamma_k>} tr(X_kk)`.
///
/// Diagonal entries are split into homogeneous parts, so `X` need not be
/// homogeneous: a part of degree `d` in block `k` belongs to the component of
/// degree `x = d` and gets the sign `(-1)^{<gamma_k, gamma_k> + <d, gamma_k>}`.
pub fn gtr<S: Scalar>(x: &GradedMatrix<S>) -> S {
    let mut acc = x.matrix().zero();
    for alpha in 0..x.dim() {
        let w = x.ranks().weight(alpha);
        for (d, part) in x.get(alpha, alpha).homogeneous_parts() {
            if sign(&w.add(&d), &w) > 0 {
                acc = acc.add(&part);
            } else {
                acc = acc.sub(&part);
            }
        }
    }
    acc
}

/// `gtr(X^k)` and `gtr((G X G^{-1})^k)` for `k = 1..=kmax`.
pub fn lax_invariants<S: Scalar>(
    x: &GradedMatrix<S>,
    g: &GradedMatrix<S>,
    kmax: usize,
) -> Result<(Vec<S>, Vec<S>)> {
    if !g.degree().is_zero() {
        return Err(Error::Precondition("a degree 0 conjugating matrix".into()));
    }
    let g_inv = g.inverse().map_err(|_| Error::NotInvertible)?;
    let conj = g.try_mul(x)?.mul(&g_inv);
    let mut p = x.clone();
    let mut q = conj.clone();
    let mut lhs = Vec::with_capacity(kmax);
    let mut rhs = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        if k > 1 {
            p = p.mul(x);
            q = q.mul(&conj);
        }
        lhs.push(gtr(&p));
        rhs.push(gtr(&q));
    }
    Ok((lhs, rhs))
}
