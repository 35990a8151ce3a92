//! Graded Berezinian of invertible degree 0 matrices, invertibility modulo the
//! odd ideal, and the Liouville formula over a nilpotent parameter.

use crate::error::{Error, Result};
use crate::gdet::{gdet_partitioned, Route};
use crate::graded_matrix::GradedMatrix;
use crate::matrix::Matrix;
use crate::nilpotent::NilpotentPoly;
use crate::scalar::Scalar;
use crate::trace::gtr;

fn check_degree_zero<S: Scalar>(x: &GradedMatrix<S>) -> Result<()> {
    if !x.degree().is_zero() {
        return Err(Error::Precondition("a degree 0 matrix".into()));
    }
    Ok(())
}

/// Inverse of a matrix whose reduction modulo the odd ideal is invertible:
/// `Z = inv(M mod J)`, `M Z = I + W` with `W` nilpotent, and
/// `(I + W)^{-1} = I + sum_k (-W)^k`.
pub fn inverse_mod_odd<S: Scalar>(m: &Matrix<S>) -> Result<Matrix<S>> {
    let n = m.rows();
    let reduced = m.map(Scalar::strip_odd);
    let z = reduced.inverse().map_err(|_| Error::NotInvertible)?;
    let id = Matrix::identity(n, m.one());
    let w = m.mul(&z).sub(&id);
    let bound = (m.one().nilpotency_hint() + 1) * n.max(1);
    let minus_w = w.neg();
    let mut acc = id.clone();
    let mut power = id;
    let mut vanished = w.is_zero();
    for _ in 0..bound {
        if vanished {
            break;
        }
        power = power.mul(&minus_w);
        if power.is_zero() {
            vanished = true;
        } else {
            acc = acc.add(&power);
        }
    }
    if !vanished {
        return Err(Error::NotInvertible);
    }
    Ok(z.mul(&acc))
}

/// True iff the even-even and odd-odd blocks are invertible modulo the odd
/// ideal, which is equivalent to invertibility of `X`.
pub fn is_invertible0<S: Scalar>(x: &GradedMatrix<S>) -> bool {
    if !x.degree().is_zero() {
        return false;
    }
    let d = x.redivide_2x2();
    d.x11.map(Scalar::strip_odd).inverse().is_ok() && d.x22.map(Scalar::strip_odd).inverse().is_ok()
}

/// Inverse of an invertible degree 0 graded matrix.
pub fn inverse0<S: Scalar>(x: &GradedMatrix<S>) -> Result<GradedMatrix<S>> {
    check_degree_zero(x)?;
    if !is_invertible0(x) {
        return Err(Error::NotInvertible);
    }
    let inv = inverse_mod_odd(x.matrix())?;
    GradedMatrix::new_unchecked(x.ranks().clone(), x.degree(), inv)
}

/// `gber(X) = gdet(|X|_11) gdet(X_22)^{-1}` for the even/odd redivision.
pub fn gber<S: Scalar>(x: &GradedMatrix<S>) -> Result<S> {
    check_degree_zero(x)?;
    if !is_invertible0(x) {
        return Err(Error::NotInvertible);
    }
    let d = x.redivide_2x2();
    let x22_inv = inverse_mod_odd(&d.x22)?;
    let schur = d.x11.sub(&d.x12.mul(&x22_inv).mul(&d.x21));
    let top = gdet_partitioned(&schur, &d.even_sizes, Route::Udl)?.value;
    let bottom = gdet_partitioned(&d.x22, &d.odd_sizes, Route::Udl)?.value;
    let bottom_inv = bottom.try_inverse().ok_or(Error::NotInvertible)?;
    Ok(top.mul(&bottom_inv))
}

/// `(gdet(I - X12 Y21), gdet(I + Y21 X12))` for the even/odd redivision,
/// requiring `X12` or `Y21` to have a single nonzero entry.
pub fn gdetgtr_check<S: Scalar>(x: &GradedMatrix<S>, y: &GradedMatrix<S>) -> Result<(S, S)> {
    check_degree_zero(x)?;
    check_degree_zero(y)?;
    if x.ranks() != y.ranks() {
        return Err(Error::DimensionMismatch("rank vectors differ".into()));
    }
    let xd = x.redivide_2x2();
    let yd = y.redivide_2x2();
    let single = |m: &Matrix<S>| m.entries().iter().filter(|e| !e.is_zero()).count() == 1;
    if !(single(&xd.x12) || single(&yd.x21)) {
        return Err(Error::Precondition(
            "an elementary off-diagonal block".into(),
        ));
    }
    let proto = x.matrix().one();
    let a = xd.x12.mul(&yd.x21);
    let b = yd.x21.mul(&xd.x12);
    let lhs = Matrix::identity(a.rows(), proto).sub(&a);
    let rhs = Matrix::identity(b.rows(), proto).add(&b);
    Ok((
        gdet_partitioned(&lhs, &xd.even_sizes, Route::Udl)?.value,
        gdet_partitioned(&rhs, &xd.odd_sizes, Route::Udl)?.value,
    ))
}

/// Entrywise embedding into `A[zeta]/(zeta^K)` as constants.
pub fn lift<S: Scalar>(x: &GradedMatrix<S>, order: usize) -> GradedMatrix<NilpotentPoly<S>> {
    let proto = NilpotentPoly::constant(x.matrix().one().clone(), order);
    let m = Matrix::from_fn(x.dim(), x.dim(), &proto, |i, j| {
        NilpotentPoly::constant(x.get(i, j).clone(), order)
    });
    GradedMatrix::new_unchecked(x.ranks().clone(), x.degree(), m).expect("same shape")
}

/// `zeta X` over `A[zeta]/(zeta^K)`.
pub fn zeta_times<S: Scalar>(x: &GradedMatrix<S>, order: usize) -> GradedMatrix<NilpotentPoly<S>> {
    let proto = NilpotentPoly::constant(x.matrix().one().clone(), order);
    let m = Matrix::from_fn(x.dim(), x.dim(), &proto, |i, j| {
        NilpotentPoly::linear(x.get(i, j).clone(), order)
    });
    GradedMatrix::new_unchecked(x.ranks().clone(), x.degree(), m).expect("same shape")
}

/// `exp(Y) = sum_k Y^k / k!` for a matrix with entries in the ideal `(zeta)`.
pub fn matrix_exp<S: Scalar>(
    y: &GradedMatrix<NilpotentPoly<S>>,
) -> Result<GradedMatrix<NilpotentPoly<S>>> {
    let proto = y.matrix().one().clone();
    if y.matrix()
        .entries()
        .iter()
        .any(|e| !e.constant_term().is_zero())
    {
        return Err(Error::NonzeroConstantTerm);
    }
    let order = proto.order();
    let mut acc = GradedMatrix::identity(y.ranks().clone(), &proto);
    let mut power = acc.clone();
    for k in 1..order {
        power = power.mul(y);
        if power.matrix().is_zero() {
            break;
        }
        let c = num_rational::BigRational::new(1.into(), crate::nilpotent::factorial(k));
        let term =
            GradedMatrix::new_unchecked(y.ranks().clone(), y.degree(), power.matrix().scale(&c))?;
        acc = acc.try_add(&term)?;
    }
    Ok(acc)
}

/// `(gber(exp(zeta X)), exp(gtr(zeta X)))` in `A[zeta]/(zeta^K)`.
pub fn liouville_check<S: Scalar>(
    x: &GradedMatrix<S>,
    order: usize,
) -> Result<(NilpotentPoly<S>, NilpotentPoly<S>)> {
    check_degree_zero(x)?;
    if order == 0 {
        return Err(Error::Precondition("a positive truncation order".into()));
    }
    let zx = zeta_times(x, order);
    let lhs = gber(&matrix_exp(&zx)?)?;
    let rhs = gtr(&zx).exp()?;
    Ok((lhs, rhs))
}

/// First-order variation of `gdet` along `X -> (I + zeta M) X`: returns the
/// `zeta` coefficient of `gdet((I + zeta M) X)` and `gtr(M) gdet(X)`.
pub fn gdet_variation<S: Scalar>(x: &GradedMatrix<S>, m: &GradedMatrix<S>) -> Result<(S, S)> {
    check_degree_zero(x)?;
    check_degree_zero(m)?;
    let sizes = x.ranks().even_sizes().to_vec();
    if !x.ranks().is_purely_even() {
        return Err(Error::Precondition("a purely even rank vector".into()));
    }
    let id = GradedMatrix::identity(
        x.ranks().clone(),
        &NilpotentPoly::constant(x.matrix().one().clone(), 2),
    );
    let moved = id.try_add(&zeta_times(m, 2))?.try_mul(&lift(x, 2))?;
    let g = gdet_partitioned(moved.matrix(), &sizes, Route::Udl)?.value;
    let base = gdet_partitioned(x.matrix(), &sizes, Route::Udl)?.value;
    Ok((g.coeff(1).clone(), gtr(m).mul(&base)))
}
