//! Graded determinant of purely even matrices: the degree 0 core through
//! block UDL or LDU factors, the nonzero-degree extension, row reduction and
//! the interpolation oracle for permutation coefficients.

use num_rational::BigRational;
use num_traits::One;

use crate::clifford::CliffordElement;
use crate::error::{Error, Result};
use crate::graded_matrix::GradedMatrix;
use crate::matrix::Matrix;
use crate::quasidet::{ldu_decompose, udl_decompose};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Route {
    #[default]
    Udl,
    Ldu,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    /// Reject nonzero degrees when `|r| = 2, 3 (mod 4)`.
    #[default]
    Strict,
    Lax,
}

/// A graded determinant together with the diagonal quasiminors it was
/// assembled from.
#[derive(Clone, Debug, PartialEq)]
pub struct GdetResult<S: Scalar> {
    pub value: S,
    pub factors: Vec<Matrix<S>>,
}

/// Product of the classical determinants of the diagonal factors of the block
/// decomposition of `m` for the partition `sizes`.
pub fn gdet_partitioned<S: Scalar>(
    m: &Matrix<S>,
    sizes: &[usize],
    route: Route,
) -> Result<GdetResult<S>> {
    let factors = match route {
        Route::Udl => udl_decompose(m, sizes)?.d_blocks,
        Route::Ldu => ldu_decompose(m, sizes)?.d_blocks,
    };
    let mut value = m.one().clone();
    for f in &factors {
        value = value.mul(&f.det_commutative()?);
    }
    Ok(GdetResult { value, factors })
}

fn check_degree_zero_even<S: Scalar>(x: &GradedMatrix<S>) -> Result<()> {
    if !x.ranks().is_purely_even() {
        return Err(Error::Precondition("a purely even rank vector".into()));
    }
    if !x.degree().is_zero() {
        return Err(Error::Precondition("a degree 0 matrix".into()));
    }
    if !x.check_homogeneous() {
        return Err(Error::Precondition("a homogeneous matrix".into()));
    }
    Ok(())
}

/// `prod_k det |X^{1..k-1, 1..k-1}|_{kk}` for a purely even degree 0 matrix.
pub fn gdet0<S: Scalar>(x: &GradedMatrix<S>) -> Result<S> {
    Ok(gdet0_certified(x, Route::Udl)?.value)
}

/// `prod_k det |X^{k+1..q, k+1..q}|_{kk}`.
pub fn gdet_ldu<S: Scalar>(x: &GradedMatrix<S>) -> Result<S> {
    Ok(gdet0_certified(x, Route::Ldu)?.value)
}

pub fn gdet0_certified<S: Scalar>(x: &GradedMatrix<S>, route: Route) -> Result<GdetResult<S>> {
    check_degree_zero_even(x)?;
    gdet_partitioned(x.matrix(), x.ranks().even_sizes(), route)
}

/// `gdet` of a purely even degree 0 matrix where neither route is defined,
/// using that it is a polynomial in the entries: the UDL route, else the LDU
/// route, else `gdet(X + t I)` interpolated at `t = 0`.
pub fn gdet0_extended<S: Scalar>(x: &GradedMatrix<S>) -> Result<S> {
    check_degree_zero_even(x)?;
    let sizes = x.ranks().even_sizes();
    for route in [Route::Udl, Route::Ldu] {
        match gdet_partitioned(x.matrix(), sizes, route) {
            Ok(r) => return Ok(r.value),
            Err(Error::RegularityFailure { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let id = Matrix::identity(x.dim(), x.matrix().one());
    gdet_by_interpolation(x.matrix(), &id, sizes)
}

/// `q^{|r|} gdet(X_0)` with `X = q X_0`, for an invertible homogeneous `q` of
/// the degree of `X`.
pub fn gdet_graded_with<S: Scalar>(
    x: &GradedMatrix<S>,
    q: &S,
    mode: Mode,
    route: Route,
) -> Result<S> {
    if !x.ranks().is_purely_even() {
        return Err(Error::Precondition("a purely even rank vector".into()));
    }
    let gamma = x.degree();
    if !gamma.is_even() {
        return Err(Error::Precondition("an even matrix degree".into()));
    }
    let dim = x.ranks().total();
    if gamma.is_zero() {
        return Ok(gdet0_certified(x, route)?.value);
    }
    if mode == Mode::Strict && dim % 4 >= 2 {
        return Err(Error::DimensionNotAdmissible { dim });
    }
    if q.degree() != Some(gamma) {
        return Err(Error::Precondition(format!("a factor of degree {gamma}")));
    }
    let q_inv = q.try_inverse().ok_or(Error::NotInvertible)?;
    let x0 = x.scalar_mul(&q_inv)?;
    let d0 = gdet0_certified(&x0, route)?.value;
    Ok(q.pow(dim).mul(&d0))
}

/// Canonical factor: the Clifford basis monomial of the matrix degree.
pub fn canonical_factor(x: &GradedMatrix<CliffordElement>) -> Result<CliffordElement> {
    let proto = x.matrix().one();
    let alg = proto.algebra();
    let mask = alg
        .clifford_monomial_of_degree(&x.degree())
        .ok_or_else(|| {
            Error::Precondition(format!("a Clifford monomial of degree {}", x.degree()))
        })?;
    Ok(CliffordElement::monomial(alg, mask, BigRational::one()))
}

/// Graded determinant of a purely even homogeneous matrix of any even degree.
pub fn gdet_graded(
    x: &GradedMatrix<CliffordElement>,
    mode: Mode,
    route: Route,
) -> Result<CliffordElement> {
    if x.degree().is_zero() {
        return gdet_graded_with(x, x.matrix().one(), mode, route);
    }
    let q = canonical_factor(x)?;
    gdet_graded_with(x, &q, mode, route)
}

/// `G_{alpha beta}(lambda) X`.
pub fn row_reduce_g<S: Scalar>(
    x: &GradedMatrix<S>,
    alpha: usize,
    beta: usize,
    lambda: &S,
) -> Result<GradedMatrix<S>> {
    let g = GradedMatrix::g_elementary(x.ranks().clone(), alpha, beta, lambda)?;
    g.try_mul(x)
}

fn single_nonzero<S: Scalar>(m: &Matrix<S>) -> bool {
    m.entries().iter().filter(|e| !e.is_zero()).count() == 1
}

/// `(gdet(I + X12 Y21), gdet(I + Y21 X12))` for the half split of purely even
/// degree 0 matrices, requiring `X12` or `Y21` to be elementary.
pub fn elementary_sandwich_check<S: Scalar>(
    x: &GradedMatrix<S>,
    y: &GradedMatrix<S>,
) -> Result<(S, S)> {
    check_degree_zero_even(x)?;
    check_degree_zero_even(y)?;
    if x.ranks() != y.ranks() {
        return Err(Error::DimensionMismatch("rank vectors differ".into()));
    }
    let (xd, _) = x.even_halves()?;
    let (yd, _) = y.even_halves()?;
    if !(single_nonzero(&xd.x12) || single_nonzero(&yd.x21)) {
        return Err(Error::Precondition(
            "an elementary off-diagonal block".into(),
        ));
    }
    let proto = x.matrix().one();
    let a = xd.x12.mul(&yd.x21);
    let b = yd.x21.mul(&xd.x12);
    let lhs = Matrix::identity(a.rows(), proto).add(&a);
    let rhs = Matrix::identity(b.rows(), proto).add(&b);
    Ok((
        gdet_partitioned(&lhs, &xd.even_sizes, Route::Udl)?.value,
        gdet_partitioned(&rhs, &xd.odd_sizes, Route::Udl)?.value,
    ))
}

/// Exact Lagrange interpolation of `values` (taken at `points`) at 0.
pub fn interpolate_at_zero<S: Scalar>(points: &[BigRational], values: &[S]) -> Result<S> {
    if points.is_empty() || points.len() != values.len() {
        return Err(Error::Interpolation(
            "need matching nonempty samples".into(),
        ));
    }
    let mut acc = values[0].zero_like();
    for (k, (pk, vk)) in points.iter().zip(values).enumerate() {
        let mut w = BigRational::one();
        for (m, pm) in points.iter().enumerate() {
            if m != k {
                if pk == pm {
                    return Err(Error::Interpolation("repeated sample point".into()));
                }
                w *= -pm.clone() / (pk - pm);
            }
        }
        acc = acc.add(&vk.scale(&w));
    }
    Ok(acc)
}

const PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// `lim_{eps -> 0} gdet(X + eps G)` for the partition `sizes`, reached by
/// sampling `eps = 1, 2, ...` at regular points and interpolating the degree
/// `|r|` polynomial at 0.
pub fn gdet_by_interpolation<S: Scalar>(
    x: &Matrix<S>,
    g: &Matrix<S>,
    sizes: &[usize],
) -> Result<S> {
    let n = x.rows();
    let needed = n + 1;
    let mut points = Vec::with_capacity(needed);
    let mut values = Vec::with_capacity(needed);
    let mut eps = 0i64;
    while points.len() < needed {
        eps += 1;
        if eps > (4 * needed + 16) as i64 {
            return Err(Error::Interpolation(format!(
                "only {} regular samples out of {needed}",
                points.len()
            )));
        }
        let e = BigRational::from_integer(eps.into());
        let m = x.add(&g.scale(&e));
        match gdet_partitioned(&m, sizes, Route::Udl) {
            Ok(r) => {
                points.push(e);
                values.push(r.value);
            }
            Err(Error::RegularityFailure { .. }) => {}
            Err(other) => return Err(other),
        }
    }
    interpolate_at_zero(&points, &values)
}

/// Coefficient of one permutation monomial of `gdet`.
#[derive(Clone, Debug, PartialEq)]
pub struct PermutationCoefficient {
    /// `sigma[i]` is the column used by row `i`.
    pub sigma: Vec<usize>,
    /// `gdet` of the pattern restricted to the positions `(i, sigma(i))`.
    pub value: CliffordElement,
    /// `value` divided by the row-ordered product of the pattern units.
    pub normalized: BigRational,
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n)
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Permutation coefficients of `gdet` on a pattern matrix whose entries are
/// nonzero homogeneous units `u_ij`: `gdet(t_ij u_ij)` is multilinear in the
/// rows of `t`, and the coefficient of `prod_i t_{i sigma(i)}` is read off by
/// interpolation from generic perturbations of the permutation pattern.
pub fn multilinear_coefficients(
    pattern: &GradedMatrix<CliffordElement>,
) -> Result<Vec<PermutationCoefficient>> {
    check_degree_zero_even(pattern)?;
    let n = pattern.dim();
    if n > 5 {
        return Err(Error::Precondition("at most 5x5 patterns".into()));
    }
    let units = pattern.matrix();
    if units.entries().iter().any(|u| u.try_inverse().is_none()) {
        return Err(Error::Precondition(
            "a pattern of invertible entries".into(),
        ));
    }
    let sizes = pattern.ranks().even_sizes().to_vec();
    let proto = units.one().clone();
    let mut out = Vec::new();
    for sigma in permutations(n) {
        let mut value = None;
        for shift in 0..PRIMES.len() {
            let base = Matrix::from_fn(n, n, &proto, |i, j| {
                if sigma[i] == j {
                    units.get(i, j).clone()
                } else {
                    proto.zero_like()
                }
            });
            let fill = Matrix::from_fn(n, n, &proto, |i, j| {
                let p = PRIMES[(i * n + j + shift) % PRIMES.len()];
                units.get(i, j).scale(&BigRational::from_integer(p.into()))
            });
            match gdet_by_interpolation(&base, &fill, &sizes) {
                Ok(v) => {
                    value = Some(v);
                    break;
                }
                Err(Error::Interpolation(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        let value =
            value.ok_or_else(|| Error::Interpolation(format!("no regular fill for {sigma:?}")))?;
        let unit_product = (0..n).fold(proto.clone(), |acc, i| acc.mul(units.get(i, sigma[i])));
        let ratio = value.mul(&unit_product.try_inverse().ok_or(Error::NotInvertible)?);
        let normalized = ratio
            .as_rational()
            .ok_or_else(|| Error::Precondition("a real permutation coefficient".into()))?;
        out.push(PermutationCoefficient {
            sigma,
            value,
            normalized,
        });
    }
    Ok(out)
}
