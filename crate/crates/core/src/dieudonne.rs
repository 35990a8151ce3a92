//! Dieudonné determinant of matrices over `Q`, `C` or `H` (as `Cl_{0,q}`,
//! `q <= 2`) via predeterminants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::clifford::CliffordElement;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quasidet::quasiminor;
use crate::scalar::Scalar;

fn check_division_algebra(x: &Matrix<CliffordElement>) -> Result<()> {
    let d = x.one().algebra().descriptor();
    if d.p != 0 || d.q > 2 || !d.odd.is_empty() {
        return Err(Error::AlgebraMismatch);
    }
    if !x.is_square() {
        return Err(Error::NotSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    Ok(())
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n
        && p.iter()
            .all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
}

/// `D_IJ(X) = |X|_{i1 j1} |X^{i1:j1}|_{i2 j2} ... x_{iN jN}`.
pub fn predeterminant(
    x: &Matrix<CliffordElement>,
    rows: &[usize],
    cols: &[usize],
) -> Result<CliffordElement> {
    check_division_algebra(x)?;
    let n = x.rows();
    if !is_permutation(rows, n) || !is_permutation(cols, n) {
        return Err(Error::IndexOutOfRange("not a permutation".into()));
    }
    let mut acc = x.one().clone();
    for k in 0..n {
        let q = quasiminor(x, &rows[..k], &cols[..k], rows[k], cols[k])?;
        acc = acc.mul(&q);
    }
    Ok(acc)
}

/// A chain `(I, J)` along which every quasiminor is defined, with `I` the
/// identity. Column `j_k` is the first remaining column whose complementary
/// minor is invertible.
pub fn defined_chain(x: &Matrix<CliffordElement>) -> Result<(Vec<usize>, Vec<usize>)> {
    check_division_algebra(x)?;
    let n = x.rows();
    let rows: Vec<usize> = (0..n).collect();
    let mut cols = Vec::with_capacity(n);
    let mut left: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let sub = x.select(&rows[k..], &left);
        let inv = sub.inverse()?;
        // the minor of (0, c) is invertible iff (sub^{-1})_{c,0} is nonzero
        let pos = (0..left.len())
            .find(|&c| !inv.get(c, 0).is_zero())
            .ok_or(Error::SingularMatrix { column: k })?;
        cols.push(left.remove(pos));
    }
    Ok((rows, cols))
}

/// `ddet(X)^2 = |D_IJ(X)|^2` together with `ddet(X)` when it is rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ddet {
    pub norm_squared: BigRational,
    pub norm: Option<BigRational>,
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let root = |v: &BigInt| {
        let s = v.sqrt();
        (&s * &s == *v).then_some(s)
    };
    Some(BigRational::new(root(r.numer())?, root(r.denom())?))
}

pub fn ddet(x: &Matrix<CliffordElement>) -> Result<Ddet> {
    let (rows, cols) = defined_chain(x)?;
    ddet_along(x, &rows, &cols)
}

pub fn ddet_along(x: &Matrix<CliffordElement>, rows: &[usize], cols: &[usize]) -> Result<Ddet> {
    let d = predeterminant(x, rows, cols)?;
    let norm_squared: BigRational = d.terms().map(|(_, c)| c * c).sum();
    let norm = rational_sqrt(&norm_squared);
    Ok(Ddet { norm_squared, norm })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{quaternion, quaternion_norm_squared, Algebra};
    use crate::scalar::rational;

    #[test]
    fn one_by_one_and_identity() {
        let h = Algebra::quaternions();
        let one = CliffordElement::one(&h);
        let q = quaternion(&h, 1, 2, -1, 3);
        let m = Matrix::from_rows(vec![vec![q.clone()]], &one).unwrap();
        assert_eq!(predeterminant(&m, &[0], &[0]).unwrap(), q);
        let d = ddet(&m).unwrap();
        assert_eq!(d.norm_squared, rational(15));
        assert_eq!(d.norm, None);

        let id = Matrix::identity(3, &one);
        assert!(predeterminant(&id, &[0, 1, 2], &[0, 1, 2])
            .unwrap()
            .is_one());
        assert_eq!(ddet(&id).unwrap().norm, Some(rational(1)));
    }

    #[test]
    fn diagonal_is_product_of_norms() {
        let h = Algebra::quaternions();
        let one = CliffordElement::one(&h);
        let a = quaternion(&h, 1, 2, 2, 0);
        let b = quaternion(&h, 0, 3, 0, 4);
        let m = Matrix::diagonal(&[a.clone(), b.clone()], &one);
        let d = ddet(&m).unwrap();
        assert_eq!(
            d.norm_squared,
            quaternion_norm_squared(&a) * quaternion_norm_squared(&b)
        );
        assert_eq!(d.norm, Some(rational(15)));
    }

    #[test]
    fn chain_independence() {
        let h = Algebra::quaternions();
        let one = CliffordElement::one(&h);
        let q = |a, b, c, d| quaternion(&h, a, b, c, d);
        let m = Matrix::from_rows(
            vec![
                vec![q(1, 2, 0, -1), q(0, 1, 1, 0), q(3, 0, 0, 2)],
                vec![q(0, 0, 1, 1), q(2, -1, 0, 0), q(1, 1, 1, 1)],
                vec![q(4, 0, 0, 0), q(0, 0, 0, 5), q(1, -2, 3, 0)],
            ],
            &one,
        )
        .unwrap();
        let base = ddet(&m).unwrap().norm_squared;
        for (r, c) in [
            ([2, 0, 1], [1, 2, 0]),
            ([1, 2, 0], [0, 1, 2]),
            ([0, 1, 2], [2, 1, 0]),
        ] {
            assert_eq!(ddet_along(&m, &r, &c).unwrap().norm_squared, base);
        }
    }

    #[test]
    fn zero_pivot_needs_another_chain() {
        let h = Algebra::quaternions();
        let one = CliffordElement::one(&h);
        let z = CliffordElement::zero(&h);
        let q = quaternion(&h, 0, 1, 1, 0);
        // the (0,0) complementary minor is singular
        let m = Matrix::from_rows(vec![vec![one.clone(), q.clone()], vec![q.clone(), z]], &one)
            .unwrap();
        assert!(predeterminant(&m, &[0, 1], &[0, 1]).is_err());
        let (_, cols) = defined_chain(&m).unwrap();
        assert_eq!(cols, vec![1, 0]);
        assert_eq!(ddet(&m).unwrap().norm, Some(rational(2)));
    }

    #[test]
    fn singular_and_wrong_algebra() {
        let h = Algebra::quaternions();
        let one = CliffordElement::one(&h);
        let m = Matrix::from_rows(
            vec![
                vec![one.clone(), one.clone()],
                vec![one.clone(), one.clone()],
            ],
            &one,
        )
        .unwrap();
        assert!(ddet(&m).is_err());
        let c11 = Algebra::clifford(1, 1).unwrap();
        let m = Matrix::identity(2, &CliffordElement::one(&c11));
        assert_eq!(ddet(&m), Err(Error::AlgebraMismatch));
    }

    mod props {
        use crate::properties::{run_trial, Property, SuiteConfig};
        use crate::{Algebra, RankVector};
        use proptest::prelude::*;

        fn quaternions(r: &[usize]) -> SuiteConfig {
            SuiteConfig {
                algebra: Algebra::quaternions(),
                ranks: RankVector::new(r.to_vec(), 3).unwrap(),
                order: 4,
            }
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn matches_graded_determinant(seed in any::<u64>()) {
                let t = run_trial(Property::Dieudonne, &quaternions(&[1, 1, 1, 1]), seed, 0);
                prop_assert!(t.pass, "{}", t.detail);
            }
        }
    }
}
