use std::fmt;

use num_rational::BigRational;

use crate::group::GroupElement;

/// A `(Z2)^m`-graded commutative ring whose elements carry enough context to
/// build their own zero and unit.
///
/// Everything in the crate (matrices, quasideterminants, determinants) is
/// written against this trait so the same code runs over Clifford scalars and
/// over truncated polynomials in a nilpotent parameter.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &BigRational) -> Self;

    /// Two-sided inverse, or `None` when the element is not a unit.
    fn try_inverse(&self) -> Option<Self>;

    fn grading_arity(&self) -> usize;

    /// Decomposition into nonzero homogeneous components.
    fn homogeneous_parts(&self) -> Vec<(GroupElement, Self)>;

    /// Reduction modulo the ideal generated by odd elements, lifted back.
    fn strip_odd(&self) -> Self;

    /// Number of nilpotent odd generators behind the ring; bounds the
    /// nilpotency index of matrices over the odd ideal.
    fn nilpotency_hint(&self) -> usize {
        0
    }

    fn from_rational(&self, c: &BigRational) -> Self {
        self.one_like().scale(c)
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// `Some(degree)` when nonzero and homogeneous.
    fn degree(&self) -> Option<GroupElement> {
        let parts = self.homogeneous_parts();
        match parts.as_slice() {
            [(g, _)] => Some(*g),
            _ => None,
        }
    }

    /// True when zero or homogeneous of degree `g`.
    fn has_degree(&self, g: &GroupElement) -> bool {
        self.homogeneous_parts().iter().all(|(d, _)| d == g)
    }

    fn pow(&self, exp: usize) -> Self {
        let mut acc = self.one_like();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
