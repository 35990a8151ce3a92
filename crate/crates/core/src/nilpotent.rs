//! Truncated polynomials `A[z]/(z^K)` in a degree-zero nilpotent parameter.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::scalar::Scalar;

pub const DEFAULT_ORDER: usize = 8;

/// `sum_{k < K} c_k z^k`, with `z^K = 0`.
#[derive(Clone, PartialEq)]
pub struct NilpotentPoly<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> NilpotentPoly<S> {
    /// The constant `c` in a ring of truncation order `order` (at least 1).
    pub fn constant(c: S, order: usize) -> Self {
        assert!(order >= 1, "truncation order must be positive");
        let zero = c.zero_like();
        let mut coeffs = vec![zero; order];
        coeffs[0] = c;
        Self { coeffs }
    }

    /// `c * z`.
    pub fn linear(c: S, order: usize) -> Self {
        let mut p = Self::constant(c.zero_like(), order);
        if order > 1 {
            p.coeffs[1] = c;
        }
        p
    }

    pub fn from_coeffs(mut coeffs: Vec<S>, order: usize) -> Self {
        assert!(!coeffs.is_empty(), "need a prototype coefficient");
        let zero = coeffs[0].zero_like();
        coeffs.resize(order, zero);
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &S {
        &self.coeffs[k]
    }

    pub fn constant_term(&self) -> &S {
        &self.coeffs[0]
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "truncation order mismatch");
    }

    /// `sum_{k<K} x^k / k!` for `x` a multiple of `z`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let one = self.coeffs[0].one_like();
        let mut acc = Self::constant(one.clone(), self.order());
        let mut power = acc.clone();
        for k in 1..self.order() {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            let inv = BigRational::new(One::one(), factorial(k));
            acc = acc.add(&power.scale(&inv));
        }
        Ok(acc)
    }
}

pub(crate) fn factorial(k: usize) -> num_bigint::BigInt {
    (1..=k).fold(num_bigint::BigInt::one(), |a, i| a * i)
}

pub fn nilpotent_exp<S: Scalar>(x: &NilpotentPoly<S>) -> Result<NilpotentPoly<S>> {
    x.exp()
}

impl<S: Scalar> Scalar for NilpotentPoly<S> {
    fn zero_like(&self) -> Self {
        Self::constant(self.coeffs[0].zero_like(), self.order())
    }

    fn one_like(&self) -> Self {
        Self::constant(self.coeffs[0].one_like(), self.order())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check_order(rhs);
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.check_order(rhs);
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.check_order(rhs);
        let k = self.order();
        let mut out: Vec<S> = vec![self.coeffs[0].zero_like(); k];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(k - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self { coeffs: out }
    }

    fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    fn try_inverse(&self) -> Option<Self> {
        let c0_inv = self.coeffs[0].try_inverse()?;
        // (c0 + N)^{-1} = sum_k (-c0^{-1} N)^k c0^{-1}
        let mut nil = self.clone();
        nil.coeffs[0] = nil.coeffs[0].zero_like();
        let base_inv = Self::constant(c0_inv, self.order());
        let step = base_inv.mul(&nil).neg();
        let mut power = self.one_like();
        let mut acc = self.zero_like();
        for _ in 0..self.order() {
            acc = acc.add(&power);
            power = power.mul(&step);
            if power.is_zero() {
                break;
            }
        }
        Some(acc.mul(&base_inv))
    }

    fn grading_arity(&self) -> usize {
        self.coeffs[0].grading_arity()
    }

    fn homogeneous_parts(&self) -> Vec<(GroupElement, Self)> {
        let mut parts: BTreeMap<GroupElement, Self> = BTreeMap::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            for (d, part) in c.homogeneous_parts() {
                let entry = parts.entry(d).or_insert_with(|| self.zero_like());
                entry.coeffs[k] = entry.coeffs[k].add(&part);
            }
        }
        parts.into_iter().collect()
    }

    fn strip_odd(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(Scalar::strip_odd).collect(),
        }
    }

    fn nilpotency_hint(&self) -> usize {
        self.coeffs[0].nilpotency_hint()
    }

    fn from_rational(&self, c: &BigRational) -> Self {
        Self::constant(self.coeffs[0].from_rational(c), self.order())
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for NilpotentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for NilpotentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}
