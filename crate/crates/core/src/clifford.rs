//! Exact arithmetic in `Cl_{p,q}` over the rationals, graded by the even part
//! of `(Z2)^{n+1}`, optionally extended by anticommuting odd generators.
//!
//! Generator `e_i` (`0 <= i < n`) has degree with ones at coordinate `i` and at
//! the last coordinate `n`; it squares to `+1` for `i < p` and `-1` otherwise.
//! Odd generators `theta_j` carry caller-chosen odd degrees and square to zero.
//! Any two generators commute up to `(-1)^{<deg, deg>}`, which makes the whole
//! algebra graded commutative for the standard scalar product.
//!
//! A basis monomial is a bit mask over generators; bit `i` is generator `i`,
//! with the odd generators numbered after the Clifford ones.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{GroupElement, StandardOrder};
use crate::scalar::Scalar;

const TABLE_LIMIT: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraDescriptor {
    pub p: usize,
    pub q: usize,
    /// Degrees of adjoined odd generators (arity `p + q + 1`).
    pub odd: Vec<GroupElement>,
}

/// A descriptor together with its cached multiplication data.
#[derive(Debug)]
pub struct Algebra {
    desc: AlgebraDescriptor,
    arity: usize,
    generator_degrees: Vec<GroupElement>,
    /// Square of each generator: 1, -1 or 0.
    squares: Vec<i8>,
    /// `table[a * dim + b] = (sign, mask)` for small algebras.
    table: Option<Vec<(i8, u32)>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.desc == other.desc
    }
}

impl Eq for Algebra {}

impl Algebra {
    pub fn new(desc: AlgebraDescriptor) -> Result<Arc<Self>> {
        let n = desc.p + desc.q;
        let arity = n + 1;
        if arity > crate::group::MAX_ARITY {
            return Err(Error::UnsupportedArity(arity));
        }
        if n + desc.odd.len() > 24 {
            return Err(Error::Schema("too many generators".into()));
        }
        let last = GroupElement::unit(n, arity)?;
        let mut generator_degrees = Vec::with_capacity(n + desc.odd.len());
        let mut squares = Vec::with_capacity(n + desc.odd.len());
        for i in 0..n {
            generator_degrees.push(GroupElement::unit(i, arity)?.add(&last));
            squares.push(if i < desc.p { 1 } else { -1 });
        }
        for d in &desc.odd {
            if d.arity() != arity {
                return Err(Error::ArityMismatch {
                    left: d.arity(),
                    right: arity,
                });
            }
            if d.is_even() {
                return Err(Error::Schema(format!("odd generator degree {d} is even")));
            }
            generator_degrees.push(*d);
            squares.push(0);
        }
        let mut alg = Self {
            desc,
            arity,
            generator_degrees,
            squares,
            table: None,
        };
        let dim = alg.dimension();
        if dim <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(dim * dim);
            for a in 0..dim as u32 {
                for b in 0..dim as u32 {
                    table.push(alg.monomial_product_raw(a, b));
                }
            }
            alg.table = Some(table);
        }
        Ok(Arc::new(alg))
    }

    pub fn clifford(p: usize, q: usize) -> Result<Arc<Self>> {
        Self::new(AlgebraDescriptor { p, q, odd: vec![] })
    }

    /// `Cl_{0,2}`, identified with the quaternions through [`quaternion_units`].
    pub fn quaternions() -> Arc<Self> {
        Self::clifford(0, 2).expect("Cl(0,2) is valid")
    }

    /// The rationals, `Cl_{0,0}` graded by `Z2`.
    pub fn rationals() -> Arc<Self> {
        Self::clifford(0, 0).expect("Cl(0,0) is valid")
    }

    pub fn descriptor(&self) -> &AlgebraDescriptor {
        &self.desc
    }

    /// Number of Clifford generators `n = p + q`.
    pub fn n(&self) -> usize {
        self.desc.p + self.desc.q
    }

    pub fn odd_count(&self) -> usize {
        self.desc.odd.len()
    }

    pub fn generator_count(&self) -> usize {
        self.generator_degrees.len()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dimension(&self) -> usize {
        1 << self.generator_count()
    }

    pub fn generator_degree(&self, i: usize) -> GroupElement {
        self.generator_degrees[i]
    }

    /// Mask selecting the odd generators.
    pub fn odd_mask(&self) -> u32 {
        let n = self.n();
        ((1u32 << self.odd_count()) - 1) << n
    }

    pub fn mask_degree(&self, mask: u32) -> GroupElement {
        let mut d = GroupElement::zero(self.arity).expect("arity checked");
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            d = d.add(&self.generator_degrees[i]);
            m &= m - 1;
        }
        d
    }

    /// All basis masks of a given degree.
    pub fn masks_of_degree(&self, g: &GroupElement) -> Vec<u32> {
        (0..self.dimension() as u32)
            .filter(|&m| self.mask_degree(m) == *g)
            .collect()
    }

    /// The unique Clifford (odd-generator free) basis monomial of an even degree.
    pub fn clifford_monomial_of_degree(&self, g: &GroupElement) -> Option<u32> {
        if g.arity() != self.arity || !g.is_even() {
            return None;
        }
        let n = self.n();
        // coordinate i of g (from the left) is bit arity-1-i of the mask
        let mut mask = 0u32;
        for i in 0..n {
            if (g.bits() >> (self.arity - 1 - i)) & 1 == 1 {
                mask |= 1 << i;
            }
        }
        (self.mask_degree(mask) == *g).then_some(mask)
    }

    pub fn standard_order(&self) -> StandardOrder {
        StandardOrder::new(self.arity).expect("arity checked")
    }

    /// Product of two basis monomials as `(sign, mask)`; sign 0 means zero.
    pub fn monomial_product(&self, a: u32, b: u32) -> (i8, u32) {
        match &self.table {
            Some(t) => t[a as usize * self.dimension() + b as usize],
            None => self.monomial_product_raw(a, b),
        }
    }

    fn monomial_product_raw(&self, a: u32, b: u32) -> (i8, u32) {
        // Move each generator of b left past the generators of a with larger index.
        let mut parity = 0u32;
        let mut bm = b;
        while bm != 0 {
            let j = bm.trailing_zeros() as usize;
            let above = a & !((2u32 << j) - 1);
            let d = self.mask_degree(above);
            parity ^= d.dot(&self.generator_degrees[j]) as u32;
            bm &= bm - 1;
        }
        let mut sign: i8 = if parity == 0 { 1 } else { -1 };
        let mut common = a & b;
        while common != 0 {
            let i = common.trailing_zeros() as usize;
            sign *= self.squares[i];
            common &= common - 1;
        }
        (sign, a ^ b)
    }
}

/// An element of an [`Algebra`]: a sparse map from basis masks to nonzero
/// rational coefficients.
#[derive(Clone)]
pub struct CliffordElement {
    algebra: Arc<Algebra>,
    terms: BTreeMap<u32, BigRational>,
}

impl PartialEq for CliffordElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra)
            && self.terms == other.terms
    }
}

impl CliffordElement {
    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        Self {
            algebra: algebra.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(algebra: &Arc<Algebra>) -> Self {
        Self::monomial(algebra, 0, BigRational::one())
    }

    pub fn from_integer(algebra: &Arc<Algebra>, c: i64) -> Self {
        Self::monomial(algebra, 0, BigRational::from_integer(c.into()))
    }

    pub fn from_rational(algebra: &Arc<Algebra>, c: BigRational) -> Self {
        Self::monomial(algebra, 0, c)
    }

    pub fn monomial(algebra: &Arc<Algebra>, mask: u32, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            assert!(
                (mask as usize) < algebra.dimension(),
                "mask {mask} outside algebra"
            );
            terms.insert(mask, coeff);
        }
        Self {
            algebra: algebra.clone(),
            terms,
        }
    }

    /// Clifford generator `e_{i+1}` (zero based index `i`).
    pub fn generator(algebra: &Arc<Algebra>, i: usize) -> Self {
        assert!(i < algebra.n(), "generator index out of range");
        Self::monomial(algebra, 1 << i, BigRational::one())
    }

    /// Odd generator `theta_{j+1}`.
    pub fn odd_generator(algebra: &Arc<Algebra>, j: usize) -> Self {
        assert!(j < algebra.odd_count(), "odd generator index out of range");
        Self::monomial(algebra, 1 << (algebra.n() + j), BigRational::one())
    }

    pub fn from_terms(
        algebra: &Arc<Algebra>,
        terms: impl IntoIterator<Item = (u32, BigRational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(algebra);
        for (mask, c) in terms {
            if mask as usize >= algebra.dimension() {
                return Err(Error::Schema(format!("mask {mask} outside algebra")));
            }
            out.add_term(mask, c);
        }
        Ok(out)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, mask: u32) -> BigRational {
        self.terms
            .get(&mask)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// The rational coefficient of `1`.
    pub fn scalar_part(&self) -> BigRational {
        self.coefficient(0)
    }

    /// `Some(c)` if the element is `c * 1`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, mask: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mask) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.algebra);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (s, m) = self.algebra.monomial_product(*a, *b);
                match s {
                    0 => {}
                    1 => out.add_term(m, ca * cb),
                    _ => out.add_term(m, -(ca * cb)),
                }
            }
        }
        out
    }

    /// Degree of a nonzero element, or [`Homogeneity::NonHomogeneous`].
    pub fn degree_of(&self) -> Result<Homogeneity> {
        let mut degrees = self.terms.keys().map(|m| self.algebra.mask_degree(*m));
        let first = degrees.next().ok_or(Error::ZeroHasNoDegree)?;
        if degrees.all(|d| d == first) {
            Ok(Homogeneity::Homogeneous(first))
        } else {
            Ok(Homogeneity::NonHomogeneous)
        }
    }

    pub fn invert(&self) -> Result<Self> {
        self.try_inverse().ok_or(Error::NotInvertible)
    }

    /// The element with odd-generator terms removed.
    pub fn clifford_part(&self) -> Self {
        let odd = self.algebra.odd_mask();
        Self {
            algebra: self.algebra.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| *m & odd == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Inverse inside the Clifford (odd-free) subalgebra.
    fn invert_clifford(&self) -> Option<Self> {
        if self.terms.is_empty() {
            return None;
        }
        if self.terms.len() == 1 {
            let (&m, c) = self.terms.iter().next().unwrap();
            let (s, _) = self.algebra.monomial_product(m, m);
            if s == 0 {
                return None;
            }
            // e_I^{-1} = s e_I since e_I e_I = s = +-1
            let inv = BigRational::from_integer(BigInt::from(s)) / c;
            return Some(Self::monomial(&self.algebra, m, inv));
        }
        self.invert_by_regular_representation()
    }

    /// Solves `self * x = 1` in the `2^n`-dimensional Clifford subalgebra.
    fn invert_by_regular_representation(&self) -> Option<Self> {
        let dim = 1usize << self.algebra.n();
        // column j holds self * e_j
        let mut system = vec![vec![BigRational::zero(); dim + 1]; dim];
        for j in 0..dim {
            for (a, c) in &self.terms {
                let (s, m) = self.algebra.monomial_product(*a, j as u32);
                if s != 0 {
                    let v = if s > 0 { c.clone() } else { -c.clone() };
                    system[m as usize][j] += v;
                }
            }
        }
        system[0][dim] = BigRational::one();
        let x = solve_fraction_free(system)?;
        let inv = Self::from_terms(
            &self.algebra,
            x.into_iter().enumerate().map(|(i, c)| (i as u32, c)),
        )
        .ok()?;
        // finite dimensional: a right inverse is two-sided, but confirm anyway
        (inv.mul_unchecked(self).is_one()).then_some(inv)
    }

    pub fn conjugate_quaternion(&self) -> Self {
        Self {
            algebra: self.algebra.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if *m == 0 { c.clone() } else { -c.clone() }))
                .collect(),
        }
    }
}

/// Result of [`CliffordElement::degree_of`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(GroupElement),
    NonHomogeneous,
}

/// Solves a square linear system given as an augmented matrix, using
/// fraction-free (Bareiss) elimination on an integer scaling of the rows.
fn solve_fraction_free(rows: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let n = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |l, c| {
                num_integer::Integer::lcm(&l, c.denom())
            });
            row.into_iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, pivot);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(a[i][n].clone());
        for j in i + 1..n {
            acc -= BigRational::from_integer(a[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(a[i][i].clone());
    }
    Some(x)
}

impl Scalar for CliffordElement {
    fn zero_like(&self) -> Self {
        Self::zero(&self.algebra)
    }

    fn one_like(&self) -> Self {
        Self::one(&self.algebra)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("algebra mismatch")
    }

    fn sub(&self, rhs: &Self) -> Self {
        Scalar::add(self, &Scalar::neg(rhs))
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("algebra mismatch")
    }

    fn neg(&self) -> Self {
        Self {
            algebra: self.algebra.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        Self {
            algebra: self.algebra.clone(),
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    fn try_inverse(&self) -> Option<Self> {
        let base = self.clifford_part();
        let base_inv = base.invert_clifford()?;
        let nil = Scalar::sub(self, &base);
        if nil.is_zero() {
            return Some(base_inv);
        }
        // (b + N)^{-1} = sum_k (-b^{-1} N)^k b^{-1}; N lies in a nilpotent ideal
        let step = Scalar::neg(&base_inv.mul_unchecked(&nil));
        let mut power = self.one_like();
        let mut acc = self.zero_like();
        for _ in 0..=self.algebra.odd_count() + 1 {
            acc = Scalar::add(&acc, &power);
            power = power.mul_unchecked(&step);
            if power.is_zero() {
                break;
            }
        }
        Some(acc.mul_unchecked(&base_inv))
    }

    fn grading_arity(&self) -> usize {
        self.algebra.arity()
    }

    fn homogeneous_parts(&self) -> Vec<(GroupElement, Self)> {
        let mut parts: BTreeMap<GroupElement, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = self.algebra.mask_degree(*m);
            parts
                .entry(d)
                .or_insert_with(|| Self::zero(&self.algebra))
                .add_term(*m, c.clone());
        }
        parts.into_iter().collect()
    }

    fn strip_odd(&self) -> Self {
        self.clifford_part()
    }

    fn nilpotency_hint(&self) -> usize {
        self.algebra.odd_count()
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }
}

impl std::ops::Add for &CliffordElement {
    type Output = CliffordElement;
    fn add(self, rhs: Self) -> CliffordElement {
        Scalar::add(self, rhs)
    }
}

impl std::ops::Sub for &CliffordElement {
    type Output = CliffordElement;
    fn sub(self, rhs: Self) -> CliffordElement {
        Scalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &CliffordElement {
    type Output = CliffordElement;
    fn mul(self, rhs: Self) -> CliffordElement {
        Scalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        Scalar::neg(self)
    }
}

fn mask_label(alg: &Algebra, mask: u32) -> String {
    let mut s = String::new();
    for i in 0..alg.generator_count() {
        if mask >> i & 1 == 1 {
            if i < alg.n() {
                s.push_str(&format!("e{}", i + 1));
            } else {
                s.push_str(&format!("t{}", i - alg.n() + 1));
            }
        }
    }
    s
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if *m == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mask_label(&self.algebra, *m))?;
            } else {
                write!(f, "{abs}*{}", mask_label(&self.algebra, *m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Quaternion units `(i, j, k)` in `Cl_{0,2}` with degrees `(0,1,1)`,
/// `(1,0,1)` and `(1,1,0)`: `i = e2`, `j = e1`, `k = i j = e2 e1`.
pub fn quaternion_units(
    algebra: &Arc<Algebra>,
) -> (CliffordElement, CliffordElement, CliffordElement) {
    let i = CliffordElement::generator(algebra, 1);
    let j = CliffordElement::generator(algebra, 0);
    let k = &i * &j;
    (i, j, k)
}

/// `x + a i + b j + c k` from integer coefficients.
pub fn quaternion(algebra: &Arc<Algebra>, x: i64, a: i64, b: i64, c: i64) -> CliffordElement {
    let r = |v: i64| BigRational::from_integer(v.into());
    quaternion_rational(algebra, [r(x), r(a), r(b), r(c)])
}

pub fn quaternion_rational(algebra: &Arc<Algebra>, c: [BigRational; 4]) -> CliffordElement {
    let (i, j, k) = quaternion_units(algebra);
    let [x, a, b, cc] = c;
    let one = CliffordElement::one(algebra);
    [one.scale(&x), i.scale(&a), j.scale(&b), k.scale(&cc)]
        .iter()
        .fold(CliffordElement::zero(algebra), |acc, t| &acc + t)
}

/// Squared norm `q * conj(q)` of a quaternion in `Cl_{0,2}`.
pub fn quaternion_norm_squared(q: &CliffordElement) -> BigRational {
    q.terms().map(|(_, c)| c * c).sum()
}
