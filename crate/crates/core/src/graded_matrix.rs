//! Homogeneous graded matrices: block structure indexed by the standard order
//! of `(Z2)^m`, the signed scalar action, products and commutators.

use crate::error::{Error, Result};
use crate::group::{sign, GroupElement, StandardOrder};
use crate::matrix::{block_indices, offsets, Matrix};
use crate::scalar::Scalar;

/// Block dimensions `(r_1, ..., r_{2^m})`, one per element of the standard order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankVector {
    ranks: Vec<usize>,
    order: StandardOrder,
}

impl RankVector {
    /// `ranks` has length `2^arity`, or `2^(arity-1)` as shorthand for a purely
    /// even vector (odd ranks zero).
    pub fn new(ranks: Vec<usize>, arity: usize) -> Result<Self> {
        let order = StandardOrder::new(arity)?;
        let full = order.len();
        let mut ranks = ranks;
        if ranks.len() == full / 2 {
            ranks.resize(full, 0);
        }
        if ranks.len() != full {
            return Err(Error::Schema(format!(
                "rank vector of length {} for arity {arity} (expected {} or {full})",
                ranks.len(),
                full / 2
            )));
        }
        Ok(Self { ranks, order })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn arity(&self) -> usize {
        self.order.arity()
    }

    pub fn order(&self) -> &StandardOrder {
        &self.order
    }

    /// `|r|`.
    pub fn total(&self) -> usize {
        self.ranks.iter().sum()
    }

    pub fn block_count(&self) -> usize {
        self.ranks.len()
    }

    pub fn block_degree(&self, k: usize) -> GroupElement {
        self.order.get(k)
    }

    /// Block index of a flat row/column index.
    pub fn block_of(&self, alpha: usize) -> usize {
        let mut acc = 0;
        for (k, r) in self.ranks.iter().enumerate() {
            acc += r;
            if alpha < acc {
                return k;
            }
        }
        panic!("index {alpha} outside rank vector {:?}", self.ranks);
    }

    /// Row weight `w_alpha = gamma_k` for `alpha` in block `k`.
    pub fn weight(&self, alpha: usize) -> GroupElement {
        self.block_degree(self.block_of(alpha))
    }

    pub fn is_purely_even(&self) -> bool {
        self.odd_sizes().iter().all(|&r| r == 0)
    }

    pub fn even_sizes(&self) -> &[usize] {
        &self.ranks[..self.ranks.len() / 2]
    }

    pub fn odd_sizes(&self) -> &[usize] {
        &self.ranks[self.ranks.len() / 2..]
    }

    /// Flat indices of even rows and of odd rows.
    pub fn parity_indices(&self) -> (Vec<usize>, Vec<usize>) {
        let (even, odd) = self.order.parity_split();
        (
            block_indices(&self.ranks, &even),
            block_indices(&self.ranks, &odd),
        )
    }
}

/// A square graded matrix with declared degree `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMatrix<S: Scalar> {
    ranks: RankVector,
    degree: GroupElement,
    matrix: Matrix<S>,
}

/// The even/odd 2x2 redivision of a graded matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Redivision<S: Scalar> {
    pub x11: Matrix<S>,
    pub x12: Matrix<S>,
    pub x21: Matrix<S>,
    pub x22: Matrix<S>,
    pub even_sizes: Vec<usize>,
    pub odd_sizes: Vec<usize>,
}

impl<S: Scalar> GradedMatrix<S> {
    /// Validates shape and the block degree law.
    pub fn new(ranks: RankVector, degree: GroupElement, matrix: Matrix<S>) -> Result<Self> {
        let m = Self::new_unchecked(ranks, degree, matrix)?;
        if let Some((row, col)) = m.first_violation() {
            return Err(Error::HomogeneityViolation { row, col });
        }
        Ok(m)
    }

    /// Checks shapes only; the block degree law is not enforced.
    pub fn new_unchecked(
        ranks: RankVector,
        degree: GroupElement,
        matrix: Matrix<S>,
    ) -> Result<Self> {
        let n = ranks.total();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for |r| = {n}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        if degree.arity() != ranks.arity() {
            return Err(Error::ArityMismatch {
                left: degree.arity(),
                right: ranks.arity(),
            });
        }
        if let Some(e) = matrix.entries().iter().find(|e| !e.is_zero()) {
            if e.grading_arity() != ranks.arity() {
                return Err(Error::ArityMismatch {
                    left: e.grading_arity(),
                    right: ranks.arity(),
                });
            }
        }
        Ok(Self {
            ranks,
            degree,
            matrix,
        })
    }

    pub fn identity(ranks: RankVector, proto: &S) -> Self {
        let n = ranks.total();
        let degree = GroupElement::zero(ranks.arity()).expect("arity checked");
        Self {
            ranks,
            degree,
            matrix: Matrix::identity(n, proto),
        }
    }

    pub fn zeros(ranks: RankVector, degree: GroupElement, proto: &S) -> Self {
        let n = ranks.total();
        Self {
            ranks,
            degree,
            matrix: Matrix::zeros(n, n, proto),
        }
    }

    pub fn ranks(&self) -> &RankVector {
        &self.ranks
    }

    pub fn degree(&self) -> GroupElement {
        self.degree
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<S> {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        self.matrix.get(i, j)
    }

    /// Required degree of entry `(i, j)`: `w_i + w_j + x`.
    pub fn entry_degree(&self, i: usize, j: usize) -> GroupElement {
        self.ranks
            .weight(i)
            .add(&self.ranks.weight(j))
            .add(&self.degree)
    }

    fn first_violation(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| !self.get(i, j).has_degree(&self.entry_degree(i, j)))
    }

    /// True iff every entry is zero or of degree `w_i + w_j + x`.
    pub fn check_homogeneous(&self) -> bool {
        self.first_violation().is_none()
    }

    fn same_ranks(&self, other: &Self) -> Result<()> {
        if self.ranks != other.ranks {
            return Err(Error::DimensionMismatch(format!(
                "rank vectors {:?} and {:?}",
                self.ranks.ranks(),
                other.ranks.ranks()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_ranks(other)?;
        if self.degree != other.degree {
            return Err(Error::Precondition("summands of equal degree".into()));
        }
        Ok(self.with_matrix(self.matrix.add(&other.matrix), self.degree))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.with_matrix(self.matrix.neg(), self.degree)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_ranks(other)?;
        Ok(self.with_matrix(
            self.matrix.mul(&other.matrix),
            self.degree.add(&other.degree),
        ))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("rank mismatch")
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.ranks.clone(), self.matrix.one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(self.with_matrix(self.matrix.inverse()?, self.degree))
    }

    fn with_matrix(&self, matrix: Matrix<S>, degree: GroupElement) -> Self {
        Self {
            ranks: self.ranks.clone(),
            degree,
            matrix,
        }
    }

    /// Module action: block row `k` is multiplied by `(-1)^{<deg a, gamma_k>} a`.
    pub fn scalar_mul(&self, a: &S) -> Result<Self> {
        if a.is_zero() {
            return Ok(self.with_matrix(Matrix::zeros(self.dim(), self.dim(), a), self.degree));
        }
        let da = a.degree().ok_or(Error::NotHomogeneous)?;
        let neg_a = a.neg();
        let m = Matrix::from_fn(self.dim(), self.dim(), a, |i, j| {
            let s = if sign(&da, &self.ranks.weight(i)) > 0 {
                a
            } else {
                &neg_a
            };
            s.mul(self.get(i, j))
        });
        Ok(self.with_matrix(m, self.degree.add(&da)))
    }

    /// `E_{alpha beta}(lambda)`: the single nonzero entry `lambda` at `(alpha, beta)`.
    pub fn elementary(ranks: RankVector, alpha: usize, beta: usize, lambda: &S) -> Result<Self> {
        let n = ranks.total();
        if alpha >= n || beta >= n {
            return Err(Error::IndexOutOfRange(format!(
                "({alpha}, {beta}) in {n}x{n}"
            )));
        }
        let w = ranks.weight(alpha).add(&ranks.weight(beta));
        let degree = if lambda.is_zero() {
            GroupElement::zero(ranks.arity())?
        } else {
            lambda.degree().ok_or(Error::NotHomogeneous)?.add(&w)
        };
        let mut m = Matrix::zeros(n, n, lambda);
        m.set(alpha, beta, lambda.clone());
        Ok(Self {
            ranks,
            degree,
            matrix: m,
        })
    }

    /// `G_{alpha beta}(lambda) = I + E_{alpha beta}(lambda)`, a degree 0 matrix.
    pub fn g_elementary(ranks: RankVector, alpha: usize, beta: usize, lambda: &S) -> Result<Self> {
        if alpha == beta {
            return Err(Error::Precondition("distinct row and column".into()));
        }
        let e = Self::elementary(ranks, alpha, beta, lambda)?;
        if !e.degree.is_zero() {
            return Err(Error::Precondition(format!(
                "lambda of degree {}",
                e.ranks.weight(alpha).add(&e.ranks.weight(beta))
            )));
        }
        let id = Self::identity(e.ranks.clone(), lambda);
        id.try_add(&e)
    }

    /// Graded commutator `XY - (-1)^{<x, y>} YX`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        let xy = self.try_mul(other)?;
        let yx = other.mul(self);
        let m = if sign(&self.degree, &other.degree) > 0 {
            xy.matrix.sub(&yx.matrix)
        } else {
            xy.matrix.add(&yx.matrix)
        };
        Ok(self.with_matrix(m, xy.degree))
    }

    /// Submatrix on whole blocks, with the matching rank vector; the blocks
    /// keep their degrees.
    pub fn block_submatrix(&self, blocks: &[usize]) -> Matrix<S> {
        let idx = block_indices(self.ranks.ranks(), blocks);
        self.matrix.select(&idx, &idx)
    }

    /// Even/odd redivision `(X11 X12; X21 X22)` following the parity split.
    pub fn redivide_2x2(&self) -> Redivision<S> {
        let (ev, od) = self.ranks.parity_indices();
        Redivision {
            x11: self.matrix.select(&ev, &ev),
            x12: self.matrix.select(&ev, &od),
            x21: self.matrix.select(&od, &ev),
            x22: self.matrix.select(&od, &od),
            even_sizes: self.ranks.even_sizes().to_vec(),
            odd_sizes: self.ranks.odd_sizes().to_vec(),
        }
    }

    /// For a purely even matrix: the even blocks split into a first and second
    /// half (leading coordinate of the block degree), as used in the recursive
    /// form of the graded determinant. Returns `(X11, X12, X21, X22)` and the
    /// block sizes of each half.
    pub fn even_halves(&self) -> Result<(Redivision<S>, usize)> {
        if !self.ranks.is_purely_even() {
            return Err(Error::Precondition("a purely even rank vector".into()));
        }
        let q = self.ranks.even_sizes().len();
        if q < 2 {
            return Err(Error::Precondition("at least two even blocks".into()));
        }
        let sizes = self.ranks.even_sizes();
        let first: Vec<usize> = (0..q / 2).collect();
        let second: Vec<usize> = (q / 2..q).collect();
        let a = block_indices(sizes, &first);
        let b = block_indices(sizes, &second);
        Ok((
            Redivision {
                x11: self.matrix.select(&a, &a),
                x12: self.matrix.select(&a, &b),
                x21: self.matrix.select(&b, &a),
                x22: self.matrix.select(&b, &b),
                even_sizes: sizes[..q / 2].to_vec(),
                odd_sizes: sizes[q / 2..].to_vec(),
            },
            a.len(),
        ))
    }

    /// Splits into homogeneous components `(degree, matrix)`; each component
    /// keeps the entries of the matching block degree.
    pub fn homogeneous_components(&self) -> Vec<GradedMatrix<S>> {
        let n = self.dim();
        let arity = self.ranks.arity();
        let mut out: Vec<GradedMatrix<S>> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let w = self.ranks.weight(i).add(&self.ranks.weight(j));
                for (d, part) in self.get(i, j).homogeneous_parts() {
                    let x = d.add(&w);
                    let pos = match out.iter().position(|c| c.degree == x) {
                        Some(p) => p,
                        None => {
                            out.push(Self::zeros(self.ranks.clone(), x, self.matrix.one()));
                            out.len() - 1
                        }
                    };
                    out[pos].matrix.set(i, j, part);
                }
            }
        }
        debug_assert!(out.iter().all(|c| c.degree.arity() == arity));
        out.sort_by_key(|c| c.degree);
        out
    }

    /// Rows of block `k` as a flat index range start.
    pub fn block_offset(&self, k: usize) -> usize {
        offsets(self.ranks.ranks())[k]
    }
}
