//! Dense matrices over a (possibly noncommutative) [`Scalar`] ring.

use std::collections::HashMap;
use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major dense matrix. Carries a unit element so empty and zero matrices
/// still know their ring.
#[derive(Clone, PartialEq)]
pub struct Matrix<S: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
    one: S,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_fn(
        rows: usize,
        cols: usize,
        proto: &S,
        mut f: impl FnMut(usize, usize) -> S,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            data,
            one: proto.one_like(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<S>>, proto: &S) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
            one: proto.one_like(),
        })
    }

    pub fn zeros(rows: usize, cols: usize, proto: &S) -> Self {
        let z = proto.zero_like();
        Self::from_fn(rows, cols, proto, |_, _| z.clone())
    }

    pub fn identity(n: usize, proto: &S) -> Self {
        let (z, o) = (proto.zero_like(), proto.one_like());
        Self::from_fn(
            n,
            n,
            proto,
            |i, j| if i == j { o.clone() } else { z.clone() },
        )
    }

    pub fn diagonal(entries: &[S], proto: &S) -> Self {
        let z = proto.zero_like();
        Self::from_fn(entries.len(), entries.len(), proto, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                z.clone()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn one(&self) -> &S {
        &self.one
    }

    pub fn zero(&self) -> S {
        self.one.zero_like()
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            one: self.one.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sum")?;
        Ok(self.zip(other, S::add))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "difference")?;
        Ok(self.zip(other, S::sub))
    }

    fn zip(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
            one: self.one.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("shape mismatch")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("shape mismatch")
    }

    pub fn neg(&self) -> Self {
        self.map(S::neg)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.map(|x| x.scale(c))
    }

    /// Entrywise left multiplication `a * x_ij` (no grading signs).
    pub fn left_mul_scalar(&self, a: &S) -> Self {
        self.map(|x| a.mul(x))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let z = self.zero();
        let mut data = vec![z; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let slot = &mut data[i * other.cols + j];
                        *slot = slot.add(&a.mul(b));
                    }
                }
            }
        }
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
            one: self.one.clone(),
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("shape mismatch")
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.rows, &self.one);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, &self.one, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// Submatrix on the given row and column index lists (in that order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), &self.one, |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// `X^{i:j}`: delete row `i` and column `j`.
    pub fn without(&self, row: usize, col: usize) -> Self {
        let rows: Vec<_> = (0..self.rows).filter(|&r| r != row).collect();
        let cols: Vec<_> = (0..self.cols).filter(|&c| c != col).collect();
        self.select(&rows, &cols)
    }

    /// Assembles a matrix from a grid of blocks with consistent shapes.
    pub fn from_blocks(blocks: &[Vec<Self>], proto: &S) -> Result<Self> {
        let row_sizes: Vec<usize> = blocks
            .iter()
            .map(|r| r.first().map_or(0, |b| b.rows))
            .collect();
        let ncols = blocks.first().map_or(0, Vec::len);
        let col_sizes: Vec<usize> = (0..ncols).map(|u| blocks[0][u].cols).collect();
        for (k, row) in blocks.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch("ragged block grid".into()));
            }
            for (u, b) in row.iter().enumerate() {
                if b.rows != row_sizes[k] || b.cols != col_sizes[u] {
                    return Err(Error::DimensionMismatch(format!(
                        "block ({k},{u}) has wrong shape"
                    )));
                }
            }
        }
        let rs = offsets(&row_sizes);
        let cs = offsets(&col_sizes);
        let total_r = row_sizes.iter().sum();
        let total_c = col_sizes.iter().sum();
        let mut out = Self::zeros(total_r, total_c, proto);
        for (k, row) in blocks.iter().enumerate() {
            for (u, b) in row.iter().enumerate() {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(rs[k] + i, cs[u] + j, b.get(i, j).clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Two-sided inverse by Gauss-Jordan elimination. Each column needs an
    /// invertible pivot at or below the diagonal.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n, &self.one);
        for k in 0..n {
            let (p, pinv) = (k..n)
                .find_map(|r| a.get(r, k).try_inverse().map(|v| (r, v)))
                .ok_or(Error::SingularMatrix { column: k })?;
            a.swap_rows(k, p);
            inv.swap_rows(k, p);
            a.left_scale_row(k, &pinv);
            inv.left_scale_row(k, &pinv);
            for i in 0..n {
                if i == k {
                    continue;
                }
                let f = a.get(i, k).clone();
                if f.is_zero() {
                    continue;
                }
                a.row_axpy(i, k, &f);
                inv.row_axpy(i, k, &f);
            }
        }
        Ok(inv)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn left_scale_row(&mut self, i: usize, s: &S) {
        for j in 0..self.cols {
            let v = s.mul(self.get(i, j));
            self.set(i, j, v);
        }
    }

    /// row_i -= f * row_k
    fn row_axpy(&mut self, i: usize, k: usize, f: &S) {
        for j in 0..self.cols {
            let src = self.get(k, j);
            if src.is_zero() {
                continue;
            }
            let v = self.get(i, j).sub(&f.mul(src));
            self.set(i, j, v);
        }
    }

    /// Classical determinant for matrices whose entries commute, by cofactor
    /// expansion with memoized minors. Division free.
    pub fn det_commutative(&self) -> Result<S> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows > 24 {
            return Err(Error::Precondition("determinant of at most 24x24".into()));
        }
        let mut memo = HashMap::new();
        Ok(self.minor_det(0, (1u32 << self.cols) - 1, &mut memo))
    }

    fn minor_det(&self, row: usize, cols: u32, memo: &mut HashMap<u32, S>) -> S {
        if row == self.rows {
            return self.one.clone();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = self.zero();
        let mut sign_neg = false;
        let mut rest = cols;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let a = self.get(row, j);
            if !a.is_zero() {
                let m = self.minor_det(row + 1, cols & !(1 << j), memo);
                let t = a.mul(&m);
                acc = if sign_neg { acc.sub(&t) } else { acc.add(&t) };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(cols, acc.clone());
        acc
    }
}

/// Prefix offsets `[0, s0, s0+s1, ...]` (without the final total).
pub fn offsets(sizes: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    sizes
        .iter()
        .map(|s| {
            let o = acc;
            acc += s;
            o
        })
        .collect()
}

/// Index list covering the given blocks of a partition.
pub fn block_indices(sizes: &[usize], blocks: &[usize]) -> Vec<usize> {
    let offs = offsets(sizes);
    blocks
        .iter()
        .flat_map(|&b| offs[b]..offs[b] + sizes[b])
        .collect()
}

impl<S: Scalar + fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = f.debug_list();
        for i in 0..self.rows {
            l.entry(&self.row(i));
        }
        l.finish()
    }
}
