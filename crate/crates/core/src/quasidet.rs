//! Quasideterminants, block UDL/LDU decompositions and the 2x2 and 3-block
//! inversion formulas, over any [`Scalar`] ring with exact inversion.

use crate::error::{Error, Result};
use crate::matrix::{block_indices, Matrix};
use crate::scalar::Scalar;

fn complement(n: usize, drop: &[usize]) -> Vec<usize> {
    (0..n).filter(|i| !drop.contains(i)).collect()
}

/// Generalized quasideterminant over index sets:
/// `X[P,Q] - X[P,Q^c] (X[P^c,Q^c])^{-1} X[P^c,Q]`.
pub fn quasidet_sets<S: Scalar>(
    x: &Matrix<S>,
    rows: &[usize],
    cols: &[usize],
) -> Result<Matrix<S>> {
    let pc = complement(x.rows(), rows);
    let qc = complement(x.cols(), cols);
    if pc.len() != qc.len() {
        return Err(Error::DimensionMismatch(format!(
            "complementary submatrix is {}x{}",
            pc.len(),
            qc.len()
        )));
    }
    let head = x.select(rows, cols);
    if pc.is_empty() {
        return Ok(head);
    }
    let inv = x
        .select(&pc, &qc)
        .inverse()
        .map_err(|_| Error::SubmatrixNotInvertible {
            row: rows.first().copied().unwrap_or(0),
            col: cols.first().copied().unwrap_or(0),
        })?;
    let corr = x.select(rows, &qc).mul(&inv).mul(&x.select(&pc, cols));
    Ok(head.sub(&corr))
}

/// `|X|_{ij} = x_ij - r_i^j (X^{i,j})^{-1} c_j^i`.
pub fn quasidet<S: Scalar>(x: &Matrix<S>, i: usize, j: usize) -> Result<S> {
    if !x.is_square() {
        return Err(Error::NotSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    if i >= x.rows() || j >= x.cols() {
        return Err(Error::IndexOutOfRange(format!("({i}, {j})")));
    }
    let q = quasidet_sets(x, &[i], &[j]).map_err(|e| match e {
        Error::SubmatrixNotInvertible { .. } => Error::SubmatrixNotInvertible { row: i, col: j },
        other => other,
    })?;
    Ok(q.get(0, 0).clone())
}

/// `|X^{dr, dc}|_{ij}` where all indices refer to the numbering of `X`.
pub fn quasiminor<S: Scalar>(
    x: &Matrix<S>,
    del_rows: &[usize],
    del_cols: &[usize],
    i: usize,
    j: usize,
) -> Result<S> {
    if del_rows.contains(&i) || del_cols.contains(&j) {
        return Err(Error::IndexOutOfRange(format!("({i}, {j}) was deleted")));
    }
    let rows = complement(x.rows(), del_rows);
    let cols = complement(x.cols(), del_cols);
    let sub = x.select(&rows, &cols);
    let ii = rows.iter().position(|&r| r == i).expect("kept row");
    let jj = cols.iter().position(|&c| c == j).expect("kept col");
    quasidet(&sub, ii, jj).map_err(|e| match e {
        Error::SubmatrixNotInvertible { .. } => Error::SubmatrixNotInvertible { row: i, col: j },
        other => other,
    })
}

/// Block quasideterminant `|X|_{ku}` for the partition `sizes`.
pub fn block_quasidet<S: Scalar>(
    x: &Matrix<S>,
    sizes: &[usize],
    k: usize,
    u: usize,
) -> Result<Matrix<S>> {
    check_partition(x, sizes)?;
    if k >= sizes.len() || u >= sizes.len() {
        return Err(Error::IndexOutOfRange(format!("block ({k}, {u})")));
    }
    quasidet_sets(x, &block_indices(sizes, &[k]), &block_indices(sizes, &[u]))
}

fn check_partition<S: Scalar>(x: &Matrix<S>, sizes: &[usize]) -> Result<()> {
    if !x.is_square() {
        return Err(Error::NotSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    let total: usize = sizes.iter().sum();
    if total != x.rows() {
        return Err(Error::DimensionMismatch(format!(
            "partition {sizes:?} of a {}x{} matrix",
            x.rows(),
            x.cols()
        )));
    }
    Ok(())
}

fn blocks2<S: Scalar>(m: &Matrix<S>, s1: usize) -> [Matrix<S>; 4] {
    let n = m.rows();
    let a: Vec<usize> = (0..s1).collect();
    let b: Vec<usize> = (s1..n).collect();
    [
        m.select(&a, &a),
        m.select(&a, &b),
        m.select(&b, &a),
        m.select(&b, &b),
    ]
}

/// Inverse of `(y d; f z)` (block sizes `s1`, `n - s1`) by the formal 2x2
/// inversion formula, using `z^{-1}` and `(y - d z^{-1} f)^{-1}`.
pub fn invert_2x2_block<S: Scalar>(m: &Matrix<S>, s1: usize) -> Result<Matrix<S>> {
    check_partition(m, &[s1, m.rows().saturating_sub(s1)])?;
    let proto = m.one().clone();
    let [y, d, f, z] = blocks2(m, s1);
    let zi = z.inverse()?;
    let s = y.sub(&d.mul(&zi).mul(&f)).inverse()?;
    let top_right = s.mul(&d).mul(&zi).neg();
    let bottom_left = zi.mul(&f).mul(&s).neg();
    let bottom_right = zi.add(&zi.mul(&f).mul(&s).mul(&d).mul(&zi));
    Matrix::from_blocks(
        &[vec![s, top_right], vec![bottom_left, bottom_right]],
        &proto,
    )
}

/// Inverse of `W = (A 0 B; C D E; F 0 G)` by the formal 3-block formula.
pub fn invert_3block<S: Scalar>(w: &Matrix<S>, sizes: [usize; 3]) -> Result<Matrix<S>> {
    check_partition(w, &sizes)?;
    let proto = w.one().clone();
    let idx = |b: usize| block_indices(&sizes, &[b]);
    let blk = |r: usize, c: usize| w.select(&idx(r), &idx(c));
    if !blk(0, 1).is_zero() || !blk(2, 1).is_zero() {
        return Err(Error::Precondition("zero (1,2) and (3,2) blocks".into()));
    }
    let outer = [0, 2];
    let corner_idx = block_indices(&sizes, &outer);
    let corner_inv = w.select(&corner_idx, &corner_idx).inverse()?;
    let [a1, b1, f1, g1] = blocks2(&corner_inv, sizes[0]);
    let di = blk(1, 1).inverse()?;
    let (c, e) = (blk(1, 0), blk(1, 2));
    let mid_left = di.mul(&c.mul(&a1).add(&e.mul(&f1))).neg();
    let mid_right = di.mul(&c.mul(&b1).add(&e.mul(&g1))).neg();
    let z = |r: usize, col: usize| Matrix::zeros(sizes[r], sizes[col], &proto);
    Matrix::from_blocks(
        &[
            vec![a1, z(0, 1), b1],
            vec![mid_left, di, mid_right],
            vec![f1, z(2, 1), g1],
        ],
        &proto,
    )
}

/// Block UDL factors together with the quasideterminant forms
/// `frak_u = U D` and `frak_l = D L`.
#[derive(Clone, Debug, PartialEq)]
pub struct Udl<S: Scalar> {
    pub u: Matrix<S>,
    pub d: Matrix<S>,
    pub l: Matrix<S>,
    pub d_blocks: Vec<Matrix<S>>,
    pub frak_u: Matrix<S>,
    pub frak_l: Matrix<S>,
}

/// Block LDU factors.
#[derive(Clone, Debug, PartialEq)]
pub struct Ldu<S: Scalar> {
    pub l: Matrix<S>,
    pub d: Matrix<S>,
    pub u: Matrix<S>,
    pub d_blocks: Vec<Matrix<S>>,
}

fn block_diag<S: Scalar>(blocks: &[Matrix<S>], proto: &S) -> Matrix<S> {
    let grid: Vec<Vec<Matrix<S>>> = (0..blocks.len())
        .map(|r| {
            (0..blocks.len())
                .map(|c| {
                    if r == c {
                        blocks[r].clone()
                    } else {
                        Matrix::zeros(blocks[r].rows(), blocks[c].cols(), proto)
                    }
                })
                .collect()
        })
        .collect();
    Matrix::from_blocks(&grid, proto).expect("consistent block shapes")
}

/// `X = U D L` with `D_kk = |X^{1..k-1, 1..k-1}|_{kk}`. Needs every trailing
/// principal block submatrix (blocks `k..p`, `k >= 2`) to be invertible.
pub fn udl_decompose<S: Scalar>(x: &Matrix<S>, sizes: &[usize]) -> Result<Udl<S>> {
    check_partition(x, sizes)?;
    let proto = x.one().clone();
    let (u, l, d_blocks) = udl_rec(x, sizes, 0)?;
    let d = block_diag(&d_blocks, &proto);
    Ok(Udl {
        frak_u: u.mul(&d),
        frak_l: d.mul(&l),
        u,
        d,
        l,
        d_blocks,
    })
}

type Factors<S> = (Matrix<S>, Matrix<S>, Vec<Matrix<S>>);

fn udl_rec<S: Scalar>(x: &Matrix<S>, sizes: &[usize], first_block: usize) -> Result<Factors<S>> {
    let proto = x.one().clone();
    let n = x.rows();
    if sizes.len() <= 1 {
        return Ok((
            Matrix::identity(n, &proto),
            Matrix::identity(n, &proto),
            vec![x.clone()],
        ));
    }
    let s1 = sizes[0];
    let [a, b, c, dm] = blocks2(x, s1);
    let dm_inv = dm.inverse().map_err(|_| Error::RegularityFailure {
        block: first_block + 1,
    })?;
    let (u2, l2, mut rest) = udl_rec(&dm, &sizes[1..], first_block + 1)?;
    let d11 = a.sub(&b.mul(&dm_inv).mul(&c));
    let m = n - s1;
    let u = Matrix::from_blocks(
        &[
            vec![Matrix::identity(s1, &proto), b.mul(&dm_inv).mul(&u2)],
            vec![Matrix::zeros(m, s1, &proto), u2],
        ],
        &proto,
    )?;
    let l = Matrix::from_blocks(
        &[
            vec![Matrix::identity(s1, &proto), Matrix::zeros(s1, m, &proto)],
            vec![l2.mul(&dm_inv).mul(&c), l2],
        ],
        &proto,
    )?;
    let mut blocks = vec![d11];
    blocks.append(&mut rest);
    Ok((u, l, blocks))
}

/// `X = L D U` with `D_kk = |X^{k+1..p, k+1..p}|_{kk}`. Needs every leading
/// principal block submatrix (blocks `1..k`, `k < p`) to be invertible.
pub fn ldu_decompose<S: Scalar>(x: &Matrix<S>, sizes: &[usize]) -> Result<Ldu<S>> {
    check_partition(x, sizes)?;
    let proto = x.one().clone();
    let (l, u, d_blocks) = ldu_rec(x, sizes)?;
    let d = block_diag(&d_blocks, &proto);
    Ok(Ldu { l, d, u, d_blocks })
}

fn ldu_rec<S: Scalar>(x: &Matrix<S>, sizes: &[usize]) -> Result<Factors<S>> {
    let proto = x.one().clone();
    let n = x.rows();
    let p = sizes.len();
    if p <= 1 {
        return Ok((
            Matrix::identity(n, &proto),
            Matrix::identity(n, &proto),
            vec![x.clone()],
        ));
    }
    let sp = sizes[p - 1];
    let lead = n - sp;
    let [a, b, c, dl] = blocks2(x, lead);
    let a_inv = a
        .inverse()
        .map_err(|_| Error::RegularityFailure { block: p - 2 })?;
    let (l1, u1, mut blocks) = ldu_rec(&a, &sizes[..p - 1])?;
    let dpp = dl.sub(&c.mul(&a_inv).mul(&b));
    let l = Matrix::from_blocks(
        &[
            vec![l1.clone(), Matrix::zeros(lead, sp, &proto)],
            vec![c.mul(&a_inv).mul(&l1), Matrix::identity(sp, &proto)],
        ],
        &proto,
    )?;
    let u = Matrix::from_blocks(
        &[
            vec![u1.clone(), u1.mul(&a_inv).mul(&b)],
            vec![
                Matrix::zeros(sp, lead, &proto),
                Matrix::identity(sp, &proto),
            ],
        ],
        &proto,
    )?;
    blocks.push(dpp);
    Ok((l, u, blocks))
}

/// True if `m` is block upper (or lower) unitriangular for `sizes`.
pub fn is_block_unitriangular<S: Scalar>(m: &Matrix<S>, sizes: &[usize], upper: bool) -> bool {
    let p = sizes.len();
    (0..p).all(|k| {
        (0..p).all(|u| {
            let blk = m.select(&block_indices(sizes, &[k]), &block_indices(sizes, &[u]));
            if k == u {
                blk.is_identity()
            } else if (k > u) == upper {
                blk.is_zero()
            } else {
                true
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{quaternion, Algebra, CliffordElement};
    use crate::scalar::rational;
    use num_rational::BigRational;

    fn qm(rows: &[&[i64]]) -> Matrix<CliffordElement> {
        let a = Algebra::rationals();
        Matrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| CliffordElement::from_integer(&a, v))
                        .collect()
                })
                .collect(),
            &CliffordElement::one(&a),
        )
        .unwrap()
    }

    fn hm(rows: &[&[[i64; 4]]]) -> Matrix<CliffordElement> {
        let h = Algebra::quaternions();
        Matrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|c| quaternion(&h, c[0], c[1], c[2], c[3]))
                        .collect()
                })
                .collect(),
            &CliffordElement::one(&h),
        )
        .unwrap()
    }

    #[test]
    fn scalar_quasidets() {
        let x = qm(&[&[7]]);
        assert_eq!(quasidet(&x, 0, 0).unwrap().scalar_part(), rational(7));
        let x = qm(&[&[1, 2], &[3, 4]]);
        // 1 - 2 * (1/4) * 3
        assert_eq!(
            quasidet(&x, 0, 0).unwrap().scalar_part(),
            BigRational::new((-1).into(), 2.into())
        );
        let sing = qm(&[&[1, 2], &[3, 0]]);
        assert_eq!(
            quasidet(&sing, 0, 0),
            Err(Error::SubmatrixNotInvertible { row: 0, col: 0 })
        );
    }

    #[test]
    fn quasidet_matches_inverse_entry() {
        let x = hm(&[
            &[[1, 2, 0, 1], [0, 1, 1, 0], [2, 0, 0, 1]],
            &[[0, 0, 1, 1], [3, 1, 0, 0], [1, 1, 1, 1]],
            &[[1, 0, 0, 0], [0, 2, 1, 0], [1, -1, 0, 2]],
        ]);
        let inv = x.inverse().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let q = quasidet(&x, i, j).unwrap();
                assert_eq!(q, inv.get(j, i).try_inverse().unwrap());
            }
        }
    }

    #[test]
    fn explicit_three_by_three_formula() {
        let h = Algebra::quaternions();
        let x = hm(&[
            &[[1, 2, 0, 1], [0, 1, 1, 0], [2, 0, 0, 1]],
            &[[0, 0, 1, 1], [3, 1, 0, 0], [1, 1, 1, 1]],
            &[[1, 0, 0, 0], [0, 2, 1, 0], [1, -1, 0, 2]],
        ]);
        let e = |i, j| x.get(i, j).clone();
        let (xx, a, b, c, y, d, ee, f, z) = (
            e(0, 0),
            e(0, 1),
            e(0, 2),
            e(1, 0),
            e(1, 1),
            e(1, 2),
            e(2, 0),
            e(2, 1),
            e(2, 2),
        );
        let zi = z.try_inverse().unwrap();
        let inner = y.sub(&d.mul(&zi).mul(&f)).try_inverse().unwrap();
        let expected = xx.sub(&b.mul(&zi).mul(&ee)).sub(
            &a.sub(&b.mul(&zi).mul(&f))
                .mul(&inner)
                .mul(&c.sub(&d.mul(&zi).mul(&ee))),
        );
        assert_eq!(quasidet(&x, 0, 0).unwrap(), expected);
        let outer = block_quasidet(&x, &[2, 1], 0, 0).unwrap();
        assert_eq!(quasidet(&outer, 0, 0).unwrap(), expected);
        assert_eq!(expected.algebra(), &h);
    }

    #[test]
    fn block_quasidet_trivial_cases() {
        let x = qm(&[&[1, 2, 0], &[3, 4, 0], &[0, 0, 5]]);
        assert_eq!(
            block_quasidet(&x, &[2, 1], 0, 0).unwrap(),
            qm(&[&[1, 2], &[3, 4]])
        );
        assert_eq!(block_quasidet(&x, &[3], 0, 0).unwrap(), x);
    }

    #[test]
    fn two_by_two_inverse_against_adjugate() {
        let x = qm(&[&[3, 1], &[5, 2]]);
        let inv = invert_2x2_block(&x, 1).unwrap();
        // det = 1, adjugate (2 -1; -5 3)
        assert_eq!(inv, qm(&[&[2, -1], &[-5, 3]]));
        let d = qm(&[&[2, 0], &[0, 4]]);
        let inv = invert_2x2_block(&d, 1).unwrap();
        assert_eq!(inv, d.inverse().unwrap());
        assert!(invert_2x2_block(&qm(&[&[1, 0], &[0, 1]]), 1)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn three_block_inverse() {
        let w = qm(&[&[2, 0, 1, 0], &[1, 3, 2, 1], &[0, 0, 1, 4], &[1, 0, 0, 1]]);
        let sizes = [1, 1, 2];
        let inv = invert_3block(&w, sizes).unwrap();
        assert!(w.mul(&inv).is_identity());
        let diagonal = qm(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
        assert_eq!(
            invert_3block(&diagonal, [1, 1, 1]).unwrap(),
            diagonal.inverse().unwrap()
        );
        let bad = qm(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(matches!(
            invert_3block(&bad, [1, 1, 1]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn udl_two_block_case() {
        let x = qm(&[&[4, 3], &[6, 3]]);
        let f = udl_decompose(&x, &[1, 1]).unwrap();
        // A - B D^-1 C = 4 - 3 * 6 / 3 = -2
        assert_eq!(f.d, qm(&[&[-2, 0], &[0, 3]]));
        assert_eq!(f.u.mul(&f.d).mul(&f.l), x);
        let g = ldu_decompose(&x, &[1, 1]).unwrap();
        // D - C A^-1 B = 3 - 6 * 3 / 4
        assert_eq!(
            g.d.get(1, 1).scalar_part(),
            BigRational::new((-3).into(), 2.into())
        );
        assert_eq!(g.l.mul(&g.d).mul(&g.u), x);
    }

    #[test]
    fn udl_block_diagonal_and_failure() {
        let x = qm(&[&[1, 2, 0], &[3, 4, 0], &[0, 0, 5]]);
        let f = udl_decompose(&x, &[2, 1]).unwrap();
        assert!(f.u.is_identity() && f.l.is_identity());
        assert_eq!(f.d, x);
        let bad = qm(&[&[1, 2, 0], &[3, 4, 0], &[0, 0, 0]]);
        assert_eq!(
            udl_decompose(&bad, &[2, 1]).unwrap_err(),
            Error::RegularityFailure { block: 1 }
        );
    }

    #[test]
    fn udl_quaternionic_reconstruction() {
        let x = hm(&[
            &[[1, 2, 0, 1], [0, 1, 1, 0], [2, 0, 0, 1], [1, 0, 0, 0]],
            &[[0, 0, 1, 1], [3, 1, 0, 0], [1, 1, 1, 1], [0, 0, 2, 0]],
            &[[1, 0, 0, 0], [0, 2, 1, 0], [1, -1, 0, 2], [0, 1, 0, 0]],
            &[[2, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [3, 0, 1, 1]],
        ]);
        let sizes = [1, 2, 1];
        let f = udl_decompose(&x, &sizes).unwrap();
        assert_eq!(f.u.mul(&f.d).mul(&f.l), x);
        assert!(is_block_unitriangular(&f.u, &sizes, true));
        assert!(is_block_unitriangular(&f.l, &sizes, false));
        let d_inv = f.d.inverse().unwrap();
        assert_eq!(f.frak_u.mul(&d_inv).mul(&f.frak_l), x);
        // D_11 = |X|_11 in block form
        assert_eq!(f.d_blocks[0], block_quasidet(&x, &sizes, 0, 0).unwrap());
        let g = ldu_decompose(&x, &sizes).unwrap();
        assert_eq!(g.l.mul(&g.d).mul(&g.u), x);
        assert_eq!(g.d_blocks[2], block_quasidet(&x, &sizes, 2, 2).unwrap());
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
            fn heredity(seed in any::<u64>()) {
                let t = run_trial(Property::Heredity, &quaternions(&[2, 1, 1, 1]), seed, 0);
                prop_assert!(t.pass, "{}", t.detail);
            }

            #[test]
            fn homological_relations(seed in any::<u64>()) {
                let t = run_trial(Property::Homological, &quaternions(&[1, 1, 1, 1]), seed, 0);
                prop_assert!(t.pass, "{}", t.detail);
            }

            #[test]
            fn udl_reconstruction_and_uniqueness(seed in any::<u64>()) {
                let t = run_trial(Property::Udl, &quaternions(&[0, 2, 1, 1]), seed, 0);
                prop_assert!(t.pass, "{}", t.detail);
            }
        }
    }
}
