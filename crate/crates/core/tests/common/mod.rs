//! Shared fixtures: the printed coefficient tables, the example patterns and
//! classical oracles computed without the library's graded machinery.

#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use gradalg::clifford::quaternion_norm_squared;
use gradalg::scalar::rational;
use gradalg::{
    quaternion_units, Algebra, AlgebraDescriptor, CliffordElement, GradedMatrix, GroupElement,
    Matrix, RankVector, Scalar,
};
use num_rational::BigRational;

/// Letters of the generic 4x4 matrix, row by row.
pub const LETTERS: [[char; 4]; 4] = [
    ['x', 'a', 'b', 'c'],
    ['d', 'y', 'e', 'f'],
    ['g', 'h', 'z', 'l'],
    ['m', 'n', 'p', 'w'],
];

/// The generic graded commutative expansion for ranks (1,1,1,1).
pub const POLY2: &str = "
    +xyzw -xylp -xehw -xfhp +xeln -xfzn
    -adzw +adlp +aegw +afgp -aelm +afzm
    -bdhw +bdln -bygw +bfgn +bylm +bfhm
    -cdhp -cdzn -cygp +cegn -cyzm +cehm";

/// Quaternionic expansion for ranks (1,1,1,1).
pub const EXDET_1111: &str = "
    +xyzw +xylp +xehw +xfhp -xeln +xfzn
    +adzw +adlp +aegw +afgp +aelm -afzm
    -bdhw +bdln +bygw +bfgn +bylm +bfhm
    +cdhp +cdzn -cygp +cegn +cyzm +cehm";

/// Quaternionic expansion for ranks (0,2,1,1).
pub const EXDET_0211: &str = "
    +xyzw +xylp +xehw +xfhp -xeln +xfzn
    -adzw -adlp -aegw -afgp +aelm -afzm
    -bdhw +bdln +bygw +bfgn -bylm -bfhm
    -cdhp -cdzn +cygp -cegn +cyzm +cehm";

/// Parses a signed monomial table into `sigma -> coefficient`, where each
/// monomial lists one letter per row in row order.
pub fn parse_table(table: &str) -> HashMap<Vec<usize>, i64> {
    let mut out = HashMap::new();
    for term in table.split_whitespace() {
        let (sign, word) = term.split_at(1);
        let c = if sign == "+" { 1 } else { -1 };
        let sigma: Vec<usize> = word
            .chars()
            .enumerate()
            .map(|(row, ch)| {
                LETTERS[row]
                    .iter()
                    .position(|&l| l == ch)
                    .expect("letter in its row")
            })
            .collect();
        assert!(out.insert(sigma, c).is_none(), "duplicate monomial {word}");
    }
    out
}

pub fn monomial_name(sigma: &[usize]) -> String {
    sigma
        .iter()
        .enumerate()
        .map(|(r, &c)| LETTERS[r][c])
        .collect()
}

pub fn g(c: &[u8]) -> GroupElement {
    GroupElement::from_coords(c).unwrap()
}

pub fn ranks(r: &[usize]) -> RankVector {
    RankVector::new(r.to_vec(), 3).unwrap()
}

/// The unit pattern of a degree 0 matrix over `alg` with the given ranks:
/// entry `(i, j)` is the Clifford basis monomial of degree `w_i + w_j`.
pub fn unit_pattern(alg: &Arc<Algebra>, r: &RankVector) -> GradedMatrix<CliffordElement> {
    let one = CliffordElement::one(alg);
    let n = r.total();
    let m = Matrix::from_fn(n, n, &one, |i, j| {
        let d = r.weight(i).add(&r.weight(j));
        let mask = alg.clifford_monomial_of_degree(&d).expect("even degree");
        CliffordElement::monomial(alg, mask, BigRational::from_integer(1.into()))
    });
    GradedMatrix::new(r.clone(), GroupElement::zero(3).unwrap(), m).unwrap()
}

/// The quaternionic pattern printed for ranks (1,1,1,1).
pub fn printed_pattern_1111() -> GradedMatrix<CliffordElement> {
    let h = Algebra::quaternions();
    let (i, j, k) = quaternion_units(&h);
    let o = CliffordElement::one(&h);
    rows_to_matrix(
        &h,
        "1111",
        vec![
            vec![o.clone(), i.clone(), j.clone(), k.clone()],
            vec![i.clone(), o.clone(), k.clone(), j.clone()],
            vec![j.clone(), k.clone(), o.clone(), i.clone()],
            vec![k, j, i, o],
        ],
    )
}

/// The quaternionic pattern printed for ranks (0,2,1,1).
pub fn printed_pattern_0211() -> GradedMatrix<CliffordElement> {
    let h = Algebra::quaternions();
    let (i, j, k) = quaternion_units(&h);
    let o = CliffordElement::one(&h);
    rows_to_matrix(
        &h,
        "0211",
        vec![
            vec![o.clone(), o.clone(), k.clone(), j.clone()],
            vec![o.clone(), o.clone(), k.clone(), j.clone()],
            vec![k.clone(), k.clone(), o.clone(), i.clone()],
            vec![j.clone(), j, i, o],
        ],
    )
}

fn rows_to_matrix(
    h: &Arc<Algebra>,
    r: &str,
    rows: Vec<Vec<CliffordElement>>,
) -> GradedMatrix<CliffordElement> {
    let rv: Vec<usize> = r
        .chars()
        .map(|c| c.to_digit(10).unwrap() as usize)
        .collect();
    let m = Matrix::from_rows(rows, &CliffordElement::one(h)).unwrap();
    GradedMatrix::new(ranks(&rv), GroupElement::zero(3).unwrap(), m).unwrap()
}

/// `X_q` with `d x d` scalar blocks.
pub fn quaternion_embedding(q: &CliffordElement, d: usize) -> GradedMatrix<CliffordElement> {
    let h = q.algebra().clone();
    let (i, j, k) = quaternion_units(&h);
    let one = CliffordElement::one(&h);
    let c = |u: &CliffordElement| q.coefficient(mask_of(u));
    let (x, a, b, cc) = (q.scalar_part(), c(&i), c(&j), c(&k));
    let pattern = [
        [
            (x.clone(), &one),
            (a.clone(), &i),
            (b.clone(), &j),
            (cc.clone(), &k),
        ],
        [
            (a.clone(), &i),
            (x.clone(), &one),
            (cc.clone(), &k),
            (b.clone(), &j),
        ],
        [
            (b.clone(), &j),
            (cc.clone(), &k),
            (x.clone(), &one),
            (a.clone(), &i),
        ],
        [
            (cc.clone(), &k),
            (b.clone(), &j),
            (a.clone(), &i),
            (x.clone(), &one),
        ],
    ];
    let m = Matrix::from_fn(4 * d, 4 * d, &one, |r, s| {
        if r % d != s % d {
            return one.zero_like();
        }
        let (coef, unit) = &pattern[r / d][s / d];
        unit.scale(coef)
    });
    GradedMatrix::new(ranks(&[d, d, d, d]), GroupElement::zero(3).unwrap(), m).unwrap()
}

fn mask_of(u: &CliffordElement) -> u32 {
    u.terms().next().expect("nonzero unit").0
}

pub fn norm_squared(q: &CliffordElement) -> BigRational {
    quaternion_norm_squared(q)
}

/// Cl_{0,0} with `odd` adjoined odd generators of degree (1).
pub fn super_algebra(odd: usize) -> Arc<Algebra> {
    Algebra::new(AlgebraDescriptor {
        p: 0,
        q: 0,
        odd: vec![g(&[1]); odd],
    })
    .unwrap()
}

/// H with odd generators of degrees (0,0,1) and (1,1,1).
pub fn quaternion_extension() -> Arc<Algebra> {
    Algebra::new(AlgebraDescriptor {
        p: 0,
        q: 2,
        odd: vec![g(&[0, 0, 1]), g(&[1, 1, 1])],
    })
    .unwrap()
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Leibniz determinant of a matrix with pairwise commuting entries.
pub fn leibniz_det(m: &Matrix<CliffordElement>) -> CliffordElement {
    let n = m.rows();
    let mut acc = m.zero();
    for p in all_permutations(n) {
        let term = (0..n).fold(m.one().clone(), |t, i| t.mul(m.get(i, p[i])));
        acc = acc.add(&term.scale(&rational(permutation_sign(&p))));
    }
    acc
}

/// Inverse through the adjugate, for commuting entries.
pub fn adjugate_inverse(m: &Matrix<CliffordElement>) -> Option<Matrix<CliffordElement>> {
    let n = m.rows();
    let det_inv = leibniz_det(m).try_inverse()?;
    Some(Matrix::from_fn(n, n, m.one(), |i, j| {
        let minor = m.without(j, i);
        let c = if n == 1 {
            m.one().clone()
        } else {
            leibniz_det(&minor)
        };
        let c = if (i + j) % 2 == 0 { c } else { c.neg() };
        c.mul(&det_inv)
    }))
}

/// Classical Berezinian `det(A - B D^{-1} C) det(D)^{-1}` for an arity 1
/// matrix with the even block first.
pub fn classical_berezinian(x: &GradedMatrix<CliffordElement>) -> Option<CliffordElement> {
    let p = x.ranks().ranks()[0];
    let n = x.dim();
    let m = x.matrix();
    let ev: Vec<usize> = (0..p).collect();
    let od: Vec<usize> = (p..n).collect();
    let (a, b, c, d) = (
        m.select(&ev, &ev),
        m.select(&ev, &od),
        m.select(&od, &ev),
        m.select(&od, &od),
    );
    let d_inv = adjugate_inverse(&d)?;
    let schur = a.sub(&b.mul(&d_inv).mul(&c));
    Some(leibniz_det(&schur).mul(&leibniz_det(&d).try_inverse()?))
}

/// Classical supertrace `tr A - (-1)^{|X|} tr D` for an arity 1 matrix.
pub fn classical_supertrace(x: &GradedMatrix<CliffordElement>) -> CliffordElement {
    let p = x.ranks().ranks()[0];
    let m = x.matrix();
    let tr = |range: std::ops::Range<usize>| range.fold(m.zero(), |acc, i| acc.add(m.get(i, i)));
    let (ta, td) = (tr(0..p), tr(p..x.dim()));
    if x.degree().is_zero() {
        ta.sub(&td)
    } else {
        ta.add(&td)
    }
}
