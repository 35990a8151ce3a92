//! JSON form of algebras, elements and graded matrices.
//!
//! ```json
//! {"algebra": {"p": 0, "q": 2, "odd": [[0,0,1]]},
//!  "ranks": [1,1,1,1], "degree": [0,0,0],
//!  "entries": [[[{"mask": 0, "num": 1, "den": 1}], []], ...]}
//! ```
//!
//! Integers that do not fit in `i64` are written as decimal strings.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::clifford::{Algebra, AlgebraDescriptor, CliffordElement};
use crate::error::{Error, Result};
use crate::graded_matrix::{GradedMatrix, RankVector};
use crate::group::GroupElement;
use crate::matrix::Matrix;
use crate::nilpotent::NilpotentPoly;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn from_big(v: &BigInt) -> Self {
        v.to_i64()
            .map_or_else(|| JsonInt::Big(v.to_string()), JsonInt::Small)
    }

    fn to_big(&self) -> Result<BigInt> {
        match self {
            JsonInt::Small(v) => Ok((*v).into()),
            JsonInt::Big(s) => s
                .parse()
                .map_err(|_| Error::Schema(format!("not an integer: {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub p: usize,
    pub q: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub odd: Vec<GroupElement>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub mask: u32,
    pub num: JsonInt,
    pub den: JsonInt,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    /// Defaults to the quaternions `Cl_{0,2}`.
    #[serde(default = "AlgebraJson::quaternions")]
    pub algebra: AlgebraJson,
    pub ranks: Vec<usize>,
    pub degree: GroupElement,
    pub entries: Vec<Vec<Vec<TermJson>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementJson {
    pub algebra: AlgebraJson,
    pub terms: Vec<TermJson>,
}

impl AlgebraJson {
    pub fn quaternions() -> Self {
        Self {
            p: 0,
            q: 2,
            odd: Vec::new(),
        }
    }

    pub fn from_algebra(alg: &Algebra) -> Self {
        let d = alg.descriptor();
        Self {
            p: d.p,
            q: d.q,
            odd: d.odd.clone(),
        }
    }

    pub fn build(&self) -> Result<Arc<Algebra>> {
        Algebra::new(AlgebraDescriptor {
            p: self.p,
            q: self.q,
            odd: self.odd.clone(),
        })
    }
}

pub fn terms_to_json(x: &CliffordElement) -> Vec<TermJson> {
    x.terms()
        .map(|(mask, c)| TermJson {
            mask,
            num: JsonInt::from_big(c.numer()),
            den: JsonInt::from_big(c.denom()),
        })
        .collect()
}

pub fn terms_from_json(alg: &Arc<Algebra>, terms: &[TermJson]) -> Result<CliffordElement> {
    let mut acc = CliffordElement::zero(alg);
    for t in terms {
        if t.mask as usize >= alg.dimension() {
            return Err(Error::Schema(format!(
                "mask {} outside the algebra",
                t.mask
            )));
        }
        let den = t.den.to_big()?;
        if den.is_zero() {
            return Err(Error::Schema("zero denominator".into()));
        }
        let c = BigRational::new(t.num.to_big()?, den);
        acc = &acc + &CliffordElement::monomial(alg, t.mask, c);
    }
    Ok(acc)
}

pub fn element_to_json(x: &CliffordElement) -> ElementJson {
    ElementJson {
        algebra: AlgebraJson::from_algebra(x.algebra()),
        terms: terms_to_json(x),
    }
}

pub fn element_from_json(e: &ElementJson) -> Result<CliffordElement> {
    terms_from_json(&e.algebra.build()?, &e.terms)
}

pub fn matrix_to_json(x: &GradedMatrix<CliffordElement>) -> MatrixJson {
    let m = x.matrix();
    MatrixJson {
        algebra: AlgebraJson::from_algebra(m.one().algebra()),
        ranks: x.ranks().ranks().to_vec(),
        degree: x.degree(),
        entries: (0..m.rows())
            .map(|i| m.row(i).iter().map(terms_to_json).collect())
            .collect(),
    }
}

/// Validates shape and homogeneity. Shape problems are `Schema` errors,
/// entries of the wrong degree are `HomogeneityViolation`.
pub fn matrix_from_json(j: &MatrixJson) -> Result<GradedMatrix<CliffordElement>> {
    let alg = j.algebra.build()?;
    if j.degree.arity() != alg.arity() {
        return Err(Error::Schema(format!(
            "degree has {} coordinates, the algebra needs {}",
            j.degree.arity(),
            alg.arity()
        )));
    }
    let ranks =
        RankVector::new(j.ranks.clone(), alg.arity()).map_err(|e| Error::Schema(e.to_string()))?;
    let n = ranks.total();
    if j.entries.len() != n || j.entries.iter().any(|r| r.len() != n) {
        return Err(Error::Schema(format!("entries must be {n} x {n}")));
    }
    let rows = j
        .entries
        .iter()
        .map(|r| {
            r.iter()
                .map(|t| terms_from_json(&alg, t))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let m = Matrix::from_rows(rows, &CliffordElement::one(&alg))?;
    GradedMatrix::new(ranks, j.degree, m)
}

pub fn parse_matrix(text: &str) -> Result<GradedMatrix<CliffordElement>> {
    let j: MatrixJson = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    matrix_from_json(&j)
}

pub fn matrix_to_string(x: &GradedMatrix<CliffordElement>) -> String {
    serde_json::to_string(&matrix_to_json(x)).expect("serializable")
}

/// Coefficients of a truncated power series in `zeta`.
pub fn poly_to_json(x: &NilpotentPoly<CliffordElement>) -> Vec<Vec<TermJson>> {
    x.coeffs().iter().map(terms_to_json).collect()
}
