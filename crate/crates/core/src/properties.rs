//! Seeded property suites over random homogeneous matrices.
//!
//! Each trial draws its inputs from `trial_rng(seed, index)` and resamples
//! until the identity under test is defined on them.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::berezinian::{gber, gdetgtr_check, is_invertible0, liouville_check};
use crate::clifford::{Algebra, CliffordElement};
use crate::dieudonne::{ddet, ddet_along};
use crate::error::{Error, Result};
use crate::gdet::{
    elementary_sandwich_check, gdet0, gdet_graded, gdet_partitioned, row_reduce_g, Mode, Route,
};
use crate::graded_matrix::{GradedMatrix, RankVector};
use crate::group::GroupElement;
use crate::matrix::Matrix;
use crate::quasidet::{
    block_quasidet, is_block_unitriangular, ldu_decompose, quasidet, quasiminor, udl_decompose,
};
use crate::random::{
    random_entry, random_graded, random_invertible0, random_regular0, trial_rng, MAX_REJECTIONS,
};
use crate::scalar::Scalar;
use crate::trace::{gtr, lax_invariants};

type M = GradedMatrix<CliffordElement>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Multiplicativity,
    GradedMultiplicativity,
    Heredity,
    Homological,
    Liouville,
    Dieudonne,
    Udl,
    GdetRed,
    FirstColumn,
    Sandwich,
    GdetGtr,
    GtrCommutator,
    GtrConjugation,
    GberAxioms,
}

impl Property {
    pub const ALL: [Property; 14] = [
        Property::Multiplicativity,
        Property::GradedMultiplicativity,
        Property::Heredity,
        Property::Homological,
        Property::Liouville,
        Property::Dieudonne,
        Property::Udl,
        Property::GdetRed,
        Property::FirstColumn,
        Property::Sandwich,
        Property::GdetGtr,
        Property::GtrCommutator,
        Property::GtrConjugation,
        Property::GberAxioms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Multiplicativity => "multiplicativity",
            Property::GradedMultiplicativity => "graded-multiplicativity",
            Property::Heredity => "heredity",
            Property::Homological => "homological",
            Property::Liouville => "liouville",
            Property::Dieudonne => "dieudonne",
            Property::Udl => "udl",
            Property::GdetRed => "gdet-red",
            Property::FirstColumn => "first-column",
            Property::Sandwich => "sandwich",
            Property::GdetGtr => "gdetgtr",
            Property::GtrCommutator => "gtr-commutator",
            Property::GtrConjugation => "gtr-conjugation",
            Property::GberAxioms => "gber-axioms",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Schema(format!("unknown property {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub algebra: Arc<Algebra>,
    pub ranks: RankVector,
    /// Truncation order `K` of `A[zeta]/(zeta^K)` for the Liouville suite.
    pub order: usize,
}

#[derive(Clone, Debug)]
pub struct Trial {
    pub index: u64,
    pub inputs: Vec<M>,
    pub pass: bool,
    pub detail: String,
}

struct Outcome {
    inputs: Vec<M>,
    pass: bool,
    detail: String,
}

fn outcome(inputs: Vec<M>, checks: &[(&str, bool)]) -> Outcome {
    let failed: Vec<&str> = checks
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| *n)
        .collect();
    Outcome {
        inputs,
        pass: failed.is_empty(),
        detail: if failed.is_empty() {
            "ok".into()
        } else {
            format!("failed: {}", failed.join(", "))
        },
    }
}

fn compare(inputs: Vec<M>, name: &str, lhs: &CliffordElement, rhs: &CliffordElement) -> Outcome {
    let mut o = outcome(inputs, &[(name, lhs == rhs)]);
    if !o.pass {
        o.detail = format!("{name}: {lhs} != {rhs}");
    }
    o
}

/// Repeats `f` until it returns a sample.
fn draw<T>(
    rng: &mut ChaCha8Rng,
    mut f: impl FnMut(&mut ChaCha8Rng) -> Result<Option<T>>,
) -> Result<T> {
    for _ in 0..MAX_REJECTIONS {
        if let Some(t) = f(rng)? {
            return Ok(t);
        }
    }
    Err(Error::Precondition(format!(
        "a defined instance within {MAX_REJECTIONS} draws"
    )))
}

pub fn run_trial(property: Property, cfg: &SuiteConfig, seed: u64, index: u64) -> Trial {
    let mut rng = trial_rng(seed, index);
    let result = match property {
        Property::Multiplicativity => multiplicativity(cfg, &mut rng),
        Property::GradedMultiplicativity => graded_multiplicativity(cfg, &mut rng),
        Property::Heredity => heredity(cfg, &mut rng),
        Property::Homological => homological(cfg, &mut rng),
        Property::Liouville => liouville(cfg, &mut rng),
        Property::Dieudonne => dieudonne(cfg, &mut rng),
        Property::Udl => udl(cfg, &mut rng),
        Property::GdetRed => gdet_red(cfg, &mut rng),
        Property::FirstColumn => first_column(cfg, &mut rng),
        Property::Sandwich => sandwich(cfg, &mut rng),
        Property::GdetGtr => gdetgtr(cfg, &mut rng),
        Property::GtrCommutator => gtr_commutator(cfg, &mut rng),
        Property::GtrConjugation => gtr_conjugation(cfg, &mut rng),
        Property::GberAxioms => gber_axioms(cfg, &mut rng),
    };
    match result {
        Ok(o) => Trial {
            index,
            inputs: o.inputs,
            pass: o.pass,
            detail: o.detail,
        },
        Err(e) => Trial {
            index,
            inputs: Vec::new(),
            pass: false,
            detail: format!("error: {e}"),
        },
    }
}

pub fn run_suite(property: Property, cfg: &SuiteConfig, seed: u64, trials: u64) -> Vec<Trial> {
    (0..trials)
        .map(|i| run_trial(property, cfg, seed, i))
        .collect()
}

fn zero_degree(cfg: &SuiteConfig) -> GroupElement {
    GroupElement::zero(cfg.ranks.arity()).expect("valid arity")
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what.into()))
    }
}

/// Keeps the entries selected by `keep`, zeroing the rest.
fn masked(x: &M, keep: impl Fn(usize, usize) -> bool) -> M {
    let zero = x.matrix().zero();
    let m = Matrix::from_fn(x.dim(), x.dim(), x.matrix().one(), |i, j| {
        if keep(i, j) {
            x.get(i, j).clone()
        } else {
            zero.clone()
        }
    });
    GradedMatrix::new_unchecked(x.ranks().clone(), x.degree(), m).expect("same shape")
}

fn plus_identity(x: &M) -> M {
    let id = GradedMatrix::identity(x.ranks().clone(), x.matrix().one());
    id.try_add(x).expect("degree 0")
}

fn multiplicativity(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (alg, r) = (&cfg.algebra, &cfg.ranks);
    if r.is_purely_even() {
        let (x, y, gxy) = draw(rng, |rng| {
            let x = random_regular0(alg, r, rng)?;
            let y = random_regular0(alg, r, rng)?;
            Ok(gdet0(&x.mul(&y)).ok().map(|g| (x, y, g)))
        })?;
        let rhs = gdet0(&x)?.mul(&gdet0(&y)?);
        Ok(compare(
            vec![x, y],
            "gdet(XY) = gdet(X) gdet(Y)",
            &gxy,
            &rhs,
        ))
    } else {
        let (x, y, gx, gy, gxy) = draw(rng, |rng| {
            let x = random_invertible0(alg, r, rng)?;
            let y = random_invertible0(alg, r, rng)?;
            Ok(match (gber(&x), gber(&y), gber(&x.mul(&y))) {
                (Ok(a), Ok(b), Ok(c)) => Some((x, y, a, b, c)),
                _ => None,
            })
        })?;
        Ok(compare(
            vec![x, y],
            "gber(XY) = gber(X) gber(Y)",
            &gxy,
            &gx.mul(&gy),
        ))
    }
}

fn graded_multiplicativity(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (alg, r) = (&cfg.algebra, &cfg.ranks);
    let evens: Vec<GroupElement> = alg
        .standard_order()
        .elements()
        .iter()
        .copied()
        .filter(|g| g.is_even())
        .collect();
    let (x, y, gx, gy, gxy) = draw(rng, |rng| {
        let d1 = evens[rng.random_range(0..evens.len())];
        let d2 = evens[rng.random_range(0..evens.len())];
        if d1.is_zero() && d2.is_zero() {
            return Ok(None);
        }
        let x = random_graded(alg, r, &d1, rng);
        let y = random_graded(alg, r, &d2, rng);
        let g = |m: &M| gdet_graded(m, Mode::Strict, Route::Udl);
        Ok(match (g(&x), g(&y), g(&x.mul(&y))) {
            (Ok(a), Ok(b), Ok(c)) => Some((x, y, a, b, c)),
            (Err(e @ Error::DimensionNotAdmissible { .. }), _, _) => return Err(e),
            _ => None,
        })
    })?;
    Ok(compare(
        vec![x, y],
        "gdet(XY) = gdet(X) gdet(Y)",
        &gxy,
        &gx.mul(&gy),
    ))
}

fn heredity(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (alg, r) = (&cfg.algebra, &cfg.ranks);
    let sizes: Vec<usize> = r.ranks().iter().copied().filter(|&s| s > 0).collect();
    require(sizes.len() >= 2, "at least two nonempty blocks")?;
    let offsets = crate::matrix::offsets(&sizes);
    draw(rng, |rng| {
        let x = random_graded(alg, r, &zero_degree(cfg), rng);
        let m = x.matrix();
        let k = rng.random_range(0..sizes.len());
        let Ok(a) = block_quasidet(m, &sizes, k, k) else {
            return Ok(None);
        };
        let s = sizes[k];
        let (i, j) = (rng.random_range(0..s), rng.random_range(0..s));
        let (gi, gj) = (offsets[k] + i, offsets[k] + j);
        let hp1 = match (quasidet(&a, i, j), quasidet(m, gi, gj)) {
            (Ok(l), Ok(rr)) => l == rr,
            (Err(_), Err(_)) => return Ok(None),
            _ => false,
        };
        let mut checks = vec![("||X|_kk|_ij = |X|_ij", hp1)];
        if s >= 2 {
            let others = |t: usize| (0..s).filter(move |&u| u != t).collect::<Vec<_>>();
            let a_idx = *others(i).choose(rng).expect("s >= 2");
            let b_idx = *others(j).choose(rng).expect("s >= 2");
            let lhs = quasiminor(&a, &[i], &[j], a_idx, b_idx);
            let rhs = quasiminor(m, &[gi], &[gj], offsets[k] + a_idx, offsets[k] + b_idx);
            let hp_plus = match (lhs, rhs) {
                (Ok(l), Ok(rr)) => l == rr,
                (Err(_), Err(_)) => true,
                _ => false,
            };
            checks.push(("|(|X|_kk)^{i,j}|_ab = |X^{i,j}|_ab", hp_plus));
        }
        Ok(Some(outcome(vec![x], &checks)))
    })
}

fn homological(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (alg, r) = (&cfg.algebra, &cfg.ranks);
    let n = r.total();
    require(n >= 2, "dimension at least 2")?;
    let two = |rng: &mut ChaCha8Rng| {
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(rng);
        (v[0], v[1])
    };
    draw(rng, |rng| {
        let x = random_graded(alg, r, &zero_degree(cfg), rng);
        let m = x.matrix();
        let ((i, rr), (j, l)) = (two(rng), two(rng));
        let (k, s) = (rr, l);
        let q = |dr: &[usize], dc: &[usize], a: usize, b: usize| quasiminor(m, dr, dc, a, b).ok();
        let inv = |v: Option<CliffordElement>| v.and_then(|v| v.try_inverse());
        // row relation
        let row = (|| {
            let lhs = q(&[], &[], i, j)?.mul(&inv(q(&[i], &[l], rr, j))?);
            let rhs = q(&[], &[], i, l)?.mul(&inv(q(&[i], &[j], rr, l))?).neg();
            Some(lhs == rhs)
        })();
        // column relation
        let col = (|| {
            let lhs = inv(q(&[k], &[j], i, s))?.mul(&q(&[], &[], i, j)?);
            let rhs = inv(q(&[i], &[j], k, s))?.mul(&q(&[], &[], k, j)?).neg();
            Some(lhs == rhs)
        })();
        Ok(match (row, col) {
            (Some(a), Some(b)) => Some(outcome(
                vec![x],
                &[("row relation", a), ("column relation", b)],
            )),
            _ => None,
        })
    })
}

fn liouville(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let x = random_graded(&cfg.algebra, &cfg.ranks, &zero_degree(cfg), rng);
    let (lhs, rhs) = liouville_check(&x, cfg.order)?;
    let mut o = outcome(vec![x], &[("gber(exp(zX)) = exp(gtr(zX))", lhs == rhs)]);
    if !o.pass {
        o.detail = format!("{lhs} != {rhs}");
    }
    Ok(o)
}

fn dieudonne(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (alg, r) = (&cfg.algebra, &cfg.ranks);
    let x = random_regular0(alg, r, rng)?;
    let g = gdet0(&x)?;
    let Some(g) = g.as_rational() else {
        return Ok(Outcome {
            inputs: vec![x],
            pass: false,
            detail: format!("gdet is not real: {g}"),
        });
    };
    let d = ddet(x.matrix())?;
    let n = r.total();
    let mut rows: Vec<usize> = (0..n).collect();
    let mut cols = rows.clone();
    rows.shuffle(rng);
    cols.shuffle(rng);
    let other =
        ddet_along(x.matrix(), &rows, &cols).map_or(true, |o| o.norm_squared == d.norm_squared);
    let mut o = outcome(
        vec![x],
        &[
            ("gdet^2 = ddet^2", &g * &g == d.norm_squared),
            ("chain independence", other),
        ],
    );
    if !o.pass {
        o.detail = format!("{} vs {}", &g * &g, d.norm_squared);
    }
    Ok(o)
}

fn udl(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (alg, r) = (&cfg.algebra, &cfg.ranks);
    let sizes = r.ranks().to_vec();
    let x = random_regular0(alg, r, rng)?;
    let m = x.matrix();
    let f = udl_decompose(m, &sizes)?;
    let d_inv = f.d.inverse()?;
    let mut checks = vec![
        ("X = U D L", f.u.mul(&f.d).mul(&f.l) == *m),
        (
            "U upper unitriangular",
            is_block_unitriangular(&f.u, &sizes, true),
        ),
        (
            "L lower unitriangular",
            is_block_unitriangular(&f.l, &sizes, false),
        ),
        (
            "X = frak(U) D^-1 frak(L)",
            f.frak_u.mul(&d_inv).mul(&f.frak_l) == *m,
        ),
    ];
    if let Ok(g) = ldu_decompose(m, &sizes) {
        checks.push(("X = L D U", g.l.mul(&g.d).mul(&g.u) == *m));
        checks.push((
            "LDU unitriangular",
            is_block_unitriangular(&g.l, &sizes, false)
                && is_block_unitriangular(&g.u, &sizes, true),
        ));
    }
    // uniqueness: recover prescribed factors
    let block = |i: usize| r.block_of(i);
    let (u0, l0, d0) = draw(rng, |rng| {
        let a = random_graded(alg, r, &zero_degree(cfg), rng);
        let b = random_graded(alg, r, &zero_degree(cfg), rng);
        let c = random_graded(alg, r, &zero_degree(cfg), rng);
        let d0 = masked(&c, |i, j| block(i) == block(j));
        let diag_ok =
            (0..sizes.len()).all(|k| sizes[k] == 0 || d0.block_submatrix(&[k]).inverse().is_ok());
        if !diag_ok {
            return Ok(None);
        }
        let u0 = plus_identity(&masked(&a, |i, j| block(i) < block(j)));
        let l0 = plus_identity(&masked(&b, |i, j| block(i) > block(j)));
        Ok(Some((u0, l0, d0)))
    })?;
    let y = u0.mul(&d0).mul(&l0);
    let g = udl_decompose(y.matrix(), &sizes)?;
    checks.push((
        "UDL uniqueness",
        g.u == *u0.matrix() && g.d == *d0.matrix() && g.l == *l0.matrix(),
    ));
    Ok(outcome(vec![x, u0, d0, l0], &checks))
}

fn gdet_red(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (alg, r) = (&cfg.algebra, &cfg.ranks);
    let n = r.total();
    require(n >= 2, "dimension at least 2")?;
    draw(rng, |rng| {
        let x = random_regular0(alg, r, rng)?;
        let alpha = rng.random_range(0..n);
        let beta = (alpha + rng.random_range(1..n)) % n;
        let lambda = random_entry(alg, &r.weight(alpha).add(&r.weight(beta)), rng);
        if lambda.is_zero() {
            return Ok(None);
        }
        let xr = row_reduce_g(&x, alpha, beta, &lambda)?;
        let Ok(g_red) = gdet0(&xr) else {
            return Ok(None);
        };
        let g = gdet0(&x)?;
        let gm = GradedMatrix::g_elementary(r.clone(), alpha, beta, &lambda)?;
        Ok(Some(compare(
            vec![x, gm],
            "gdet(X) = gdet(G X)",
            &g,
            &g_red,
        )))
    })
}

fn first_column(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (alg, r) = (&cfg.algebra, &cfg.ranks);
    require(
        r.is_purely_even() && r.ranks()[0] >= 1,
        "a purely even rank vector with r_1 >= 1",
    )?;
    let mut reduced = r.ranks().to_vec();
    reduced[0] -= 1;
    let r0 = RankVector::new(reduced, r.arity())?;
    draw(rng, |rng| {
        let x = random_graded(alg, r, &zero_degree(cfg), rng);
        let x = masked(&x, |i, j| j != 0 || i == 0);
        let sub = GradedMatrix::new_unchecked(r0.clone(), x.degree(), x.matrix().without(0, 0))?;
        Ok(match (gdet0(&x), gdet0(&sub)) {
            (Ok(g), Ok(h)) if !g.is_zero() => Some(compare(
                vec![x.clone()],
                "gdet(X) = x11 gdet(X^{1:1})",
                &g,
                &x.get(0, 0).mul(&h),
            )),
            _ => None,
        })
    })
}

fn sandwich(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (alg, r) = (&cfg.algebra, &cfg.ranks);
    let n = r.total();
    let probe = GradedMatrix::identity(r.clone(), &CliffordElement::one(alg));
    let (_, split) = probe.even_halves()?;
    require(split > 0 && split < n, "two nonempty halves")?;
    draw(rng, |rng| {
        let x = random_graded(alg, r, &zero_degree(cfg), rng);
        let y = random_graded(alg, r, &zero_degree(cfg), rng);
        let (x, y) = if rng.random_bool(0.5) {
            let (a, b) = (rng.random_range(0..split), rng.random_range(split..n));
            (
                masked(&x, |i, j| !(i < split && j >= split) || (i, j) == (a, b)),
                y,
            )
        } else {
            let (a, b) = (rng.random_range(split..n), rng.random_range(0..split));
            (
                x,
                masked(&y, |i, j| !(i >= split && j < split) || (i, j) == (a, b)),
            )
        };
        Ok(match elementary_sandwich_check(&x, &y) {
            Ok((l, rr)) => Some(compare(
                vec![x, y],
                "gdet(I + X12 Y21) = gdet(I + Y21 X12)",
                &l,
                &rr,
            )),
            Err(_) => None,
        })
    })
}

fn gdetgtr(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (alg, r) = (&cfg.algebra, &cfg.ranks);
    let (ev, od) = r.parity_indices();
    require(
        !ev.is_empty() && !od.is_empty(),
        "nonempty even and odd parts",
    )?;
    let is_even = |i: usize| ev.contains(&i);
    draw(rng, |rng| {
        let x = random_graded(alg, r, &zero_degree(cfg), rng);
        let y = random_graded(alg, r, &zero_degree(cfg), rng);
        let (x, y) = if rng.random_bool(0.5) {
            let keep = (*ev.choose(rng).unwrap(), *od.choose(rng).unwrap());
            (
                masked(&x, |i, j| !(is_even(i) && !is_even(j)) || (i, j) == keep),
                y,
            )
        } else {
            let keep = (*od.choose(rng).unwrap(), *ev.choose(rng).unwrap());
            (
                x,
                masked(&y, |i, j| !(!is_even(i) && is_even(j)) || (i, j) == keep),
            )
        };
        Ok(match gdetgtr_check(&x, &y) {
            Ok((l, rr)) => Some(compare(
                vec![x, y],
                "gdet(I - X12 Y21) = gdet(I + Y21 X12)",
                &l,
                &rr,
            )),
            Err(_) => None,
        })
    })
}

fn random_degree(alg: &Arc<Algebra>, rng: &mut ChaCha8Rng) -> GroupElement {
    let all = alg.standard_order();
    all.get(rng.random_range(0..all.len()))
}

fn gtr_commutator(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (alg, r) = (&cfg.algebra, &cfg.ranks);
    let (d1, d2) = (random_degree(alg, rng), random_degree(alg, rng));
    let x = random_graded(alg, r, &d1, rng);
    let y = random_graded(alg, r, &d2, rng);
    let t = gtr(&x.commutator(&y)?);
    Ok(compare(
        vec![x, y],
        "gtr([X, Y]) = 0",
        &t,
        &CliffordElement::zero(alg),
    ))
}

fn gtr_conjugation(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (alg, r) = (&cfg.algebra, &cfg.ranks);
    draw(rng, |rng| {
        let d = random_degree(alg, rng);
        let x = random_graded(alg, r, &d, rng);
        let g = random_invertible0(alg, r, rng)?;
        Ok(lax_invariants(&x, &g, 3).ok().map(|(lhs, rhs)| {
            let checks: Vec<(&str, bool)> = ["k = 1", "k = 2", "k = 3"]
                .into_iter()
                .zip(lhs.iter().zip(&rhs).map(|(a, b)| a == b))
                .collect();
            outcome(vec![x, g], &checks)
        }))
    })
}

fn gber_axioms(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let (alg, r) = (&cfg.algebra, &cfg.ranks);
    let (ev, od) = r.parity_indices();
    require(
        !ev.is_empty() && !od.is_empty(),
        "nonempty even and odd parts",
    )?;
    let is_even = |i: usize| ev.contains(&i);
    draw(rng, |rng| {
        let x = random_graded(alg, r, &zero_degree(cfg), rng);
        let diag = masked(&x, |i, j| is_even(i) == is_even(j));
        if !is_invertible0(&diag) {
            return Ok(None);
        }
        let d = diag.redivide_2x2();
        let (Ok(a), Ok(b)) = (
            gdet_partitioned(&d.x11, &d.even_sizes, Route::Udl),
            gdet_partitioned(&d.x22, &d.odd_sizes, Route::Udl),
        ) else {
            return Ok(None);
        };
        let Some(b_inv) = b.value.try_inverse() else {
            return Ok(None);
        };
        let Ok(g_diag) = gber(&diag) else {
            return Ok(None);
        };
        let upper = plus_identity(&masked(&x, |i, j| is_even(i) && !is_even(j)));
        let lower = plus_identity(&masked(&x, |i, j| !is_even(i) && is_even(j)));
        let one = CliffordElement::one(alg);
        let checks = [
            ("block diagonal", g_diag == a.value.mul(&b_inv)),
            ("upper unitriangular", gber(&upper).is_ok_and(|g| g == one)),
            ("lower unitriangular", gber(&lower).is_ok_and(|g| g == one)),
        ];
        Ok(Some(outcome(vec![diag, upper, lower], &checks)))
    })
}
