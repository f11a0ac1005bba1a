//! Randomized stability and hyperbolicity probes, hyperbolic eigenvalues,
//! rank and cone membership, polarization, and the support matroid test.
//!
//! A probe is a falsifier: a clean report only says that no counterexample
//! turned up in the trials that were run.

use num::complex::Complex64;
use num::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::matroid::{verify_basis_exchange, ExchangeViolation};
use crate::poly::numeric::{complex_roots_numeric, DEFAULT_TOL};
use crate::poly::{AlgebraicReal, ExactPoly, Monomial, UnivariateExact};
use crate::sampling::{grid_point, stream_rng};
use crate::symfun::binomial;
use crate::{bits, ser, Error, Rational, Result};

/// Restrictions up to this degree are decided exactly by Sturm sequences.
pub const EXACT_DEGREE_LIMIT: usize = 12;
pub const DEFAULT_TRIALS: usize = 256;
pub const DEFAULT_TOL_PROBE: f64 = 1e-9;

/// Grid denominator for sampled coordinates.
const GRID: i64 = 8;
const POINT_RANGE: (i64, i64) = (-10, 10);
const DIRECTION_RANGE: (i64, i64) = (1, 10);

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        ComplexJson { re: z.re, im: z.im }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeWitness {
    pub trial: usize,
    #[serde(serialize_with = "ser::rationals")]
    pub x0: Vec<Rational>,
    #[serde(serialize_with = "ser::rationals")]
    pub v: Vec<Rational>,
    /// The root with the largest imaginary part, when one was computed.
    pub root: Option<ComplexJson>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeReport {
    pub trials: usize,
    pub failures: usize,
    pub worst_witness: Option<ProbeWitness>,
    pub seed: u64,
    pub tol: f64,
    pub sampling: String,
    pub verdict: String,
}

impl ProbeReport {
    pub fn clean(&self) -> bool {
        self.failures == 0
    }
}

struct Failure {
    severity: f64,
    witness: ProbeWitness,
}

/// Real-rootedness of one restriction `t -> P(x0 + t v)`.
fn check_line(
    p: &ExactPoly,
    deg: usize,
    trial: usize,
    x0: Vec<Rational>,
    v: Vec<Rational>,
    tol: f64,
) -> Option<Failure> {
    let f = p.restrict_line(&x0, &v).expect("lengths match arity");
    let fail = |severity: f64, root: Option<Complex64>, reason: String| Failure {
        severity,
        witness: ProbeWitness {
            trial,
            x0: x0.clone(),
            v: v.clone(),
            root: root.map(Into::into),
            reason,
        },
    };
    if f.is_zero() {
        return Some(fail(
            f64::INFINITY,
            None,
            "restriction vanishes identically".into(),
        ));
    }
    let fd = f.degree().unwrap();
    if fd < deg {
        return Some(fail(
            f64::INFINITY,
            None,
            format!("restriction has degree {fd} < {deg}: P vanishes at v"),
        ));
    }
    if fd == 0 {
        return None;
    }
    let worst_root = |g: &UnivariateExact| -> Option<Complex64> {
        complex_roots_numeric(g, DEFAULT_TOL)
            .ok()?
            .into_iter()
            .max_by(|a, b| a.im.abs().total_cmp(&b.im.abs()))
    };
    if fd > EXACT_DEGREE_LIMIT {
        if let Ok(roots) = complex_roots_numeric(&f.square_free_part(), DEFAULT_TOL) {
            let bad = roots
                .iter()
                .filter(|z| z.im.abs() > tol * (1.0 + z.norm()))
                .max_by(|a, b| a.im.abs().total_cmp(&b.im.abs()));
            return bad.map(|&z| fail(z.im.abs(), Some(z), "non-real root (numeric)".into()));
        }
    }
    let summary = f.real_roots_exact().expect("nonzero");
    if summary.is_real_rooted {
        return None;
    }
    let g = f.square_free_part();
    let root = worst_root(&g);
    let severity = root.map_or(f64::INFINITY, |z| z.im.abs());
    Some(fail(
        severity,
        root,
        format!(
            "Sturm count: {} real of {} distinct roots",
            summary.count_real,
            g.degree().unwrap()
        ),
    ))
}

fn run_probe<D>(
    p: &ExactPoly,
    trials: usize,
    seed: u64,
    tol: f64,
    sampling: String,
    direction: D,
) -> ProbeReport
where
    D: Fn(&mut rand_chacha::ChaCha8Rng) -> Vec<Rational> + Sync,
{
    let n = p.arity();
    let deg = p.total_degree().unwrap_or(0) as usize;
    let failures: Vec<Failure> = (0..trials)
        .into_par_iter()
        .filter_map(|trial| {
            let mut rng = stream_rng(seed, trial as u64);
            let x0 = grid_point(&mut rng, n, POINT_RANGE.0, POINT_RANGE.1, GRID);
            let v = direction(&mut rng);
            check_line(p, deg, trial, x0, v, tol)
        })
        .collect();
    let count = failures.len();
    // Largest imaginary part; ties go to the earliest trial.
    let worst = failures
        .into_iter()
        .reduce(|a, b| if b.severity > a.severity { b } else { a })
        .map(|f| f.witness);
    let verdict = if count == 0 {
        format!("no counterexample in {trials} trials")
    } else {
        format!("counterexample found in {count} of {trials} trials")
    };
    ProbeReport {
        trials,
        failures: count,
        worst_witness: worst,
        seed,
        tol,
        sampling,
        verdict,
    }
}

fn check_nonzero_homogeneous(p: &ExactPoly) -> Result<()> {
    if p.is_zero() {
        return Err(Error::input("probe needs a nonzero polynomial"));
    }
    if !p.is_homogeneous() {
        return Err(Error::input("probe needs a homogeneous polynomial"));
    }
    Ok(())
}

/// Looks for a line `x0 + t v` with `v` in the open positive orthant along
/// which `P` has a non-real zero (a stable homogeneous `P` has none).
pub fn probe_stability(p: &ExactPoly, trials: usize, seed: u64, tol: f64) -> Result<ProbeReport> {
    check_nonzero_homogeneous(p)?;
    let n = p.arity();
    let sampling = format!(
        "x0 uniform on the 1/{GRID} grid in [{}, {}]^{n}; v uniform on the 1/{GRID} grid in [{}, {}]^{n}",
        POINT_RANGE.0, POINT_RANGE.1, DIRECTION_RANGE.0, DIRECTION_RANGE.1
    );
    Ok(run_probe(p, trials, seed, tol, sampling, |rng| {
        grid_point(rng, n, DIRECTION_RANGE.0, DIRECTION_RANGE.1, GRID)
    }))
}

/// Looks for `x0` with `t -> h(x0 + t e)` not real-rooted.
pub fn probe_hyperbolicity(
    h: &ExactPoly,
    e: &[Rational],
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<ProbeReport> {
    check_nonzero_homogeneous(h)?;
    check_direction(h, e)?;
    let sampling = format!(
        "x0 uniform on the 1/{GRID} grid in [{}, {}]^{}; direction fixed",
        POINT_RANGE.0,
        POINT_RANGE.1,
        h.arity()
    );
    Ok(run_probe(h, trials, seed, tol, sampling, |_| e.to_vec()))
}

fn check_direction(h: &ExactPoly, e: &[Rational]) -> Result<()> {
    if h.evaluate(e)?.is_zero() {
        return Err(Error::input("not hyperbolic direction for h"));
    }
    Ok(())
}

/// Hyperbolic eigenvalues, descending and repeated by multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub values: Vec<AlgebraicReal>,
}

impl Spectrum {
    pub fn lambda_max(&self) -> Option<&AlgebraicReal> {
        self.values.first()
    }

    pub fn lambda_min(&self) -> Option<&AlgebraicReal> {
        self.values.last()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn nonzero_count(&self) -> usize {
        self.values.iter().filter(|v| v.signum() != 0).count()
    }
}

/// Real roots with multiplicity, descending. Fails on a non-real root.
pub fn real_spectrum(
    f: &UnivariateExact,
) -> std::result::Result<Vec<AlgebraicReal>, Option<Complex64>> {
    if f.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let summary = f.real_roots_exact().expect("nonzero");
    if !summary.is_real_rooted {
        let root = complex_roots_numeric(&f.square_free_part(), DEFAULT_TOL)
            .ok()
            .and_then(|r| {
                r.into_iter()
                    .max_by(|a, b| a.im.abs().total_cmp(&b.im.abs()))
            });
        return Err(root);
    }
    let factors = f.square_free_factors();
    let mut out = Vec::with_capacity(f.degree().unwrap());
    for root in f.isolate_real_roots().into_iter().rev() {
        let mult = factors
            .iter()
            .find(|(g, _)| root.is_root_of(g))
            .map(|(_, k)| *k)
            .expect("every root lies in one Yun factor");
        out.extend(std::iter::repeat_n(root, mult));
    }
    Ok(out)
}

/// Roots of `t -> h(t e - x)`.
pub fn eigenvalues(h: &ExactPoly, e: &[Rational], x: &[Rational]) -> Result<Spectrum> {
    check_direction(h, e)?;
    let neg_x: Vec<Rational> = x.iter().map(|c| -c).collect();
    let f = h.restrict_line(&neg_x, e)?;
    match real_spectrum(&f) {
        Ok(values) => Ok(Spectrum { values }),
        Err(root) => Err(Error::NotHyperbolic {
            x: x.to_vec(),
            root: root.unwrap_or(Complex64::new(f64::NAN, f64::NAN)),
        }),
    }
}

/// `deg_t h(e + t x)`: the number of nonzero eigenvalues of `x`.
pub fn hyp_rank(h: &ExactPoly, e: &[Rational], x: &[Rational]) -> Result<usize> {
    check_direction(h, e)?;
    Ok(h.restrict_line(e, x)?.degree().unwrap_or(0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConeStatus {
    Interior,
    Boundary,
    Outside,
}

/// Position of `x` relative to the closed hyperbolicity cone, decided by
/// the exact sign of the smallest eigenvalue.
pub fn cone_member(h: &ExactPoly, e: &[Rational], x: &[Rational]) -> Result<ConeStatus> {
    let s = eigenvalues(h, e, x)?;
    Ok(match s.lambda_min().map_or(1, AlgebraicReal::signum) {
        1 => ConeStatus::Interior,
        0 => ConeStatus::Boundary,
        _ => ConeStatus::Outside,
    })
}

/// Cone membership for float data: coordinates are converted exactly and
/// `|lambda_min| <= tol` counts as the boundary.
pub fn cone_member_approx(
    h: &ExactPoly,
    e: &[Rational],
    x: &[f64],
    tol: f64,
) -> Result<ConeStatus> {
    let exact: Vec<Rational> = x
        .iter()
        .map(|&c| {
            Rational::from_float(c)
                .ok_or_else(|| Error::input(format!("non-finite coordinate {c}")))
        })
        .collect::<Result<_>>()?;
    let s = eigenvalues(h, e, &exact)?;
    let Some(min) = s.lambda_min() else {
        return Ok(ConeStatus::Interior);
    };
    let m = min.approx();
    Ok(if m.abs() <= tol {
        ConeStatus::Boundary
    } else if m > 0.0 {
        ConeStatus::Interior
    } else {
        ConeStatus::Outside
    })
}

/// First variable index of each block.
fn block_offsets(caps: &[u32]) -> Vec<usize> {
    caps.iter()
        .scan(0usize, |acc, &d| {
            let o = *acc;
            *acc += d as usize;
            Some(o)
        })
        .collect()
}

/// Replaces `x_i^k` by `e_k(y_{i,1}, ..., y_{i,d_i}) / C(d_i, k)`. Block `i`
/// occupies variables `off_i .. off_i + d_i` with `off_i = d_1 + ... + d_{i-1}`.
pub fn polarize(p: &ExactPoly, caps: &[u32]) -> Result<ExactPoly> {
    if caps.len() != p.arity() {
        return Err(Error::input(format!(
            "{} degree caps for {} variables",
            caps.len(),
            p.arity()
        )));
    }
    for (i, &d) in caps.iter().enumerate() {
        let k = p.degree_in(i);
        if k > d {
            return Err(Error::input(format!(
                "degree {k} of x{} exceeds its cap {d}",
                i + 1
            )));
        }
    }
    let total: usize = caps.iter().map(|&d| d as usize).sum();
    if total > 64 {
        return Err(Error::input("polarization needs at most 64 variables"));
    }
    let offsets = block_offsets(caps);
    let mut out = ExactPoly::zero(total);
    for (m, c) in p.terms() {
        let mut coeff = c.clone();
        for (i, &k) in m.exps().iter().enumerate() {
            coeff /= Rational::from_integer(binomial(caps[i] as u64, k as u64));
        }
        let mut masks = vec![0u64];
        for (i, &k) in m.exps().iter().enumerate() {
            let choices: Vec<u64> = bits::k_subsets(caps[i] as usize, k as usize)
                .map(|s| s << offsets[i])
                .collect();
            masks = masks
                .iter()
                .flat_map(|&a| choices.iter().map(move |&b| a | b))
                .collect();
        }
        for mask in masks {
            out.add_term(Monomial::from_mask(total, mask), coeff.clone());
        }
    }
    Ok(out)
}

/// Sets every `y_{i,j}` to `x_i`, undoing [`polarize`].
pub fn diagonalize(q: &ExactPoly, caps: &[u32]) -> Result<ExactPoly> {
    let total: usize = caps.iter().map(|&d| d as usize).sum();
    if total != q.arity() {
        return Err(Error::input(format!(
            "caps cover {total} variables, polynomial has {}",
            q.arity()
        )));
    }
    let n = caps.len();
    let assignment: Vec<ExactPoly> = caps
        .iter()
        .enumerate()
        .flat_map(|(i, &d)| std::iter::repeat_n(ExactPoly::var(n, i), d as usize))
        .collect();
    // With every cap zero there is nothing to substitute into; keep the arity.
    q.substitute(&assignment)?.extend_arity(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportCheck {
    #[serde(serialize_with = "ser::masks_one_based")]
    pub bases: Vec<u64>,
    pub exchange_holds: bool,
    pub violation: Option<ExchangeViolation>,
}

/// The support of a homogeneous multiaffine polynomial with positive
/// coefficients, tested against the basis-exchange axiom.
pub fn support_matroid_check(p: &ExactPoly) -> Result<SupportCheck> {
    if p.is_zero() {
        return Err(Error::input("support of the zero polynomial"));
    }
    if !p.is_homogeneous() || !p.is_multiaffine() {
        return Err(Error::input(
            "support check needs a homogeneous multiaffine polynomial",
        ));
    }
    if !p.has_positive_coefficients() {
        return Err(Error::input("support check needs positive coefficients"));
    }
    if p.arity() > 64 {
        return Err(Error::input("support check handles at most 64 variables"));
    }
    let mut bases = p.support_masks();
    bases.sort_unstable();
    let violation = verify_basis_exchange(&bases)?;
    Ok(SupportCheck {
        bases,
        exchange_holds: violation.is_none(),
        violation,
    })
}

/// Float approximations of the eigenvalues, for reporting.
pub fn approx_values(s: &Spectrum) -> Vec<f64> {
    s.values.iter().map(AlgebraicReal::approx).collect()
}
