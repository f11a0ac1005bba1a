//! Polynomials attached to the matroids `V_H`: bases generating polynomials
//! and their closed forms, the stable weighting `W`, the polarized witness,
//! the hypergraphs `H_{n,k}` and the rank arithmetic behind their Ingleton
//! violations.

use num::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::matroid::{
    diagonal_polymatroid, enumerate, linear_rank_ineq, Family, Hypergraph, HypergraphJson,
    RankInequality, RankOracle, VHMatroid, EXHAUSTIVE_CAP,
};
use crate::poly::{frac, rat, ExactPoly, Monomial, UnivariateExact};
use crate::sampling::{grid_point, stream_rng};
use crate::stability::{
    cone_member, diagonalize, polarize, probe_hyperbolicity, probe_stability, ConeStatus,
    ProbeReport,
};
use crate::symfun::elementary;
use crate::{bits, ser, Error, Rational, Result};

/// `Π_{i in S} x_i^2` in `n` variables.
fn squared_mask(n: usize, s: u64) -> Monomial {
    let mut e = vec![0u32; n];
    for i in bits::elements(s) {
        e[i] = 2;
    }
    Monomial::new(e)
}

fn sum_of_squared(n: usize, sets: impl IntoIterator<Item = u64>) -> ExactPoly {
    let mut p = ExactPoly::zero(n);
    for s in sets {
        p.add_term(squared_mask(n, s), Rational::one());
    }
    p
}

/// `N(x)`: the products `Π x_i x_i'` over non-edges, in `2n` variables.
pub fn nonedge_poly(h: &Hypergraph) -> ExactPoly {
    let n = h.n();
    ExactPoly::from_masks(2 * n, h.non_edges().map(|e| e | e << n))
}

/// `N(x_1, x_1, ..., x_n, x_n)`.
pub fn nonedge_poly_diagonal(h: &Hypergraph) -> ExactPoly {
    sum_of_squared(h.n(), h.non_edges())
}

/// `e_{2r}(x) - e_r(x_1 x_1', ..., x_n x_n') + N(x)`.
pub fn bases_poly_closed_form(m: &VHMatroid) -> ExactPoly {
    let h = m.hypergraph();
    let (n, r) = (h.n(), h.d());
    let pairs = ExactPoly::from_masks(2 * n, bits::k_subsets(n, r).map(|s| m.paired(s)));
    &(&elementary(2 * r, 2 * n) - &pairs) + &nonedge_poly(h)
}

/// Sum of the basis monomials, checked against the closed form.
pub fn bases_gen_poly(m: &VHMatroid) -> Result<ExactPoly> {
    if m.ground_size() > EXHAUSTIVE_CAP {
        return Err(Error::input(format!(
            "bases enumeration handles at most {EXHAUSTIVE_CAP} elements"
        )));
    }
    let enumerated = ExactPoly::from_masks(m.ground_size(), m.bases());
    let closed = bases_poly_closed_form(m);
    if enumerated != closed {
        return Err(Error::Consistency(
            "enumerated bases polynomial differs from the closed form".into(),
        ));
    }
    Ok(enumerated)
}

/// The bases polynomial with `x_i' = x_i`, computed from
/// `e_{2r}(x, x) = Σ_j e_j e_{2r-j}` without touching the doubled ring.
pub fn diagonal_bases_poly(h: &Hypergraph) -> ExactPoly {
    let (n, r) = (h.n(), h.d());
    let mut p = ExactPoly::zero(n);
    for j in 0..=2 * r {
        p = &p + &(&elementary(j, n) * &elementary(2 * r - j, n));
    }
    &p - &sum_of_squared(n, h.edges().iter().copied())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPolys {
    /// `4 Σ_j e_{r+2j+1} e_{r-2j-1} + N(x, x)`: the diagonalized bases polynomial.
    pub f: ExactPoly,
    /// `4 e_{r+1} e_{r-1} + 3/(r+1) N(x, x)`.
    pub w: ExactPoly,
    pub support_equal: bool,
}

pub fn w_poly(h: &Hypergraph) -> Result<WPolys> {
    let (n, r) = (h.n(), h.d());
    if r < 2 {
        return Err(Error::input(format!(
            "the weighted polynomial needs d >= 2, got d = {r}"
        )));
    }
    let nn = nonedge_poly_diagonal(h);
    let mut f = ExactPoly::zero(n);
    for j in 0..r.div_ceil(2) {
        f = &f + &(&elementary(r + 2 * j + 1, n) * &elementary(r - 2 * j - 1, n));
    }
    let f = &f.scale(&rat(4)) + &nn;
    if f != diagonal_bases_poly(h) {
        return Err(Error::Consistency(
            "elementary-product form of the diagonal differs from the direct expansion".into(),
        ));
    }
    let w = &(&elementary(r + 1, n) * &elementary(r - 1, n)).scale(&rat(4))
        + &nn.scale(&frac(3, r as i64 + 1));
    let support_equal = f.support() == w.support();
    Ok(WPolys {
        f,
        w,
        support_equal,
    })
}

/// Maps the polarization block order `(y_{1,1}, y_{1,2}, y_{2,1}, ...)` onto
/// the ground set order `(1, ..., n, 1', ..., n')`.
fn pair_blocks_to_ground(n: usize) -> Vec<usize> {
    (0..2 * n)
        .map(|k| if k % 2 == 0 { k / 2 } else { k / 2 + n })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessBundle {
    pub hypergraph: HypergraphJson,
    pub num_bases: usize,
    #[serde(serialize_with = "ser::masks_one_based")]
    pub nonbases: Vec<u64>,
    pub f_poly: ExactPoly,
    pub w_poly: ExactPoly,
    /// Multiaffine in `x_1, ..., x_n, x_1', ..., x_n'`.
    pub witness_poly: ExactPoly,
    pub support_match: bool,
    pub diagonal_recovers_w: bool,
    pub probe: ProbeReport,
}

/// Polarizes `W` (caps of 2), compares its support with the bases of `V_H`
/// and probes it for stability.
pub fn whpp_witness(h: &Hypergraph, trials: usize, seed: u64, tol: f64) -> Result<WitnessBundle> {
    let m = VHMatroid::new(h.clone())?;
    if m.ground_size() > EXHAUSTIVE_CAP {
        return Err(Error::input(format!(
            "support comparison handles at most {EXHAUSTIVE_CAP} elements"
        )));
    }
    let n = h.n();
    let wp = w_poly(h)?;
    let caps = vec![2u32; n];
    let blocked = polarize(&wp.w, &caps)?;
    let diagonal_recovers_w = diagonalize(&blocked, &caps)? == wp.w;
    let witness = blocked.permute_vars(&pair_blocks_to_ground(n))?;
    if !(witness.is_multiaffine()
        && witness.is_homogeneous()
        && witness.has_positive_coefficients())
    {
        return Err(Error::Consistency(
            "polarized witness is not a positive homogeneous multiaffine polynomial".into(),
        ));
    }
    let bases = m.bases();
    let mut support = witness.support_masks();
    support.sort_unstable();
    let support_match = support == bases;
    let probe = probe_stability(&witness, trials, seed, tol)?;
    Ok(WitnessBundle {
        hypergraph: h.to_json_value(),
        num_bases: bases.len(),
        nonbases: m.nonbases(),
        f_poly: wp.f,
        w_poly: wp.w,
        witness_poly: witness,
        support_match,
        diagonal_recovers_w,
        probe,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HppRestriction {
    pub hypergraph: HypergraphJson,
    /// Coefficients of the restriction in `t`, ascending.
    #[serde(serialize_with = "ser::rationals")]
    pub coefficients: Vec<Rational>,
    pub degree: usize,
    #[serde(serialize_with = "ser::opt_rational")]
    pub discriminant: Option<Rational>,
    pub real_rooted: bool,
    pub non_real: bool,
}

/// Bases polynomial of `V_H` on the line `x_1 = x_1' = t`,
/// `x_2 = x_2' = x_3 = x_3' = -2`, all other variables 1.
pub fn hpp_restriction(h: &Hypergraph) -> Result<HppRestriction> {
    let n = h.n();
    if n < 3 {
        return Err(Error::input("the substitution needs at least 3 vertices"));
    }
    let m = VHMatroid::new(h.clone())?;
    let p = bases_gen_poly(&m)?;
    let mut x0 = vec![rat(1); 2 * n];
    let mut v = vec![rat(0); 2 * n];
    for i in [0, n] {
        x0[i] = rat(0);
        v[i] = rat(1);
    }
    for i in [1, 2, n + 1, n + 2] {
        x0[i] = rat(-2);
    }
    let f: UnivariateExact = p.restrict_line(&x0, &v)?;
    if f.is_zero() {
        return Err(Error::Consistency(
            "restriction vanishes identically".into(),
        ));
    }
    let real_rooted = f.real_roots_exact()?.is_real_rooted;
    Ok(HppRestriction {
        hypergraph: h.to_json_value(),
        coefficients: f.coeffs().to_vec(),
        degree: f.degree().unwrap(),
        discriminant: f.quadratic_discriminant(),
        real_rooted,
        non_real: !real_rooted,
    })
}

/// The restriction for the complete 3-uniform hypergraph on six vertices,
/// which must have non-real zeros.
pub fn hpp_falsify_complete63() -> Result<HppRestriction> {
    let r = hpp_restriction(&Hypergraph::complete(6, 3)?)?;
    if !r.non_real {
        return Err(Error::Consistency(
            "restriction of the complete 3-uniform case is real-rooted".into(),
        ));
    }
    Ok(r)
}

/// All `k`-subsets of `[n+2]` not containing both `n+1` and `n+2`.
pub fn hnk_hypergraph(n: usize, k: usize) -> Result<Hypergraph> {
    if k == 0 || k > n + 2 {
        return Err(Error::input(format!(
            "need 1 <= k <= n + 2, got n = {n}, k = {k}"
        )));
    }
    let special = 0b11u64 << n;
    let edges = bits::k_subsets(n + 2, k)
        .filter(|e| e & special != special)
        .collect();
    Hypergraph::from_masks(n + 2, k, edges)
}

#[derive(Clone, Debug)]
pub struct Hnk {
    pub hypergraph: Hypergraph,
    /// Diagonalized bases polynomial in `n + 2` variables.
    pub h: ExactPoly,
}

pub fn build_hnk(n: usize, k: usize) -> Result<Hnk> {
    let hypergraph = hnk_hypergraph(n, k)?;
    let h = diagonal_bases_poly(&hypergraph);
    Ok(Hnk { hypergraph, h })
}

/// `x1^2 x2^2 + 4 (x1 + x2 + x3 + x4) e_3(x)`, with the special pair at `{1, 2}`.
pub fn h22_reference() -> ExactPoly {
    let sq = ExactPoly::monomial(Monomial::new(vec![2, 2, 0, 0]), rat(1));
    &sq + &(&elementary(1, 4) * &elementary(3, 4)).scale(&rat(4))
}

/// `build_hnk(2, 2)` relabeled by `(1 3)(2 4)`, which moves the special
/// pair from `{3, 4}` to `{1, 2}`.
pub fn h22() -> Result<ExactPoly> {
    build_hnk(2, 2)?.h.permute_vars(&[2, 3, 0, 1])
}

/// `32 (2x1 + 3x2 + 3x3 + 4x4)(x1x2 + x1x3 + 2x1x4 + x2x4 + x3x4)`.
pub fn kummer_q() -> ExactPoly {
    let lin = ExactPoly::from_terms(
        4,
        [
            (vec![1, 0, 0, 0], rat(2)),
            (vec![0, 1, 0, 0], rat(3)),
            (vec![0, 0, 1, 0], rat(3)),
            (vec![0, 0, 0, 1], rat(4)),
        ],
    )
    .expect("arity 4");
    let quad = ExactPoly::from_terms(
        4,
        [
            (vec![1, 1, 0, 0], rat(1)),
            (vec![1, 0, 1, 0], rat(1)),
            (vec![1, 0, 0, 1], rat(2)),
            (vec![0, 1, 0, 1], rat(1)),
            (vec![0, 0, 1, 1], rat(1)),
        ],
    )
    .expect("arity 4");
    (&lin * &quad).scale(&rat(32))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InclusionFailure {
    #[serde(serialize_with = "ser::rationals")]
    pub x: Vec<Rational>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InclusionReport {
    /// Interior points of `Λ₊(h_{2,2})` that were tested.
    pub samples: usize,
    /// Points drawn to find them.
    pub draws: usize,
    pub failures: usize,
    pub first_failure: Option<InclusionFailure>,
    pub sampling: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KummerReport {
    pub h22_matches_reference: bool,
    #[serde(serialize_with = "ser::rational")]
    pub h22_at_ones: Rational,
    #[serde(serialize_with = "ser::rational")]
    pub q_at_ones: Rational,
    pub degree_q_h22: u32,
    pub probe_q: ProbeReport,
    pub probe_q_h22: ProbeReport,
    pub inclusion: InclusionReport,
    pub passed: bool,
}

const INCLUSION_BOX: (i64, i64) = (-5, 10);
const INCLUSION_GRID: i64 = 8;
const INCLUSION_MAX_DRAWS_PER_SAMPLE: usize = 100;

/// Tests `Λ₊(h_{2,2}) ⊆ Λ₊(q)` on random interior points of `Λ₊(h_{2,2})`
/// found by rejection from a box. Each sample uses its own random stream.
pub fn cone_inclusion(
    h: &ExactPoly,
    q: &ExactPoly,
    samples: usize,
    seed: u64,
) -> Result<InclusionReport> {
    let n = h.arity();
    let ones = vec![rat(1); n];
    // Stream offset keeps these draws apart from the probe streams.
    const STREAM_BASE: u64 = 1 << 40;
    let results: Vec<(usize, Option<InclusionFailure>)> = (0..samples)
        .into_par_iter()
        .map(|i| -> Result<(usize, Option<InclusionFailure>)> {
            let mut rng = stream_rng(seed, STREAM_BASE + i as u64);
            for draw in 1..=INCLUSION_MAX_DRAWS_PER_SAMPLE {
                let x = grid_point(
                    &mut rng,
                    n,
                    INCLUSION_BOX.0,
                    INCLUSION_BOX.1,
                    INCLUSION_GRID,
                );
                if cone_member(h, &ones, &x)? != ConeStatus::Interior {
                    continue;
                }
                let failure = match cone_member(q, &ones, &x) {
                    Ok(ConeStatus::Outside) => Some(InclusionFailure {
                        x,
                        detail: "outside the cone of q".into(),
                    }),
                    Ok(_) => None,
                    Err(e @ Error::NotHyperbolic { .. }) => Some(InclusionFailure {
                        x,
                        detail: e.to_string(),
                    }),
                    Err(e) => return Err(e),
                };
                return Ok((draw, failure));
            }
            Err(Error::Numeric {
                message: format!("no interior point in {INCLUSION_MAX_DRAWS_PER_SAMPLE} draws"),
                partial: Vec::new(),
            })
        })
        .collect::<Result<_>>()?;
    let draws = results.iter().map(|(d, _)| d).sum();
    let failures: Vec<InclusionFailure> = results.into_iter().filter_map(|(_, f)| f).collect();
    Ok(InclusionReport {
        samples,
        draws,
        failures: failures.len(),
        first_failure: failures.into_iter().next(),
        sampling: format!(
            "rejection from the 1/{INCLUSION_GRID} grid in [{}, {}]^{n}",
            INCLUSION_BOX.0, INCLUSION_BOX.1
        ),
    })
}

pub fn kummer_check(trials: usize, seed: u64, samples: usize, tol: f64) -> Result<KummerReport> {
    let h = h22()?;
    let q = kummer_q();
    let ones = vec![rat(1); 4];
    let qh = &q * &h;
    let probe_q = probe_hyperbolicity(&q, &ones, trials, seed, tol)?;
    let probe_q_h22 = probe_hyperbolicity(&qh, &ones, trials, seed, tol)?;
    let inclusion = cone_inclusion(&h, &q, samples, seed)?;
    let h22_matches_reference = h == h22_reference();
    let passed =
        h22_matches_reference && probe_q.clean() && probe_q_h22.clean() && inclusion.failures == 0;
    Ok(KummerReport {
        h22_matches_reference,
        h22_at_ones: h.evaluate(&ones)?,
        q_at_ones: q.evaluate(&ones)?,
        degree_q_h22: qh.total_degree().unwrap_or(0),
        probe_q,
        probe_q_h22,
        inclusion,
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexRanks {
    pub n: usize,
    pub k: usize,
    /// `A, B, C, D`, 1-based.
    pub sets: Vec<Vec<usize>>,
    /// `r0` of `A∪B, A∪C∪D, C, D, B∪C∪D`.
    pub lhs_terms: Vec<usize>,
    /// `r0` of `A∪C, A∪D, B∪C, B∪D, C∪D`.
    pub rhs_terms: Vec<usize>,
    pub lhs: usize,
    pub rhs: usize,
    pub violated: bool,
}

/// Ingleton sides for `A = Z+{n+1}`, `B = Z+{n+2}`, `C = Z+{x}`, `D = Z+{y}`
/// under the diagonal polymatroid of `V_{H_{n,k}}`.
pub fn counterex_ranks(
    n: usize,
    k: usize,
    z: &[usize],
    x: usize,
    y: usize,
) -> Result<CounterexRanks> {
    if k < 2 || n < k + 1 {
        return Err(Error::input(format!(
            "need k >= 2 and n >= k + 1, got n = {n}, k = {k}"
        )));
    }
    if z.len() != k - 2 {
        return Err(Error::input(format!(
            "Z must have k - 2 = {} elements",
            k - 2
        )));
    }
    let mut all: Vec<usize> = z.to_vec();
    all.extend([x, y]);
    if all.iter().any(|&i| i == 0 || i > n) {
        return Err(Error::input(format!("Z, x and y must lie in 1..={n}")));
    }
    let zm = bits::from_indices(z.iter().map(|i| i - 1));
    if bits::size(zm) != z.len() || bits::size(zm | 1 << (x - 1) | 1 << (y - 1)) != k {
        return Err(Error::input("Z, x and y must be distinct"));
    }
    let m = VHMatroid::new(hnk_hypergraph(n, k)?)?;
    let r0 = diagonal_polymatroid(&m)?;
    let (a, b) = (zm | 1 << n, zm | 1 << (n + 1));
    let (c, d) = (zm | 1 << (x - 1), zm | 1 << (y - 1));
    let lhs_terms: Vec<usize> = [a | b, a | c | d, c, d, b | c | d]
        .iter()
        .map(|&s| r0.rank(s))
        .collect();
    let rhs_terms: Vec<usize> = [a | c, a | d, b | c, b | d, c | d]
        .iter()
        .map(|&s| r0.rank(s))
        .collect();
    let (lhs, rhs) = (lhs_terms.iter().sum(), rhs_terms.iter().sum());
    let check = linear_rank_ineq(RankInequality::Ingleton, &r0, &[a, b, c, d])?;
    if (check.lhs, check.rhs) != (lhs, rhs) {
        return Err(Error::Consistency(
            "Ingleton evaluator disagrees with the term ranks".into(),
        ));
    }
    Ok(CounterexRanks {
        n,
        k,
        sets: [a, b, c, d]
            .iter()
            .map(|&s| bits::to_one_based(s))
            .collect(),
        lhs_terms,
        rhs_terms,
        lhs,
        rhs,
        violated: lhs > rhs,
    })
}

/// Non-bases of `V_H` as found by enumerating hyperplanes of size `2d`.
pub fn circuit_hyperplanes(m: &VHMatroid) -> Result<Vec<u64>> {
    let r = m.full_rank();
    Ok(enumerate(m, Family::Hyperplanes)?
        .into_iter()
        .filter(|&s| bits::size(s) == r)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Hypergraph {
        Hypergraph::new(
            4,
            2,
            &[vec![1, 2], vec![1, 3], vec![2, 3], vec![2, 4], vec![3, 4]],
        )
        .unwrap()
    }

    fn ones(n: usize) -> Vec<Rational> {
        vec![rat(1); n]
    }

    #[test]
    fn diamond_bases_poly() {
        let m = VHMatroid::new(diamond()).unwrap();
        let p = bases_gen_poly(&m).unwrap();
        assert_eq!(p.evaluate(&ones(8)).unwrap(), rat(65));
        // the only non-edge is {1,4}
        assert_eq!(
            nonedge_poly(m.hypergraph()),
            ExactPoly::from_masks(8, [0b1001_1001])
        );
    }

    #[test]
    fn empty_graph_gives_uniform() {
        let m = VHMatroid::new(Hypergraph::empty(3, 2).unwrap()).unwrap();
        assert_eq!(bases_gen_poly(&m).unwrap(), elementary(4, 6));
    }

    #[test]
    fn diamond_w_equals_f() {
        let w = w_poly(&diamond()).unwrap();
        assert_eq!(w.f, w.w);
        let want = &(&elementary(1, 4) * &elementary(3, 4)).scale(&rat(4))
            + &ExactPoly::monomial(Monomial::new(vec![2, 0, 0, 2]), rat(1));
        assert_eq!(w.w, want);
        assert_eq!(w.w.evaluate(&ones(4)).unwrap(), rat(65));
        assert!(w.support_equal);
    }

    #[test]
    fn complete_and_empty_w() {
        let w = w_poly(&Hypergraph::complete(6, 3).unwrap()).unwrap();
        assert_eq!(w.w, (&elementary(4, 6) * &elementary(2, 6)).scale(&rat(4)));
        assert!(w.support_equal);
        let w = w_poly(&Hypergraph::empty(5, 2).unwrap()).unwrap();
        let want = &(&elementary(3, 5) * &elementary(1, 5)).scale(&rat(4))
            + &sum_of_squared(5, bits::k_subsets(5, 2));
        assert_eq!(w.w, want);
        assert!(w_poly(&Hypergraph::complete(4, 1).unwrap()).is_err());
    }

    #[test]
    fn diamond_witness() {
        let b = whpp_witness(&diamond(), 128, 3, 1e-9).unwrap();
        assert!(b.support_match && b.diagonal_recovers_w);
        assert_eq!(b.num_bases, 65);
        assert_eq!(b.witness_poly.num_terms(), 65);
        assert_eq!(b.probe.failures, 0);
    }

    #[test]
    fn complete63_is_not_hpp() {
        let r = hpp_falsify_complete63().unwrap();
        assert_eq!(r.degree, 2);
        assert!(r.discriminant.unwrap() < rat(0));
        assert!(r.non_real);
    }

    #[test]
    fn diamond_restriction_is_real_rooted() {
        let r = hpp_restriction(&diamond()).unwrap();
        assert!(r.real_rooted);
    }

    #[test]
    fn h22_matches_reference() {
        assert_eq!(h22().unwrap(), h22_reference());
        assert_eq!(h22_reference().evaluate(&ones(4)).unwrap(), rat(65));
        let hnk = build_hnk(3, 2).unwrap();
        assert!(hnk.h.is_homogeneous());
        assert_eq!(hnk.h.total_degree(), Some(4));
    }

    #[test]
    fn diagonal_form_matches_substitution() {
        for h in [
            diamond(),
            Hypergraph::complete(6, 3).unwrap(),
            hnk_hypergraph(3, 3).unwrap(),
        ] {
            let m = VHMatroid::new(h.clone()).unwrap();
            let n = h.n();
            let assign: Vec<ExactPoly> = (0..2 * n).map(|i| ExactPoly::var(n, i % n)).collect();
            let sub = bases_gen_poly(&m).unwrap().substitute(&assign).unwrap();
            assert_eq!(sub, diagonal_bases_poly(&h));
        }
    }

    #[test]
    fn kummer_numbers() {
        assert_eq!(kummer_q().evaluate(&ones(4)).unwrap(), rat(2304));
        let r = kummer_check(64, 1, 50, 1e-9).unwrap();
        assert_eq!(r.degree_q_h22, 7);
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn counterexample_ranks() {
        let r = counterex_ranks(3, 2, &[], 1, 2).unwrap();
        assert_eq!((r.lhs, r.rhs), (16, 15));
        let r = counterex_ranks(5, 3, &[1], 2, 3).unwrap();
        assert_eq!((r.lhs, r.rhs), (26, 25));
        assert_eq!(r.lhs_terms, vec![6, 6, 4, 4, 6]);
        assert!(counterex_ranks(3, 2, &[], 1, 1).is_err());
        assert!(counterex_ranks(2, 2, &[], 1, 2).is_err());
    }

    #[test]
    fn circuit_hyperplanes_are_the_paired_edges() {
        let m = VHMatroid::new(diamond()).unwrap();
        assert_eq!(circuit_hyperplanes(&m).unwrap(), m.nonbases());
    }
}
