//! Symmetric polynomials: the monomial, elementary and power-sum bases,
//! rewriting in the elementary basis, the lift operator, and checks of the
//! identities and inequalities between them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::poly::{frac, rat, ExactPoly, Monomial};
use crate::sampling::{grid_point, stream_rng};
use crate::Rational;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::input("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::input("partition parts must be weakly decreasing"));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `k1^a1 k2^a2 ...`: `a_j` parts equal to `k_j`.
    pub fn from_multiplicities(pairs: &[(u32, usize)]) -> Self {
        Partition::from_unsorted(
            pairs
                .iter()
                .flat_map(|&(k, a)| std::iter::repeat_n(k, a))
                .collect(),
        )
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Every partition of `d`.
    pub fn all_of(d: u32) -> Vec<Partition> {
        fn go(rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(d, d, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `m_lambda` in `n` variables (zero when the partition is longer than `n`).
pub fn monomial_symmetric(lambda: &Partition, n: usize) -> ExactPoly {
    let mut p = ExactPoly::zero(n);
    if lambda.len() > n {
        return p;
    }
    // Distinct permutations of the padded exponent vector.
    let mut counts: Vec<(u32, usize)> = Vec::new();
    for &x in lambda.parts() {
        match counts.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => counts.push((x, 1)),
        }
    }
    counts.push((0, n - lambda.len()));
    fn go(counts: &mut [(u32, usize)], cur: &mut Vec<u32>, n: usize, out: &mut ExactPoly) {
        if cur.len() == n {
            out.add_term(Monomial::new(cur.clone()), Rational::one());
            return;
        }
        for i in 0..counts.len() {
            if counts[i].1 == 0 {
                continue;
            }
            counts[i].1 -= 1;
            cur.push(counts[i].0);
            go(counts, cur, n, out);
            cur.pop();
            counts[i].1 += 1;
        }
    }
    go(&mut counts, &mut Vec::with_capacity(n), n, &mut p);
    p
}

/// `e_k` in `n` variables; `e_0 = 1` and `e_k = 0` for `k > n`.
pub fn elementary(k: usize, n: usize) -> ExactPoly {
    ExactPoly::from_masks(n, bits::k_subsets(n, k))
}

/// `p_k = x_1^k + ... + x_n^k`.
pub fn power_sum(k: u32, n: usize) -> ExactPoly {
    let mut p = ExactPoly::zero(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = k;
        p.add_term(Monomial::new(e), Rational::one());
    }
    p
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymBasis {
    Monomial(Partition),
    Elementary(usize),
    Power(u32),
}

pub fn basis_poly(b: &SymBasis, n: usize) -> ExactPoly {
    match b {
        SymBasis::Monomial(l) => monomial_symmetric(l, n),
        SymBasis::Elementary(k) => elementary(*k, n),
        SymBasis::Power(k) => power_sum(*k, n),
    }
}

/// Checks invariance under the adjacent transpositions, which generate `S_n`.
pub fn check_symmetric(p: &ExactPoly) -> Result<()> {
    let n = p.arity();
    for i in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        if p.permute_vars(&perm)? != *p {
            return Err(Error::input(format!(
                "polynomial is not symmetric: it changes under the transposition (x{} x{})",
                i + 1,
                i + 2
            )));
        }
    }
    Ok(())
}

/// A polynomial `Q` whose variable `y_k` (index `k-1`) stands for `e_k`
/// in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EBasisExpr {
    n: usize,
    q: ExactPoly,
}

impl EBasisExpr {
    pub fn new(n: usize, q: ExactPoly) -> Result<Self> {
        if q.arity() != n {
            return Err(Error::input(
                "e-basis expression needs one symbol per e_1..e_n",
            ));
        }
        Ok(EBasisExpr { n, q })
    }

    pub fn q(&self) -> &ExactPoly {
        &self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Back-substitutes `y_k = e_k(x_1..x_n)`.
    pub fn expand(&self) -> ExactPoly {
        let es: Vec<ExactPoly> = (1..=self.n).map(|k| elementary(k, self.n)).collect();
        self.q
            .substitute(&es)
            .expect("arity checked at construction")
    }

    /// Value at a point, through `e_k` values only.
    pub fn evaluate_at(&self, x: &[Rational]) -> Result<Rational> {
        if x.len() != self.n {
            return Err(Error::input("point length differs from n"));
        }
        let e = elementary_values(x, self.n);
        self.q.evaluate(&e[1..])
    }
}

/// `[e_0(x), ..., e_upto(x)]` by the product recurrence.
pub fn elementary_values(x: &[Rational], upto: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); upto + 1];
    e[0] = Rational::one();
    for xi in x {
        for k in (1..=upto).rev() {
            let add = &e[k - 1] * xi;
            e[k] += add;
        }
    }
    e
}

/// Rewrites a symmetric polynomial in the elementary basis by repeatedly
/// removing the graded-lex leading term `c x^a` with `c * prod e_k^(a_k - a_(k+1))`.
pub fn to_e_basis(p: &ExactPoly, n: usize) -> Result<EBasisExpr> {
    if p.arity() != n {
        return Err(Error::input(format!(
            "polynomial has arity {}, expected {n}",
            p.arity()
        )));
    }
    check_symmetric(p)?;
    let es: Vec<ExactPoly> = (0..=n).map(|k| elementary(k, n)).collect();
    let mut powers: HashMap<(usize, u32), ExactPoly> = HashMap::new();
    let mut rest = p.clone();
    let mut q = ExactPoly::zero(n);
    while let Some((m, c)) = rest.leading_term() {
        let a = m.exps();
        let c = c.clone();
        let mut y = vec![0u32; n];
        for k in 0..n {
            let next = a.get(k + 1).copied().unwrap_or(0);
            if a[k] < next {
                return Err(Error::Consistency(
                    "leading exponent of a symmetric polynomial is not sorted".into(),
                ));
            }
            y[k] = a[k] - next;
        }
        let mut prod = ExactPoly::one(n);
        for (k, &ek) in y.iter().enumerate() {
            if ek == 0 {
                continue;
            }
            let pw = powers
                .entry((k + 1, ek))
                .or_insert_with(|| es[k + 1].pow(ek));
            prod = &prod * pw;
        }
        rest = &rest - &prod.scale(&c);
        q.add_term(Monomial::new(y), c);
    }
    Ok(EBasisExpr { n, q })
}

/// The lift `L(P) = H(e_1, 2e_2, ..., (m+1)e_(m+1))`, `H` the degree-`d`
/// homogenization of `Q` in a new symbol standing for `e_0`. `d` defaults
/// to the total degree of `Q`.
pub fn lift_with_degree(
    p: &ExactPoly,
    n: usize,
    n_out: usize,
    d: Option<u32>,
) -> Result<ExactPoly> {
    let expr = to_e_basis(p, n)?;
    lift_expr(&expr, n_out, d)
}

pub fn lift(p: &ExactPoly, n: usize, n_out: usize) -> Result<ExactPoly> {
    lift_with_degree(p, n, n_out, None)
}

pub fn lift_expr(expr: &EBasisExpr, n_out: usize, d: Option<u32>) -> Result<ExactPoly> {
    if n_out == 0 {
        return Err(Error::input("lift needs at least one output variable"));
    }
    let n = expr.n;
    let dq = expr.q.total_degree().unwrap_or(0);
    let d = d.unwrap_or(dq);
    if d < dq {
        return Err(Error::input(format!(
            "homogenization degree {d} is below the degree {dq} of Q"
        )));
    }
    let mut h = ExactPoly::zero(n + 1);
    for (m, c) in expr.q.terms() {
        let mut e = Vec::with_capacity(n + 1);
        e.push(d - m.degree());
        e.extend_from_slice(m.exps());
        h.add_term(Monomial::new(e), c.clone());
    }
    let mut targets = vec![elementary(1, n_out)];
    targets.extend((1..=n).map(|k| elementary(k + 1, n_out).scale(&rat(k as i64 + 1))));
    h.substitute(&targets)
}

fn m_two_power(r: usize, n: usize) -> ExactPoly {
    monomial_symmetric(&Partition::from_multiplicities(&[(2, r)]), n)
}

fn e_or_zero(k: i64, n: usize) -> ExactPoly {
    if k < 0 {
        ExactPoly::zero(n)
    } else {
        elementary(k as usize, n)
    }
}

/// `sum_{k=0}^{2r} (-1)^(k+r) e_k e_(2r-k)`.
fn jensen_form(r: usize, n: usize) -> ExactPoly {
    let mut out = ExactPoly::zero(n);
    for k in 0..=2 * r {
        let t = &elementary(k, n) * &elementary(2 * r - k, n);
        out = if (k + r).is_multiple_of(2) {
            &out + &t
        } else {
            &out - &t
        };
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    Jensen,
    Boost,
    TsosConstant,
    DoubledElementary,
}

impl Identity {
    pub const ALL: [Identity; 4] = [
        Identity::Jensen,
        Identity::Boost,
        Identity::TsosConstant,
        Identity::DoubledElementary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Jensen => "jensen",
            Identity::Boost => "boost",
            Identity::TsosConstant => "tsos_constant",
            Identity::DoubledElementary => "doubled_elementary",
        }
    }

    pub fn min_r(self) -> usize {
        match self {
            Identity::Jensen | Identity::Boost => 1,
            Identity::TsosConstant | Identity::DoubledElementary => 2,
        }
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::input(format!("unknown identity {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub which: Identity,
    pub r: usize,
    pub n: usize,
    pub holds: bool,
    pub difference: ExactPoly,
}

/// Exact check of one identity at `(r, n)`; the difference is zero iff it holds.
pub fn verify_identity(which: Identity, r: usize, n: usize) -> Result<IdentityCheck> {
    if r < which.min_r() {
        return Err(Error::input(format!(
            "{} needs r >= {}, got {r}",
            which.name(),
            which.min_r()
        )));
    }
    if n == 0 {
        return Err(Error::input("n must be positive"));
    }
    let difference = match which {
        Identity::Jensen => &m_two_power(r, n) - &jensen_form(r, n),
        Identity::Boost => {
            // The source is quadratic in e_0, ..., e_(2r-2) (jensen form),
            // so it is homogenized at degree 2 even when r = 1.
            let src = m_two_power(r - 1, n);
            let lifted = lift_with_degree(&src, n, n + 1, Some(2))?;
            let rr = rat((r * r) as i64);
            let rhs = &m_two_power(r, n + 1).scale(&rr)
                + &monomial_symmetric(
                    &Partition::from_multiplicities(&[(2, r - 1), (1, 2)]),
                    n + 1,
                )
                .scale(&rat(2));
            &lifted - &rhs
        }
        Identity::TsosConstant => {
            let mut lhs = ExactPoly::zero(n);
            for s in bits::k_subsets(n, r - 1) {
                let mut p2 = ExactPoly::zero(n);
                let mut sq = ExactPoly::one(n);
                for i in 0..n {
                    let xi2 = ExactPoly::var(n, i).pow(2);
                    if s >> i & 1 == 1 {
                        sq = &sq * &xi2;
                    } else {
                        p2 = &p2 + &xi2;
                    }
                }
                lhs = &lhs + &(&p2 * &sq);
            }
            let lhs = lhs.scale(&frac(1, 2));
            &lhs - &m_two_power(r, n).scale(&frac(r as i64, 2))
        }
        Identity::DoubledElementary => {
            let pair: Vec<ExactPoly> = (0..2 * n).map(|j| ExactPoly::var(n, j / 2)).collect();
            let doubled = elementary(2 * r, 2 * n).substitute(&pair)?;
            let mut rhs = ExactPoly::zero(n);
            let mut j = 0i64;
            while r as i64 - 1 - 2 * j >= 0 {
                rhs = &rhs
                    + &(&e_or_zero(r as i64 - 1 - 2 * j, n) * &e_or_zero(r as i64 + 1 + 2 * j, n));
                j += 1;
            }
            &(&doubled - &m_two_power(r, n)) - &rhs.scale(&rat(4))
        }
    };
    Ok(IdentityCheck {
        which,
        r,
        n,
        holds: difference.is_zero(),
        difference,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Inequality {
    LaguerreTuran,
    Newton,
    TuranRefined,
    Eng,
}

impl Inequality {
    pub const ALL: [Inequality; 4] = [
        Inequality::LaguerreTuran,
        Inequality::Newton,
        Inequality::TuranRefined,
        Inequality::Eng,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Inequality::LaguerreTuran => "laguerre_turan",
            Inequality::Newton => "newton",
            Inequality::TuranRefined => "turan_refined",
            Inequality::Eng => "eng",
        }
    }

    fn check_range(self, r: usize, n: usize) -> Result<()> {
        let ok = match self {
            Inequality::LaguerreTuran | Inequality::TuranRefined => r >= 1,
            Inequality::Newton => r >= 1 && r < n,
            Inequality::Eng => r >= 2,
        };
        if !ok || n == 0 {
            return Err(Error::input(format!(
                "{} is not defined at r = {r}, n = {n}",
                self.name()
            )));
        }
        Ok(())
    }
}

impl FromStr for Inequality {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Inequality::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::input(format!("unknown inequality {s:?}")))
    }
}

/// The gap (nonnegative if the inequality holds) written in the e-basis.
pub fn inequality_gap_expr(which: Inequality, r: usize, n: usize) -> Result<EBasisExpr> {
    which.check_range(r, n)?;
    let y = |k: i64| -> ExactPoly {
        if k == 0 {
            ExactPoly::one(n)
        } else if k < 0 || k as usize > n {
            ExactPoly::zero(n)
        } else {
            ExactPoly::var(n, k as usize - 1)
        }
    };
    let ri = r as i64;
    let m2r = (0..=2 * ri).fold(ExactPoly::zero(n), |acc, k| {
        let t = &y(k) * &y(2 * ri - k);
        if (k + ri) % 2 == 0 {
            &acc + &t
        } else {
            &acc - &t
        }
    });
    let lt = &(&y(ri) * &y(ri)).scale(&rat(ri)) - &(&y(ri - 1) * &y(ri + 1)).scale(&rat(ri + 1));
    let q = match which {
        Inequality::LaguerreTuran => lt,
        Inequality::TuranRefined => &lt - &m2r,
        Inequality::Newton => {
            let b = |k: usize| Rational::from_integer(binomial(n as u64, k as u64));
            let c0 = (b(r) * b(r)).recip();
            let c1 = (b(r - 1) * b(r + 1)).recip();
            &(&y(ri) * &y(ri)).scale(&c0) - &(&y(ri - 1) * &y(ri + 1)).scale(&c1)
        }
        Inequality::Eng => {
            let a = frac(3 * (ri - 1), ri + 1);
            let c = frac(9 * (ri - 1), (ri + 1) * (ri + 1));
            let inner = &(&y(ri - 1) * &y(ri)).scale(&a) - &(&y(ri - 2) * &y(ri + 1));
            &(&inner * &inner) - &(&(&y(ri - 2) * &y(ri)) * &m2r).scale(&c)
        }
    };
    EBasisExpr::new(n, q)
}

/// The gap as an explicit polynomial in `x_1..x_n`.
pub fn inequality_gap(which: Inequality, r: usize, n: usize) -> Result<ExactPoly> {
    Ok(inequality_gap_expr(which, r, n)?.expand())
}

#[derive(Clone, Debug, Serialize)]
pub struct InequalityReport {
    pub which: Inequality,
    pub r: usize,
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    #[serde(serialize_with = "crate::ser::rational")]
    pub min_value: Rational,
    /// The first point with a negative gap, if any.
    #[serde(serialize_with = "crate::ser::opt_rationals")]
    pub witness_point: Option<Vec<Rational>>,
    pub exact_zero_gap: bool,
    pub nonnegative_on_samples: bool,
}

const SHARD: usize = 256;

/// Smallest value of `expr` over `samples` seeded grid points, with the
/// point; ties go to the earliest sample.
pub fn sample_minimum(
    expr: &EBasisExpr,
    samples: usize,
    seed: u64,
) -> Option<(Rational, Vec<Rational>)> {
    let n = expr.n();
    let shards = samples.div_ceil(SHARD);
    let per_shard: Vec<(Rational, usize, Vec<Rational>)> = (0..shards)
        .into_par_iter()
        .filter_map(|s| {
            let mut rng = stream_rng(seed, s as u64);
            let count = SHARD.min(samples - s * SHARD);
            let mut best: Option<(Rational, usize, Vec<Rational>)> = None;
            for i in 0..count {
                let x = grid_point(&mut rng, n, -10, 10, 100);
                let v = expr.evaluate_at(&x).expect("point length matches");
                if best.as_ref().is_none_or(|(b, _, _)| v < *b) {
                    best = Some((v, s * SHARD + i, x));
                }
            }
            best
        })
        .collect();
    per_shard
        .into_iter()
        .min_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)))
        .map(|(v, _, x)| (v, x))
}

/// Evaluates the gap at `samples` seeded points with coordinates in
/// `{-10, -9.99, ..., 10}`. Sampling can refute, never prove.
pub fn sample_inequality(
    which: Inequality,
    r: usize,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<InequalityReport> {
    let expr = inequality_gap_expr(which, r, n)?;
    let best = sample_minimum(&expr, samples, seed);
    let (min_value, witness) = match best {
        Some((v, x)) => (v, Some(x)),
        None => (Rational::zero(), None),
    };
    let negative = min_value.is_negative();
    Ok(InequalityReport {
        which,
        r,
        n,
        seed,
        samples,
        min_value,
        witness_point: if negative { witness } else { None },
        exact_zero_gap: expr.q().is_zero(),
        nonnegative_on_samples: !negative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(k: usize, n: usize) -> ExactPoly {
        elementary(k, n)
    }

    fn y(n: usize, i: usize) -> ExactPoly {
        ExactPoly::var(n, i - 1)
    }

    fn ones(n: usize) -> Vec<Rational> {
        vec![rat(1); n]
    }

    #[test]
    fn basis_examples() {
        let m22 = monomial_symmetric(&Partition::new(vec![2, 2]).unwrap(), 2);
        assert_eq!(
            m22,
            &ExactPoly::var(2, 0).pow(2) * &ExactPoly::var(2, 1).pow(2)
        );
        assert!(monomial_symmetric(&Partition::new(vec![2, 2, 2]).unwrap(), 2).is_zero());
        let x = |i| ExactPoly::var(3, i);
        assert_eq!(
            e(2, 3),
            &(&(&x(0) * &x(1)) + &(&x(0) * &x(2))) + &(&x(1) * &x(2))
        );
        assert_eq!(e(0, 3), ExactPoly::one(3));
        assert!(e(4, 3).is_zero());
        assert_eq!(
            basis_poly(&SymBasis::Power(2), 3),
            monomial_symmetric(&Partition::new(vec![2]).unwrap(), 3)
        );
    }

    #[test]
    fn partitions_are_validated() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::all_of(4).len(), 5);
        assert_eq!(
            Partition::from_multiplicities(&[(1, 2), (2, 1)]).parts(),
            &[2, 1, 1]
        );
    }

    #[test]
    fn e_basis_examples() {
        let q = to_e_basis(&power_sum(2, 3), 3).unwrap();
        assert_eq!(*q.q(), &y(3, 1).pow(2) - &y(3, 2).scale(&rat(2)));
        assert_eq!(q.expand(), power_sum(2, 3));

        let q = to_e_basis(&e(3, 4), 4).unwrap();
        assert_eq!(*q.q(), y(4, 3));

        let m21 = monomial_symmetric(&Partition::new(vec![2, 1]).unwrap(), 3);
        let q = to_e_basis(&m21, 3).unwrap();
        assert_eq!(*q.q(), &(&y(3, 1) * &y(3, 2)) - &y(3, 3).scale(&rat(3)));
        assert_eq!(q.expand(), m21);
    }

    #[test]
    fn non_symmetric_input_names_transposition() {
        let p = &ExactPoly::var(3, 0) + &ExactPoly::var(3, 1);
        let err = to_e_basis(&p, 3).unwrap_err().to_string();
        assert!(err.contains("(x2 x3)"), "{err}");
    }

    #[test]
    fn lift_examples() {
        let want = &(&e(2, 4) * &e(2, 4)).scale(&rat(4)) - &(&e(1, 4) * &e(3, 4)).scale(&rat(6));
        assert_eq!(lift(&power_sum(2, 3), 3, 4).unwrap(), want);

        let m2 = power_sum(2, 2);
        let lifted = lift(&m2, 2, 3).unwrap();
        let m22 = monomial_symmetric(&Partition::new(vec![2, 2]).unwrap(), 3);
        let m211 = monomial_symmetric(&Partition::new(vec![2, 1, 1]).unwrap(), 3);
        assert_eq!(lifted, &m22.scale(&rat(4)) + &m211.scale(&rat(2)));
        let e3 = |k| e(k, 3);
        assert_eq!(
            lifted,
            &(&e3(2) * &e3(2)).scale(&rat(4)) - &(&e3(1) * &e3(3)).scale(&rat(6))
        );

        assert_eq!(lift(&ExactPoly::one(3), 3, 4).unwrap(), ExactPoly::one(4));
    }

    #[test]
    fn identity_examples() {
        let c = verify_identity(Identity::Jensen, 1, 2).unwrap();
        assert!(c.holds && c.difference.is_zero());
        assert!(
            verify_identity(Identity::DoubledElementary, 2, 2)
                .unwrap()
                .holds
        );
        assert!(verify_identity(Identity::TsosConstant, 2, 3).unwrap().holds);
        assert!(verify_identity(Identity::TsosConstant, 1, 3).is_err());
    }

    #[test]
    fn boost_holds_at_r_one() {
        assert!(verify_identity(Identity::Boost, 1, 3).unwrap().holds);
        assert!(verify_identity(Identity::Boost, 2, 3).unwrap().holds);
    }

    #[test]
    fn tsos_constant_by_independent_expansion() {
        // p_2 p_2 - p_4 = 2 m_22, and (1/2) sum_i x_i^2 p_2(x without x_i) = (p_2^2 - p_4)/2.
        let p2 = power_sum(2, 3);
        let lhs = (&(&p2 * &p2) - &power_sum(4, 3)).scale(&frac(1, 2));
        assert_eq!(
            lhs,
            monomial_symmetric(&Partition::new(vec![2, 2]).unwrap(), 3)
        );
    }

    #[test]
    fn inequality_examples() {
        assert!(inequality_gap(Inequality::TuranRefined, 1, 5)
            .unwrap()
            .is_zero());
        let eng = inequality_gap(Inequality::Eng, 2, 3).unwrap();
        assert_eq!(eng.evaluate(&ones(3)).unwrap(), rat(55));
        let lt = inequality_gap(Inequality::LaguerreTuran, 2, 4).unwrap();
        assert_eq!(lt.evaluate(&ones(4)).unwrap(), rat(24));
        assert!(inequality_gap(Inequality::Newton, 3, 3).is_err());
        assert!(inequality_gap(Inequality::Eng, 1, 3).is_err());
    }

    #[test]
    fn eng_direct_route() {
        // (a e1 e2 - e0 e3)^2 - C e0 e2 m_22 with a = C = 1 at r = 2.
        let n = 4;
        let inner = &(&e(1, n) * &e(2, n)) - &e(3, n);
        let m22 = monomial_symmetric(&Partition::new(vec![2, 2]).unwrap(), n);
        let want = &(&inner * &inner) - &(&e(2, n) * &m22);
        assert_eq!(inequality_gap(Inequality::Eng, 2, n).unwrap(), want);
    }

    #[test]
    fn e_values_match_polynomial_evaluation() {
        let x = vec![frac(1, 2), rat(-3), frac(7, 5), rat(2), frac(-1, 9)];
        let ev = elementary_values(&x, 6);
        for (k, v) in ev.iter().enumerate() {
            assert_eq!(*v, e(k, 5).evaluate(&x).unwrap(), "k={k}");
        }
        for which in [
            Inequality::TuranRefined,
            Inequality::Eng,
            Inequality::Newton,
        ] {
            let expr = inequality_gap_expr(which, 2, 5).unwrap();
            assert_eq!(
                expr.evaluate_at(&x).unwrap(),
                expr.expand().evaluate(&x).unwrap()
            );
        }
    }

    #[test]
    fn sampling_report_is_deterministic() {
        let a = sample_inequality(Inequality::TuranRefined, 2, 4, 600, 9).unwrap();
        let b = sample_inequality(Inequality::TuranRefined, 2, 4, 600, 9).unwrap();
        assert_eq!(a.min_value, b.min_value);
        assert!(a.nonnegative_on_samples && a.witness_point.is_none());
        assert!(!a.exact_zero_gap);
    }

    #[test]
    fn sampling_finds_negative_values() {
        let gap = inequality_gap_expr(Inequality::LaguerreTuran, 1, 3).unwrap();
        let reversed = EBasisExpr::new(3, -gap.q()).unwrap();
        let (v, x) = sample_minimum(&reversed, 300, 5).unwrap();
        assert!(v.is_negative());
        assert_eq!(reversed.evaluate_at(&x).unwrap(), v);
    }
}
