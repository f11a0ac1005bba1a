//! Dense univariate polynomials over the rationals and exact real-root
//! analysis: Sturm chains, square-free decomposition and root isolation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::Rational;

/// Coefficients in ascending degree; no trailing zeros (empty = zero polynomial).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UnivariateExact {
    coeffs: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RealRootSummary {
    /// Distinct real roots.
    pub count_real: usize,
    pub is_real_rooted: bool,
}

/// An isolated real root: either an exact rational or a rational interval
/// `(lo, hi)` containing exactly one root of the square-free `poly`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraicReal {
    Rational(Rational),
    Isolated {
        poly: UnivariateExact,
        lo: Rational,
        hi: Rational,
    },
}

impl UnivariateExact {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariateExact { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        UnivariateExact::new(
            c.iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        UnivariateExact { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UnivariateExact::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UnivariateExact::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        UnivariateExact::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.to_f64().iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.to_f64()
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UnivariateExact::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn derivative(&self) -> Self {
        UnivariateExact::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => UnivariateExact::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UnivariateExact) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UnivariateExact::zero(), self.clone());
        }
        let mut quo = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quo.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        (UnivariateExact::new(quo), UnivariateExact::new(rem))
    }

    fn exact_div(&self, d: &UnivariateExact) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &UnivariateExact) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `f / gcd(f, f')`, monic.
    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }

    /// Yun's square-free factorization: monic pairwise coprime square-free
    /// factors `(g_i, i)` with `f = lc * prod g_i^i`. Trivial factors are omitted.
    pub fn square_free_factors(&self) -> Vec<(UnivariateExact, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.exact_div(&a0);
        let c = fp.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let b_next = b.exact_div(&a);
            let c_next = d.exact_div(&a);
            d = &c_next - &b_next.derivative();
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.monic(), i));
            }
            b = b_next;
            i += 1;
        }
        out
    }

    /// `t -> f(t + c)`.
    pub fn taylor_shift(&self, c: &Rational) -> Self {
        let shift = UnivariateExact::new(vec![c.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(UnivariateExact::zero(), |acc, a| {
                &(&acc * &shift) + &UnivariateExact::constant(a.clone())
            })
    }

    /// Positive multiple with coprime integer coefficients.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    pub fn sturm_chain(&self) -> Vec<UnivariateExact> {
        let mut seq = vec![self.clone()];
        let mut next = self.derivative();
        while !next.is_zero() {
            // Positive rescaling keeps every sign pattern intact.
            let lc = next.leading().unwrap().abs();
            next = next.scale(&lc.recip());
            seq.push(next);
            let k = seq.len();
            next = -&seq[k - 2].div_rem(&seq[k - 1]).1;
        }
        seq
    }

    /// Number of distinct real roots, for any nonzero polynomial.
    pub fn count_distinct_real_roots(&self) -> usize {
        let chain = self.square_free_part().sturm_chain();
        variations_at_neg_inf(&chain) - variations_at_pos_inf(&chain)
    }

    /// Distinct roots of `self` in the open interval `(a, b)`; neither
    /// endpoint may be a root.
    pub fn count_roots_between(&self, a: &Rational, b: &Rational) -> usize {
        let chain = self.square_free_part().sturm_chain();
        count_between(&chain, a, b)
    }

    /// Distinct roots strictly below `a` (which need not be a non-root).
    pub fn count_roots_below(&self, a: &Rational) -> usize {
        let g = self.square_free_part();
        let chain = g.sturm_chain();
        let below_neg_inf = variations_at_neg_inf(&chain);
        if g.eval(a).is_zero() {
            // Shift the cut just below `a` where no other root lives.
            let eps = isolation_gap(&g, a);
            below_neg_inf - variations_at(&chain, &(a - eps))
        } else {
            below_neg_inf - variations_at(&chain, a)
        }
    }

    /// Sturm decision of real-rootedness. Rejects the zero polynomial.
    pub fn real_roots_exact(&self) -> Result<RealRootSummary> {
        if self.is_zero() {
            return Err(Error::input(
                "real-rootedness of the zero polynomial is undefined; test is_zero first",
            ));
        }
        let g = self.square_free_part();
        let chain = g.sturm_chain();
        let count = variations_at_neg_inf(&chain) - variations_at_pos_inf(&chain);
        Ok(RealRootSummary {
            count_real: count,
            is_real_rooted: count == g.degree().unwrap(),
        })
    }

    /// Isolates every distinct real root (ascending).
    pub fn isolate_real_roots(&self) -> Vec<AlgebraicReal> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let g = self.square_free_part();
        let chain = g.sturm_chain();
        let bound = cauchy_bound(&g);
        let mut found: Vec<AlgebraicReal> = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let n = count_between(&chain, &lo, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 {
                found.push(AlgebraicReal::Isolated {
                    poly: g.clone(),
                    lo,
                    hi,
                });
                continue;
            }
            let mid = (&lo + &hi) / Rational::from_integer(2.into());
            if g.eval(&mid).is_zero() {
                let eps = isolation_gap(&g, &mid);
                stack.push((lo, &mid - &eps));
                stack.push((&mid + &eps, hi));
                found.push(AlgebraicReal::Rational(mid));
            } else {
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
        let mut roots: Vec<AlgebraicReal> =
            found.into_iter().map(|r| r.identify_rational()).collect();
        roots.sort_by(|a, b| a.lower().cmp(b.lower()));
        roots
    }

    /// `b^2 - 4ac` for a quadratic.
    pub fn quadratic_discriminant(&self) -> Option<Rational> {
        if self.degree() != Some(2) {
            return None;
        }
        let c = &self.coeffs;
        Some(&c[1] * &c[1] - Rational::from_integer(4.into()) * &c[2] * &c[0])
    }
}

fn sign_of(r: &Rational) -> i8 {
    match r.cmp(&Rational::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

fn count_changes<I: IntoIterator<Item = i8>>(signs: I) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn variations_at(chain: &[UnivariateExact], x: &Rational) -> usize {
    count_changes(chain.iter().map(|p| sign_of(&p.eval(x))))
}

fn variations_at_pos_inf(chain: &[UnivariateExact]) -> usize {
    count_changes(chain.iter().map(|p| sign_of(p.leading().unwrap())))
}

fn variations_at_neg_inf(chain: &[UnivariateExact]) -> usize {
    count_changes(chain.iter().map(|p| {
        let s = sign_of(p.leading().unwrap());
        if p.degree().unwrap() % 2 == 1 {
            -s
        } else {
            s
        }
    }))
}

fn count_between(chain: &[UnivariateExact], a: &Rational, b: &Rational) -> usize {
    variations_at(chain, a).saturating_sub(variations_at(chain, b))
}

/// Strict upper bound on the absolute value of every root.
fn cauchy_bound(g: &UnivariateExact) -> Rational {
    let lc = g.leading().unwrap().abs();
    let m = g.coeffs[..g.coeffs.len() - 1]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    // Round up to a power of two so bisection midpoints stay dyadic.
    let m = m + Rational::one();
    let mut b = Rational::one();
    while b <= m {
        b *= Rational::from_integer(2.into());
    }
    b
}

/// A positive `eps` such that the square-free `g` has no root in
/// `[x - eps, x + eps]` other than possibly `x` itself.
fn isolation_gap(g: &UnivariateExact, x: &Rational) -> Rational {
    let chain = g.sturm_chain();
    let root_here = g.eval(x).is_zero();
    let mut eps = Rational::one();
    loop {
        let a = x - &eps;
        let b = x + &eps;
        if !g.eval(&a).is_zero() && !g.eval(&b).is_zero() {
            let n = count_between(&chain, &a, &b);
            if n == usize::from(root_here) {
                return eps;
            }
        }
        eps /= Rational::from_integer(2.into());
    }
}

/// Rational with the smallest denominator in `[lo, hi]` (`lo <= hi`).
pub fn simplest_rational_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if lo.is_positive() {
        simplest_positive(lo, hi)
    } else if hi.is_negative() {
        -simplest_positive(&-hi, &-lo)
    } else {
        Rational::zero()
    }
}

fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if fl < hi.floor() || hi.is_integer() {
        return fl + Rational::one();
    }
    let inner = simplest_positive(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

impl AlgebraicReal {
    fn lower(&self) -> &Rational {
        match self {
            AlgebraicReal::Rational(r) => r,
            AlgebraicReal::Isolated { lo, .. } => lo,
        }
    }

    /// Shrinks an isolating interval until it is narrower than `width`
    /// (or collapses onto an exact rational root).
    pub fn refine(self, width: &Rational) -> AlgebraicReal {
        let AlgebraicReal::Isolated {
            poly,
            mut lo,
            mut hi,
        } = self
        else {
            return self;
        };
        let two = Rational::from_integer(2.into());
        let s_lo = sign_of(&poly.eval(&lo));
        while &(&hi - &lo) >= width {
            let mid = (&lo + &hi) / &two;
            let s = sign_of(&poly.eval(&mid));
            if s == 0 {
                return AlgebraicReal::Rational(mid);
            }
            if s == s_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        AlgebraicReal::Isolated { poly, lo, hi }
    }

    /// A rational root `p/q` of the primitive integer form has `q | lc`, and
    /// two such rationals are at least `1/lc^2` apart. Once the interval is
    /// narrower than that, the simplest rational inside is the only candidate.
    fn identify_rational(self) -> AlgebraicReal {
        let AlgebraicReal::Isolated { poly, .. } = &self else {
            return self;
        };
        let ints = poly.primitive_integer();
        let lc = ints.last().unwrap().abs();
        let width = Rational::new(BigInt::one(), &lc * &lc);
        match self.refine(&width) {
            AlgebraicReal::Isolated { poly, lo, hi } => {
                let s = simplest_rational_between(&lo, &hi);
                if poly.eval(&s).is_zero() {
                    AlgebraicReal::Rational(s)
                } else {
                    AlgebraicReal::Isolated { poly, lo, hi }
                }
            }
            exact => exact,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            AlgebraicReal::Rational(r) => Some(r),
            AlgebraicReal::Isolated { .. } => None,
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            AlgebraicReal::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            AlgebraicReal::Isolated { lo, hi, .. } => {
                let w = (hi - lo).abs();
                let scale = lo.abs().max(hi.abs()) + Rational::one();
                let target = scale * Rational::new(BigInt::one(), BigInt::one() << 60);
                let refined = if w > target {
                    self.clone().refine(&target)
                } else {
                    self.clone()
                };
                match refined {
                    AlgebraicReal::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
                    AlgebraicReal::Isolated { lo, hi, .. } => ((lo + hi)
                        / Rational::from_integer(2.into()))
                    .to_f64()
                    .unwrap_or(f64::NAN),
                }
            }
        }
    }

    /// Exact sign. Isolated roots are irrational, hence nonzero.
    pub fn signum(&self) -> i8 {
        match self {
            AlgebraicReal::Rational(r) => sign_of(r),
            AlgebraicReal::Isolated { lo, hi, .. } => {
                if !lo.is_negative() {
                    1
                } else if !hi.is_positive() {
                    -1
                } else {
                    // Zero is not a root of `poly` here, so the side is decided by sign.
                    let AlgebraicReal::Isolated { poly, lo, .. } = self else {
                        unreachable!()
                    };
                    let s0 = sign_of(&poly.eval(&Rational::zero()));
                    let slo = sign_of(&poly.eval(lo));
                    if s0 == slo {
                        1
                    } else {
                        -1
                    }
                }
            }
        }
    }

    /// Whether this value is a root of `f`.
    pub fn is_root_of(&self, f: &UnivariateExact) -> bool {
        match self {
            AlgebraicReal::Rational(r) => f.eval(r).is_zero(),
            AlgebraicReal::Isolated { poly, lo, hi } => {
                // `gcd(poly, f)` is square-free; it has our root iff it changes sign.
                let g = poly.gcd(f);
                g.degree().unwrap_or(0) > 0 && sign_of(&g.eval(lo)) != sign_of(&g.eval(hi))
            }
        }
    }
}

/// `{"exact": "p/q"}` or `{"approx": f, "lo": "p/q", "hi": "p/q"}`.
impl Serialize for AlgebraicReal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        match self {
            AlgebraicReal::Rational(r) => m.serialize_entry("exact", &r.to_string())?,
            AlgebraicReal::Isolated { lo, hi, .. } => {
                m.serialize_entry("approx", &self.approx())?;
                m.serialize_entry("lo", &lo.to_string())?;
                m.serialize_entry("hi", &hi.to_string())?;
            }
        }
        m.end()
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicReal::Rational(r) => write!(f, "{r}"),
            AlgebraicReal::Isolated { lo, hi, .. } => {
                write!(f, "~{} in ({lo}, {hi})", self.approx())
            }
        }
    }
}

impl fmt::Display for UnivariateExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "t")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a UnivariateExact> for &'a UnivariateExact {
    type Output = UnivariateExact;
    fn add(self, rhs: &UnivariateExact) -> UnivariateExact {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = Rational::zero();
        UnivariateExact::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl<'a> Sub<&'a UnivariateExact> for &'a UnivariateExact {
    type Output = UnivariateExact;
    fn sub(self, rhs: &UnivariateExact) -> UnivariateExact {
        self + &-rhs
    }
}

impl<'a> Mul<&'a UnivariateExact> for &'a UnivariateExact {
    type Output = UnivariateExact;
    fn mul(self, rhs: &UnivariateExact) -> UnivariateExact {
        if self.is_zero() || rhs.is_zero() {
            return UnivariateExact::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariateExact::new(out)
    }
}

impl Neg for &UnivariateExact {
    type Output = UnivariateExact;
    fn neg(self) -> UnivariateExact {
        UnivariateExact::new(self.coeffs.iter().map(|c| -c).collect())
    }
}
