//! `t -> P(x0 + t v)` over the integers after clearing denominators.
//!
//! With `D` the common denominator of the line and `L` that of the
//! coefficients, `L D^m P(x0 + t v) = Σ (L c) D^(m-k) Π (a_i + t b_i)^(e_i)`
//! where `a = D x0`, `b = D v`, `m` the total degree and `k` the degree of
//! each term. The sum is formed in checked `i128` and redone in `BigInt`
//! on overflow.

use std::collections::BTreeMap;

use num::{BigInt, Integer, One, ToPrimitive, Zero};

use super::Monomial;
use crate::Rational;

trait Ring: Clone {
    fn from_big(b: &BigInt) -> Option<Self>;
    fn zero() -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl Ring for i128 {
    fn from_big(b: &BigInt) -> Option<Self> {
        b.to_i128()
    }
    fn zero() -> Self {
        0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Ring for BigInt {
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

fn mul_poly<R: Ring>(p: &[R], q: &[R]) -> Option<Vec<R>> {
    let mut out = vec![R::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] = out[i + j].add(&a.mul(b)?)?;
        }
    }
    Some(out)
}

struct Scaled<'a> {
    /// `(L c) D^(m-k)` per term.
    terms: Vec<(&'a Monomial, BigInt)>,
    lines: Vec<(BigInt, BigInt)>,
    degree: usize,
}

fn expand<R: Ring>(s: &Scaled) -> Option<Vec<R>> {
    let lines: Vec<[R; 2]> = s
        .lines
        .iter()
        .map(|(a, b)| Some([R::from_big(a)?, R::from_big(b)?]))
        .collect::<Option<_>>()?;
    let one = R::from_big(&BigInt::one())?;
    let mut powers: Vec<Vec<Vec<R>>> = lines
        .iter()
        .map(|l| vec![vec![one.clone()], l.to_vec()])
        .collect();
    let mut out = vec![R::zero(); s.degree + 1];
    for (m, c) in &s.terms {
        let mut t = vec![R::from_big(c)?];
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let pw = &mut powers[i];
            while pw.len() <= e as usize {
                let next = mul_poly(pw.last().unwrap(), &lines[i])?;
                pw.push(next);
            }
            t = mul_poly(&t, &pw[e as usize])?;
        }
        for (k, c) in t.into_iter().enumerate() {
            out[k] = out[k].add(&c)?;
        }
    }
    Some(out)
}

/// Coefficients of `t -> P(x0 + t v)`, lowest degree first.
pub(super) fn restrict(
    terms: &BTreeMap<Monomial, Rational>,
    x0: &[Rational],
    v: &[Rational],
) -> Vec<Rational> {
    let Some(degree) = terms.keys().map(|m| m.degree() as usize).max() else {
        return Vec::new();
    };
    let d = x0
        .iter()
        .chain(v)
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let l = terms
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let d_pow: Vec<BigInt> = std::iter::successors(Some(BigInt::one()), |p| Some(p * &d))
        .take(degree + 1)
        .collect();
    let scaled = Scaled {
        terms: terms
            .iter()
            .map(|(m, c)| {
                (
                    m,
                    c.numer() * (&l / c.denom()) * &d_pow[degree - m.degree() as usize],
                )
            })
            .collect(),
        lines: x0
            .iter()
            .zip(v)
            .map(|(a, b)| ((a * &d).to_integer(), (b * &d).to_integer()))
            .collect(),
        degree,
    };
    let ints: Vec<BigInt> = match expand::<i128>(&scaled) {
        Some(v) => v.into_iter().map(Ring::into_big).collect(),
        None => expand::<BigInt>(&scaled).expect("BigInt arithmetic does not overflow"),
    };
    let denom = l * &d_pow[degree];
    ints.into_iter()
        .map(|c| Rational::new(c, denom.clone()))
        .collect()
}
