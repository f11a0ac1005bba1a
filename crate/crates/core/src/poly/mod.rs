//! Sparse multivariate polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`] under graded
//! lexicographic order, with zero coefficients never stored, so two
//! polynomials are equal exactly when their term maps are equal.

pub(crate) mod json;
pub mod numeric;
mod restrict;
pub mod univariate;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex64;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Rational;

pub use json::PolyJson;
pub use univariate::{simplest_rational_between, AlgebraicReal, RealRootSummary, UnivariateExact};

/// Exponent vector of a single term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    /// `x_i` (0-based index).
    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Monomial(e)
    }

    /// Multiaffine monomial with the variables of `mask` (bit i = x_i).
    pub fn from_mask(arity: usize, mask: u64) -> Self {
        Monomial((0..arity).map(|i| ((mask >> i) & 1) as u32).collect())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_multiaffine(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Bitmask of the variables present; only meaningful for multiaffine monomials.
    pub fn mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPoly {
    arity: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl ExactPoly {
    pub fn zero(arity: usize) -> Self {
        ExactPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = ExactPoly::zero(arity);
        p.add_term(Monomial::one(arity), c);
        p
    }

    pub fn one(arity: usize) -> Self {
        ExactPoly::constant(arity, Rational::one())
    }

    pub fn var(arity: usize, i: usize) -> Self {
        assert!(
            i < arity,
            "variable index {i} out of range for arity {arity}"
        );
        let mut p = ExactPoly::zero(arity);
        p.add_term(Monomial::var(arity, i), Rational::one());
        p
    }

    pub fn monomial(mono: Monomial, c: Rational) -> Self {
        let mut p = ExactPoly::zero(mono.arity());
        p.add_term(mono, c);
        p
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, summing repeats.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = ExactPoly::zero(arity);
        for (exps, c) in terms {
            if exps.len() != arity {
                return Err(Error::input(format!(
                    "exponent vector of length {} in a polynomial of arity {arity}",
                    exps.len()
                )));
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    /// Sum of the monomials indexed by bitmasks, each with coefficient one.
    pub fn from_masks<I: IntoIterator<Item = u64>>(arity: usize, masks: I) -> Self {
        let mut p = ExactPoly::zero(arity);
        for m in masks {
            p.add_term(Monomial::from_mask(arity, m), Rational::one());
        }
        p
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        debug_assert_eq!(mono.arity(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order (leading term first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// Monomials with nonzero coefficient.
    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().rev().cloned().collect()
    }

    /// Support of a multiaffine polynomial as sorted bitmasks.
    pub fn support_masks(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.terms.keys().map(Monomial::mask).collect();
        v.sort_unstable();
        v
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_multiaffine(&self) -> bool {
        self.terms.keys().all(Monomial::is_multiaffine)
    }

    fn check_arity(&self, other: &ExactPoly) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::input(format!(
                "arity mismatch: {} vs {}",
                self.arity, other.arity
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &ExactPoly) -> Result<ExactPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &ExactPoly) -> Result<ExactPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &ExactPoly) -> Result<ExactPoly> {
        self.check_arity(other)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                acc.entry(ma.mul(mb)).and_modify(|v| *v += &c).or_insert(c);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(ExactPoly {
            arity: self.arity,
            terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> ExactPoly {
        if c.is_zero() {
            return ExactPoly::zero(self.arity);
        }
        ExactPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> ExactPoly {
        let mut base = self.clone();
        let mut acc = ExactPoly::one(self.arity);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn check_point_len(&self, len: usize) -> Result<()> {
        if len != self.arity {
            return Err(Error::input(format!(
                "point of length {len} for a polynomial of arity {}",
                self.arity
            )));
        }
        Ok(())
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        self.check_point_len(point.len())?;
        let mut powers: Vec<Vec<Rational>> = point
            .iter()
            .map(|x| vec![Rational::one(), x.clone()])
            .collect();
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &point[i];
                    pw.push(next);
                }
                t *= &pw[e as usize];
            }
            sum += t;
        }
        Ok(sum)
    }

    pub fn evaluate_f64(&self, point: &[f64]) -> Result<f64> {
        self.check_point_len(point.len())?;
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point)
                    .fold(c.to_f64().unwrap_or(f64::NAN), |acc, (&e, &x)| {
                        acc * x.powi(e as i32)
                    })
            })
            .sum())
    }

    pub fn evaluate_complex(&self, point: &[Complex64]) -> Result<Complex64> {
        self.check_point_len(point.len())?;
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                let c = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
                m.0.iter()
                    .zip(point)
                    .fold(c, |acc, (&e, &x)| acc * x.powi(e as i32))
            })
            .sum())
    }

    /// The univariate polynomial `t -> P(x0 + t v)`.
    pub fn restrict_line(&self, x0: &[Rational], v: &[Rational]) -> Result<UnivariateExact> {
        self.check_point_len(x0.len())?;
        self.check_point_len(v.len())?;
        Ok(UnivariateExact::new(restrict::restrict(&self.terms, x0, v)))
    }

    /// Composition `P(q_1, ..., q_n)` where every `q_i` shares one target arity.
    pub fn substitute(&self, assignment: &[ExactPoly]) -> Result<ExactPoly> {
        if assignment.len() != self.arity {
            return Err(Error::input(format!(
                "substitution supplies {} polynomials for arity {}",
                assignment.len(),
                self.arity
            )));
        }
        let target = match assignment.first() {
            Some(q) => q.arity,
            None => 0,
        };
        if assignment.iter().any(|q| q.arity != target) {
            return Err(Error::input("substituted polynomials disagree on arity"));
        }
        let mut powers: Vec<Vec<ExactPoly>> = assignment
            .iter()
            .map(|q| vec![ExactPoly::one(target), q.clone()])
            .collect();
        let mut out = ExactPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = ExactPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &assignment[i];
                    pw.push(next);
                }
                t = &t * &pw[e as usize];
            }
            for (mm, cc) in t.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<ExactPoly> {
        if perm.len() != self.arity {
            return Err(Error::input("permutation length differs from arity"));
        }
        let mut seen = vec![false; self.arity];
        for &p in perm {
            if p >= self.arity || std::mem::replace(&mut seen[p], true) {
                return Err(Error::input("not a permutation"));
            }
        }
        let mut out = ExactPoly::zero(self.arity);
        for (m, c) in &self.terms {
            let mut e = vec![0; self.arity];
            for (i, &k) in m.0.iter().enumerate() {
                e[perm[i]] = k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Same polynomial viewed in more variables (new ones appended, unused).
    pub fn extend_arity(&self, arity: usize) -> Result<ExactPoly> {
        if arity < self.arity {
            return Err(Error::input("cannot shrink arity"));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.resize(arity, 0);
                (Monomial(e), c.clone())
            })
            .collect();
        Ok(ExactPoly { arity, terms })
    }

    /// True if every coefficient is strictly positive.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }

    /// Least common multiple of coefficient denominators.
    pub fn denominator_lcm(&self) -> num::BigInt {
        use num::Integer;
        self.terms
            .values()
            .fold(num::BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let is_const = m.degree() == 0;
            if !abs.is_one() || is_const {
                write!(f, "{abs}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a ExactPoly> for &'a ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl<'a> Sub<&'a ExactPoly> for &'a ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl<'a> Mul<&'a ExactPoly> for &'a ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        self.scale(&-Rational::one())
    }
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `n / d`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
