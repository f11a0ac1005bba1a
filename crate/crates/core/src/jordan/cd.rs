use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Rational, Result};

/// The composition algebras R, C, H, O as Cayley–Dickson levels 0..=3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Algebra {
    R,
    C,
    H,
    O,
}

impl Algebra {
    pub const ALL: [Algebra; 4] = [Algebra::R, Algebra::C, Algebra::H, Algebra::O];

    pub fn level(self) -> u32 {
        self as u32
    }

    pub fn dim(self) -> usize {
        1 << self.level()
    }

    pub fn from_level(level: u32) -> Result<Self> {
        Algebra::ALL
            .get(level as usize)
            .copied()
            .ok_or_else(|| Error::input(format!("no composition algebra at level {level}")))
    }

    pub fn from_dim(dim: usize) -> Result<Self> {
        match dim {
            1 => Ok(Algebra::R),
            2 => Ok(Algebra::C),
            4 => Ok(Algebra::H),
            8 => Ok(Algebra::O),
            _ => Err(Error::input(format!(
                "{dim} coordinates do not form a composition algebra element"
            ))),
        }
    }
}

impl std::str::FromStr for Algebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" => Ok(Algebra::R),
            "C" => Ok(Algebra::C),
            "H" => Ok(Algebra::H),
            "O" => Ok(Algebra::O),
            _ => Err(Error::input(format!(
                "unknown algebra {s:?} (expected R, C, H or O)"
            ))),
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// An element of R, C, H or O with exact rational coordinates in the basis
/// `1, e1, ..., e_{dim-1}` of the doubling construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CDElement {
    coords: Vec<Rational>,
}

impl CDElement {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        Algebra::from_dim(coords.len())?;
        Ok(CDElement { coords })
    }

    pub fn zero(alg: Algebra) -> Self {
        CDElement {
            coords: vec![Rational::zero(); alg.dim()],
        }
    }

    pub fn real(alg: Algebra, r: Rational) -> Self {
        let mut c = Self::zero(alg);
        c.coords[0] = r;
        c
    }

    pub fn one(alg: Algebra) -> Self {
        Self::real(alg, Rational::one())
    }

    /// The basis unit `e_i` (`e_0 = 1`).
    pub fn unit(alg: Algebra, i: usize) -> Self {
        let mut c = Self::zero(alg);
        c.coords[i] = Rational::one();
        c
    }

    pub fn algebra(&self) -> Algebra {
        Algebra::from_dim(self.coords.len()).expect("checked at construction")
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn re(&self) -> &Rational {
        &self.coords[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn conj(&self) -> Self {
        let mut coords = self.coords.clone();
        for c in &mut coords[1..] {
            *c = -c.clone();
        }
        CDElement { coords }
    }

    /// `n(x) = x x̄ = Σ coords²`.
    pub fn norm(&self) -> Rational {
        self.coords.iter().map(|c| c * c).sum()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        CDElement {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::input("zero has no inverse"));
        }
        Ok(self.conj().scale(&n.recip()))
    }

    /// Keeps the first `alg.dim()` coordinates (the image in a smaller algebra).
    pub fn truncate(&self, alg: Algebra) -> Result<Self> {
        if alg.dim() > self.coords.len() {
            return Err(Error::input(format!(
                "cannot truncate {} to {alg}",
                self.algebra()
            )));
        }
        Ok(CDElement {
            coords: self.coords[..alg.dim()].to_vec(),
        })
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.coords.len(),
            other.coords.len(),
            "operands from different algebras"
        );
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.coords.len() != other.coords.len() {
            return Err(Error::input(format!(
                "cannot multiply elements of {} and {}",
                self.algebra(),
                other.algebra()
            )));
        }
        Ok(CDElement {
            coords: cd_mul(&self.coords, &other.coords),
        })
    }
}

fn conj_slice(a: &[Rational]) -> Vec<Rational> {
    let mut v = a.to_vec();
    for c in &mut v[1..] {
        *c = -c.clone();
    }
    v
}

fn add_slices(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_slices(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `(a, b)(c, d) = (ac - d̄b, da + bc̄)`.
fn cd_mul(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let mut out = sub_slices(&cd_mul(a, c), &cd_mul(&conj_slice(d), b));
    out.extend(add_slices(&cd_mul(d, a), &cd_mul(b, &conj_slice(c))));
    out
}

impl Add for &CDElement {
    type Output = CDElement;
    fn add(self, o: &CDElement) -> CDElement {
        self.check_same(o);
        CDElement {
            coords: add_slices(&self.coords, &o.coords),
        }
    }
}

impl Sub for &CDElement {
    type Output = CDElement;
    fn sub(self, o: &CDElement) -> CDElement {
        self.check_same(o);
        CDElement {
            coords: sub_slices(&self.coords, &o.coords),
        }
    }
}

impl Mul for &CDElement {
    type Output = CDElement;
    fn mul(self, o: &CDElement) -> CDElement {
        self.check_same(o);
        CDElement {
            coords: cd_mul(&self.coords, &o.coords),
        }
    }
}

impl Neg for &CDElement {
    type Output = CDElement;
    fn neg(self) -> CDElement {
        CDElement {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for CDElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "e{i}")?,
                (_, false) => write!(f, "{mag}e{i}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn e(alg: Algebra, i: usize) -> CDElement {
        CDElement::unit(alg, i)
    }

    #[test]
    fn quaternion_relations() {
        let (i, j, k) = (e(Algebra::H, 1), e(Algebra::H, 2), e(Algebra::H, 3));
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&i * &i, CDElement::real(Algebra::H, rat(-1)));
    }

    #[test]
    fn octonions_are_not_associative() {
        let o = |i| e(Algebra::O, i);
        let left = &(&o(1) * &o(2)) * &o(4);
        let right = &o(1) * &(&o(2) * &o(4));
        assert_ne!(left, right);
        assert_eq!(left, -&right);
    }

    #[test]
    fn complex_level_is_commutative() {
        let a = CDElement::new(vec![rat(1), rat(2)]).unwrap();
        let b = CDElement::new(vec![rat(-3), rat(5)]).unwrap();
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a * &b, CDElement::new(vec![rat(-13), rat(-1)]).unwrap());
    }

    #[test]
    fn inverse_and_errors() {
        let a = CDElement::new((1..=8).map(rat).collect()).unwrap();
        assert_eq!(&a * &a.inverse().unwrap(), CDElement::one(Algebra::O));
        assert!(CDElement::zero(Algebra::H).inverse().is_err());
        assert!(CDElement::new(vec![rat(1); 3]).is_err());
        assert!(CDElement::one(Algebra::C)
            .try_mul(&CDElement::one(Algebra::H))
            .is_err());
    }

    #[test]
    fn display() {
        let a = CDElement::new(vec![rat(1), rat(0), rat(-2), rat(1)]).unwrap();
        assert_eq!(a.to_string(), "1 - 2e2 + e3");
        assert_eq!(CDElement::zero(Algebra::C).to_string(), "0");
    }
}
