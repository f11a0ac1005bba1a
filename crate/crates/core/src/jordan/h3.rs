use num::{One, Zero};
use serde::Serialize;

use super::cd::{Algebra, CDElement};
use crate::poly::UnivariateExact;
use crate::stability::{real_spectrum, Spectrum};
use crate::{ser, Error, Rational, Result};

/// Off-diagonal slots `(1,2), (1,3), (2,3)`.
const SLOTS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// A Hermitian 3×3 matrix over a composition algebra: real diagonal and
/// upper entries `x12, x13, x23` (the lower triangle holds conjugates).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct H3Element {
    alg: Algebra,
    diag: [Rational; 3],
    off: [CDElement; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Freudenthal {
    #[serde(serialize_with = "ser::rational")]
    pub det: Rational,
    #[serde(serialize_with = "ser::rational")]
    pub trace: Rational,
    #[serde(serialize_with = "ser::rational")]
    pub sigma: Rational,
    /// `t^3 - trace t^2 + sigma t - det`.
    #[serde(skip)]
    pub char_poly: UnivariateExact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralData {
    pub eigenvalues: Spectrum,
    pub jrank: usize,
}

impl H3Element {
    pub fn new(diag: [Rational; 3], off: [CDElement; 3]) -> Result<Self> {
        let alg = off[0].algebra();
        if off.iter().any(|x| x.algebra() != alg) {
            return Err(Error::input("off-diagonal entries from different algebras"));
        }
        Ok(H3Element { alg, diag, off })
    }

    pub fn zero(alg: Algebra) -> Self {
        Self::diagonal(alg, [Rational::zero(), Rational::zero(), Rational::zero()])
    }

    pub fn identity(alg: Algebra) -> Self {
        Self::diagonal(alg, [Rational::one(), Rational::one(), Rational::one()])
    }

    pub fn diagonal(alg: Algebra, diag: [Rational; 3]) -> Self {
        H3Element {
            alg,
            diag,
            off: [
                CDElement::zero(alg),
                CDElement::zero(alg),
                CDElement::zero(alg),
            ],
        }
    }

    pub fn algebra(&self) -> Algebra {
        self.alg
    }

    pub fn diag(&self) -> &[Rational; 3] {
        &self.diag
    }

    pub fn off(&self) -> &[CDElement; 3] {
        &self.off
    }

    /// Matrix entry `(i, j)`, 0-based.
    pub fn entry(&self, i: usize, j: usize) -> CDElement {
        if i == j {
            return CDElement::real(self.alg, self.diag[i].clone());
        }
        let k = SLOTS
            .iter()
            .position(|&s| s == (i.min(j), i.max(j)))
            .expect("i != j");
        if i < j {
            self.off[k].clone()
        } else {
            self.off[k].conj()
        }
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.alg != o.alg {
            return Err(Error::input(format!(
                "elements of H3({}) and H3({})",
                self.alg, o.alg
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(H3Element {
            alg: self.alg,
            diag: std::array::from_fn(|i| &self.diag[i] + &o.diag[i]),
            off: std::array::from_fn(|i| &self.off[i] + &o.off[i]),
        })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        H3Element {
            alg: self.alg,
            diag: std::array::from_fn(|i| &self.diag[i] * s),
            off: std::array::from_fn(|i| self.off[i].scale(s)),
        }
    }

    /// `X ∘ Y = (XY + YX) / 2`.
    pub fn jordan(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let a: Vec<Vec<CDElement>> = (0..3)
            .map(|i| (0..3).map(|j| self.entry(i, j)).collect())
            .collect();
        let b: Vec<Vec<CDElement>> = (0..3)
            .map(|i| (0..3).map(|j| o.entry(i, j)).collect())
            .collect();
        let half = Rational::new(1.into(), 2.into());
        let sym = |i: usize, j: usize| -> CDElement {
            let mut s = CDElement::zero(self.alg);
            for k in 0..3 {
                s = &s + &(&a[i][k] * &b[k][j]);
                s = &s + &(&b[i][k] * &a[k][j]);
            }
            s.scale(&half)
        };
        let diag: [CDElement; 3] = std::array::from_fn(|i| sym(i, i));
        if diag.iter().any(|d| !d.is_real()) {
            return Err(Error::Consistency(
                "Jordan product left the Hermitian matrices".into(),
            ));
        }
        Ok(H3Element {
            alg: self.alg,
            diag: diag.map(|d| d.re().clone()),
            off: SLOTS.map(|(i, j)| sym(i, j)),
        })
    }

    /// `X^k` by repeated Jordan multiplication (well defined by power-associativity).
    pub fn power(&self, k: u32) -> Self {
        let mut p = H3Element::identity(self.alg);
        for _ in 0..k {
            p = self.jordan(&p).expect("same algebra");
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(Zero::is_zero) && self.off.iter().all(CDElement::is_zero)
    }

    pub fn trace(&self) -> Rational {
        self.diag.iter().sum()
    }

    pub fn sigma(&self) -> Rational {
        let [a, b, c] = &self.diag;
        a * b + b * c + c * a - self.off.iter().map(CDElement::norm).sum::<Rational>()
    }

    /// `abc - a n(x23) - b n(x13) - c n(x12) + 2 Re((x12 x23) x̄13)`.
    pub fn det(&self) -> Rational {
        let [a, b, c] = &self.diag;
        let [x12, x13, x23] = &self.off;
        let triple = &(x12 * x23) * &x13.conj();
        a * b * c - a * x23.norm() - b * x13.norm() - c * x12.norm()
            + triple.re() * Rational::from_integer(2.into())
    }

    pub fn freudenthal(&self) -> Freudenthal {
        let (det, trace, sigma) = (self.det(), self.trace(), self.sigma());
        let char_poly = UnivariateExact::new(vec![
            -det.clone(),
            sigma.clone(),
            -trace.clone(),
            Rational::one(),
        ]);
        Freudenthal {
            det,
            trace,
            sigma,
            char_poly,
        }
    }

    /// `X^3 - trace X^2 + sigma X - det I`, which vanishes for every `X`.
    pub fn cayley_hamilton_residual(&self) -> Self {
        let f = self.freudenthal();
        let x2 = self.power(2);
        let x3 = self.jordan(&x2).expect("same algebra");
        let terms = [
            x3,
            x2.scale(&-f.trace),
            self.scale(&f.sigma),
            H3Element::identity(self.alg).scale(&-f.det),
        ];
        terms.iter().fold(H3Element::zero(self.alg), |acc, t| {
            acc.try_add(t).expect("same algebra")
        })
    }

    /// Number of nonzero eigenvalues: `deg_t det(I + tX)`.
    pub fn jrank(&self) -> usize {
        if !self.det().is_zero() {
            3
        } else if !self.sigma().is_zero() {
            2
        } else if !self.trace().is_zero() {
            1
        } else {
            0
        }
    }

    pub fn spectral(&self) -> Result<SpectralData> {
        let f = self.freudenthal();
        let values = real_spectrum(&f.char_poly).map_err(|_| {
            Error::Consistency(
                "characteristic cubic of a Hermitian matrix has a non-real root".into(),
            )
        })?;
        let eigenvalues = Spectrum { values };
        let jrank = eigenvalues.nonzero_count();
        if jrank != self.jrank() {
            return Err(Error::Consistency(
                "rank from eigenvalues differs from deg det(I + tX)".into(),
            ));
        }
        Ok(SpectralData { eigenvalues, jrank })
    }

    pub fn is_idempotent(&self) -> bool {
        self.jordan(self).is_ok_and(|sq| &sq == self)
    }

    /// For three distinct rational eigenvalues: `X = Σ λ_i c_i` with
    /// `c_i = Π_{j≠i} (X - λ_j I) / (λ_i - λ_j)`.
    pub fn spectral_decomposition(&self) -> Result<Option<[(Rational, H3Element); 3]>> {
        let s = self.spectral()?;
        let lambdas: Vec<Rational> = match s
            .eigenvalues
            .values
            .iter()
            .map(|v| v.as_rational().cloned())
            .collect()
        {
            Some(l) => l,
            None => return Ok(None),
        };
        if lambdas[0] == lambdas[1] || lambdas[1] == lambdas[2] {
            return Ok(None);
        }
        let x2 = self.power(2);
        let id = H3Element::identity(self.alg);
        let idem = |i: usize| -> H3Element {
            let (j, k) = match i {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let (li, lj, lk) = (&lambdas[i], &lambdas[j], &lambdas[k]);
            let num = x2
                .try_add(&self.scale(&-(lj + lk)))
                .and_then(|p| p.try_add(&id.scale(&(lj * lk))))
                .expect("same algebra");
            num.scale(&((li - lj) * (li - lk)).recip())
        };
        Ok(Some(std::array::from_fn(|i| (lambdas[i].clone(), idem(i)))))
    }
}

/// `c_i ∘ c_i = c_i`, `c_i ∘ c_j = 0` for `i ≠ j`, and `c_1 + c_2 + c_3 = I`.
pub fn frame_verify(c: &[H3Element; 3]) -> bool {
    let alg = c[0].alg;
    if c.iter().any(|x| x.alg != alg) {
        return false;
    }
    let idempotent = c.iter().all(H3Element::is_idempotent);
    let orthogonal =
        (0..3).all(|i| (i + 1..3).all(|j| c[i].jordan(&c[j]).is_ok_and(|p| p.is_zero())));
    let sum = c[0].try_add(&c[1]).and_then(|s| s.try_add(&c[2]));
    idempotent && orthogonal && sum.is_ok_and(|s| s == H3Element::identity(alg))
}
