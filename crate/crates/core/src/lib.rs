//! Exact tooling for hyperbolic polynomials and the matroids they define:
//! polynomial arithmetic with Sturm-based real-root decisions, symmetric
//! function identities, stability probes, generalized Vámos matroids and
//! rank-3 Jordan algebras over the composition algebras.

pub mod bits;
pub mod error;
pub mod jordan;
pub mod matroid;
pub mod poly;
pub mod sampling;
pub mod ser;
pub mod stability;
pub mod symfun;
pub mod vamoslab;

pub use error::{Error, Result};
pub use poly::{ExactPoly, Monomial, UnivariateExact};

pub type Rational = num::BigRational;
