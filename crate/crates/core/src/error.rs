use num::complex::Complex64;
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Malformed or out-of-contract input.
    #[error("input error: {0}")]
    Input(String),

    /// A numeric routine gave up; `partial` carries whatever it had.
    #[error("numeric error: {message}")]
    Numeric {
        message: String,
        partial: Vec<Complex64>,
    },

    /// The restriction `t -> h(t e - x)` has a non-real zero.
    #[error("h not hyperbolic w.r.t. e at x = [{}] (root {root})", join(x))]
    NotHyperbolic { x: Vec<Rational>, root: Complex64 },

    /// Two computations that must agree did not. Always a bug.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

fn join(x: &[Rational]) -> String {
    x.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
