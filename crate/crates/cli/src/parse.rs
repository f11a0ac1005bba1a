//! Parsers for command-line values.

use hypmat::Rational;
use num::{BigInt, One};

/// Decimal or `0x`-prefixed hexadecimal.
pub fn seed(s: &str) -> Result<u64, String> {
    let s = s.trim();
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => s.replace('_', "").parse(),
    }
    .map_err(|e| format!("bad seed {s:?}: {e}"))
}

/// `p/q`, an integer, or a terminating decimal such as `-1.25`; all exact.
pub fn rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Ok(r) = s.parse::<Rational>() {
        return Ok(r);
    }
    let bad = || format!("bad rational {s:?}");
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-BigInt::one(), rest),
        None => (BigInt::one(), s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').ok_or_else(bad)?;
    if int.is_empty() && frac.is_empty()
        || !(int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()))
    {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let denom = num::pow(BigInt::from(10), frac.len());
    Ok(Rational::new(sign * digits, denom))
}

/// A comma-separated list of rationals.
pub fn rationals(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',').map(rational).collect()
}

/// A comma-separated list of reals, used when some entry is not a
/// terminating decimal (for example `1e-3`).
pub fn floats(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad number {x:?}: {e}"))
        })
        .collect()
}

/// Ground set elements, 1-based; `i'` denotes `i + n`.
pub fn ground_set(s: &str, n: usize) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (base, primed) = match tok.strip_suffix('\'') {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let i: usize = base.parse().map_err(|_| format!("bad element {tok:?}"))?;
            if primed {
                if i == 0 || i > n {
                    return Err(format!("{tok:?}: primed elements need 1 <= i <= {n}"));
                }
                Ok(i + n)
            } else {
                Ok(i)
            }
        })
        .collect()
}

/// Sets separated by `;`, each in [`ground_set`] syntax.
pub fn set_list(s: &str, n: usize) -> Result<Vec<Vec<usize>>, String> {
    s.split(';').map(|part| ground_set(part, n)).collect()
}

/// A comma-separated list of positive integers (may be empty).
pub fn indices(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("bad index {t:?}")))
        .collect()
}
