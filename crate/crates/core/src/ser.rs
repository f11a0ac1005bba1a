//! Serde helpers: rationals travel as `"p/q"` strings.

use serde::ser::SerializeSeq;
use serde::Serializer;

use crate::Rational;

pub fn rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub fn rationals<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for q in v {
        seq.serialize_element(&q.to_string())?;
    }
    seq.end()
}

pub fn opt_rational<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        None => s.serialize_none(),
        Some(q) => rational(q, s),
    }
}

pub fn opt_rationals<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        None => s.serialize_none(),
        Some(v) => rationals(v, s),
    }
}

pub fn masks_one_based<S: Serializer>(v: &[u64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for &m in v {
        seq.serialize_element(&crate::bits::to_one_based(m))?;
    }
    seq.end()
}
