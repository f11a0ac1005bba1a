use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ExactPoly;
use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

/// Wire form: `{"arity": n, "terms": [{"exp": [..], "coef": "p/q"}, ..]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub arity: usize,
    pub terms: Vec<TermJson>,
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::input(format!("bad rational {s:?}: {e}")))
}

impl From<&ExactPoly> for PolyJson {
    fn from(p: &ExactPoly) -> Self {
        PolyJson {
            arity: p.arity(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    exp: m.exps().to_vec(),
                    coef: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for ExactPoly {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Self> {
        if j.arity == 0 {
            return Err(Error::input("polynomial arity must be positive"));
        }
        let terms = j
            .terms
            .into_iter()
            .map(|t| Ok((t.exp, parse_rational(&t.coef)?)))
            .collect::<Result<Vec<_>>>()?;
        ExactPoly::from_terms(j.arity, terms)
    }
}

impl Serialize for ExactPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        ExactPoly::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl ExactPoly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::input(format!("polynomial JSON: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{frac, rat};

    #[test]
    fn writes_grlex_descending_with_fraction_strings() {
        let p = ExactPoly::from_terms(2, vec![(vec![0, 1], frac(-3, 6)), (vec![1, 1], rat(2))])
            .unwrap();
        assert_eq!(
            p.to_json(),
            r#"{"arity":2,"terms":[{"exp":[1,1],"coef":"2"},{"exp":[0,1],"coef":"-1/2"}]}"#
        );
    }

    #[test]
    fn rejects_malformed() {
        assert!(ExactPoly::from_json(r#"{"arity":2,"terms":[{"exp":[1],"coef":"1"}]}"#).is_err());
        assert!(ExactPoly::from_json(r#"{"arity":1,"terms":[{"exp":[1],"coef":"1/0"}]}"#).is_err());
        assert!(ExactPoly::from_json(r#"{"arity":1,"terms":[{"exp":[1],"coef":"x"}]}"#).is_err());
    }

    #[test]
    fn parse_canonicalizes() {
        let p = ExactPoly::from_json(
            r#"{"arity":1,"terms":[{"exp":[1],"coef":"2/4"},{"exp":[1],"coef":"-1/2"},{"exp":[0],"coef":"3"}]}"#,
        )
        .unwrap();
        assert_eq!(p, ExactPoly::constant(1, rat(3)));
    }
}
