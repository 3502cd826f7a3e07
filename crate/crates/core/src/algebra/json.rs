//! JSON form of a truncated series:
//!
//! ```json
//! {"order": 8, "vars": ["x1","x2","x3"],
//!  "terms": [{"t": 6, "monos": [{"e": [1,1,1], "c": "1"}]}]}
//! ```
//!
//! Coefficients are decimal strings, `"p/q"` for non-integers. Only nonzero
//! `t`-degrees are listed.

use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::poly::pad;
use super::series::TruncSeries;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub t: usize,
    pub monos: Vec<MonoJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoJson {
    pub e: Vec<u32>,
    pub c: String,
}

impl From<&TruncSeries> for SeriesJson {
    fn from(s: &TruncSeries) -> Self {
        let arity = s.arity();
        let terms = s
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(k, p)| TermJson {
                t: k,
                monos: p
                    .terms()
                    .map(|(e, c)| MonoJson {
                        e: e[..arity].to_vec(),
                        c: c.to_string(),
                    })
                    .collect(),
            })
            .collect();
        SeriesJson {
            order: s.order(),
            vars: super::var_names(arity),
            terms,
        }
    }
}

impl TryFrom<&SeriesJson> for TruncSeries {
    type Error = Error;

    fn try_from(j: &SeriesJson) -> Result<Self> {
        let arity = j.vars.len();
        if arity > super::MAX_ARITY {
            return Err(Error::UnsupportedArity(arity));
        }
        let mut s = TruncSeries::zero(arity, j.order);
        for term in &j.terms {
            if term.t > j.order {
                return Err(Error::Usage(format!(
                    "term t^{} exceeds declared order {}",
                    term.t, j.order
                )));
            }
            for m in &term.monos {
                if m.e.len() != arity {
                    return Err(Error::ArityMismatch {
                        expected: arity,
                        found: m.e.len(),
                    });
                }
                let c = BigRational::from_str(&m.c)
                    .map_err(|e| Error::Usage(format!("bad coefficient {:?}: {e}", m.c)))?;
                s.add_term(term.t, pad(&m.e), c);
            }
        }
        Ok(s)
    }
}

impl TruncSeries {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&SeriesJson::from(self)).expect("series JSON is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: SeriesJson = serde_json::from_str(text)
            .map_err(|e| Error::Usage(format!("invalid series JSON: {e}")))?;
        TruncSeries::try_from(&j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    #[test]
    fn schema_shape() {
        let mut s = TruncSeries::zero(3, 8);
        s.add_term(6, [1, 1, 1], rat(1));
        s.add_term(7, [2, 1, 1], ratio(-3, 4));
        assert_eq!(
            s.to_json(),
            r#"{"order":8,"vars":["x1","x2","x3"],"terms":[{"t":6,"monos":[{"e":[1,1,1],"c":"1"}]},{"t":7,"monos":[{"e":[2,1,1],"c":"-3/4"}]}]}"#
        );
    }

    #[test]
    fn rejects_wrong_exponent_length() {
        let text = r#"{"order":2,"vars":["x"],"terms":[{"t":1,"monos":[{"e":[1,1],"c":"1"}]}]}"#;
        assert!(TruncSeries::from_json(text).is_err());
    }
}
