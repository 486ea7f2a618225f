use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{ExponentVector, LaurentPoly};
use crate::error::{Error, Result};

/// Wire form: `{"arity": k, "half_exponents": true, "terms": [[[e1,...,ek], "coeff"], ...]}`.
///
/// With `half_exponents: true` the exponent entries are half-units; with
/// `false` they are whole exponents. Coefficients are decimal strings and
/// terms appear in ascending lexicographic order of exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub arity: usize,
    pub half_exponents: bool,
    pub terms: Vec<(Vec<i64>, String)>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        PolyJson {
            arity: p.arity(),
            half_exponents: true,
            terms: p.terms().map(|(e, c)| (e.half_units().to_vec(), c.to_string())).collect(),
        }
    }
}

impl TryFrom<&PolyJson> for LaurentPoly {
    type Error = Error;

    fn try_from(j: &PolyJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for (e, c) in &j.terms {
            let c: BigInt = c.parse().map_err(|_| Error::Json(format!("bad coefficient {c:?}")))?;
            let e = if j.half_exponents {
                ExponentVector::from_half_units(e.clone())
            } else {
                ExponentVector::from_integers(e)
            };
            terms.push((e, c));
        }
        LaurentPoly::from_terms(j.arity, terms)
    }
}

impl LaurentPoly {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PolyJson::from(self)).expect("plain data")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("plain data")
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        let j: PolyJson = serde_json::from_value(v.clone())?;
        LaurentPoly::try_from(&j)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: PolyJson = serde_json::from_str(s)?;
        LaurentPoly::try_from(&j)
    }
}
