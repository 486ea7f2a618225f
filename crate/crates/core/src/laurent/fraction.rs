use std::fmt;

use super::{LaurentPoly, Vars};
use crate::error::{Error, Result};

/// A quotient of two Laurent polynomials, compared by cross-multiplication.
///
/// Used where values such as `t/(t+1)^2` leave the Laurent ring (Markov trace
/// of Jones projections). No reduction is attempted.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        num.check_arity(&den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { num, den })
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.arity());
        Self { num: p, den }
    }

    /// The Laurent polynomial this quotient equals, if any.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        self.num.div_exact(&self.den)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    pub fn format(&self, vars: &Vars) -> String {
        format!("({})/({})", vars.format(&self.num), vars.format(&self.den))
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}
