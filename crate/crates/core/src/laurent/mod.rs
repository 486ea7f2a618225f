//! Exact multivariate Laurent polynomials over the integers.
//!
//! Exponents are stored in half-units so that `t^(1/2)` and its powers live in
//! the same representation as ordinary integer powers: an entry `e` in an
//! [`ExponentVector`] means the variable is raised to `e/2`. Coefficients are
//! arbitrary-precision integers and zero coefficients are never stored.
//!
//! Terms are kept in a `BTreeMap`, so iteration (and serialization) follows the
//! ascending lexicographic order of exponent vectors.

mod division;
mod fraction;
mod json;
mod subst;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use fraction::RationalFunction;
pub use json::PolyJson;
pub use subst::rational_point;
pub use text::Vars;

/// Exponents of one monomial, in half-units.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn zero(arity: usize) -> Self {
        Self(vec![0; arity])
    }

    pub fn from_half_units(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    /// Builds a vector from whole exponents (each entry is doubled).
    pub fn from_integers(entries: &[i64]) -> Self {
        Self(entries.iter().map(|e| 2 * e).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn half_units(&self) -> &[i64] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|e| e % 2 == 0)
    }

    fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

/// A Laurent polynomial in `arity` variables with half-integer exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    arity: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero(arity: usize) -> Self {
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, 1)
    }

    pub fn constant(arity: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(c, ExponentVector::zero(arity))
    }

    pub fn monomial(c: impl Into<BigInt>, exps: ExponentVector) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        let arity = exps.len();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { arity, terms }
    }

    /// The variable `x_index` (exponent 1).
    ///
    /// Panics when `index >= arity`.
    pub fn var(arity: usize, index: usize) -> Self {
        Self::var_pow_half(arity, index, 2)
    }

    /// `x_index^(half/2)`.
    pub fn var_pow_half(arity: usize, index: usize, half: i64) -> Self {
        assert!(index < arity, "variable index {index} out of range for arity {arity}");
        let mut e = vec![0; arity];
        e[index] = half;
        Self::monomial(1, ExponentVector(e))
    }

    /// Builds a canonical polynomial from arbitrary terms, merging duplicates
    /// and dropping zeros.
    pub fn from_terms<I, C>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            if e.len() != arity {
                return Err(Error::ArityMismatch { left: arity, right: e.len() });
            }
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| c.is_one() && e.0.iter().all(|&x| x == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when every exponent is a whole number.
    pub fn has_integral_exponents(&self) -> bool {
        self.terms.keys().all(ExponentVector::is_integral)
    }

    pub fn all_coefficients_positive(&self) -> bool {
        !self.is_zero() && self.terms.values().all(|c| c.is_positive())
    }

    /// Componentwise minimum exponent, `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<ExponentVector> {
        self.fold_exponents(i64::min)
    }

    /// Componentwise maximum exponent, `None` for the zero polynomial.
    pub fn max_exponents(&self) -> Option<ExponentVector> {
        self.fold_exponents(i64::max)
    }

    fn fold_exponents(&self, f: impl Fn(i64, i64) -> i64) -> Option<ExponentVector> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| {
            ExponentVector(acc.0.iter().zip(&e.0).map(|(&a, &b)| f(a, b)).collect())
        }))
    }

    /// Exponents of the smallest monomial `m` such that `m * self` has no
    /// negative exponents.
    pub fn denominator_vector(&self) -> ExponentVector {
        match self.min_exponents() {
            Some(m) => ExponentVector(m.0.iter().map(|&e| (-e).max(0)).collect()),
            None => ExponentVector::zero(self.arity),
        }
    }

    /// Splits `self` as `numerator / x^denominator` with a polynomial numerator.
    pub fn as_fraction(&self) -> (LaurentPoly, ExponentVector) {
        let den = self.denominator_vector();
        (self.shift(&den), den)
    }

    /// Multiplies by the monomial `x^e` (coefficient one).
    pub fn shift(&self, e: &ExponentVector) -> Self {
        assert_eq!(e.len(), self.arity);
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, c)| (k.add(e), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Applies `f` to every exponent vector. `f` must be injective.
    pub fn map_exponents(&self, arity: usize, f: impl Fn(&ExponentVector) -> ExponentVector) -> Self {
        let mut out = Self::zero(arity);
        for (e, c) in &self.terms {
            let img = f(e);
            assert_eq!(img.len(), arity);
            out.add_term(img, c.clone());
        }
        out
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: other.arity });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.arity);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents are only defined for monomials.
    pub fn pow_signed(&self, n: i64) -> Result<Self> {
        if n >= 0 {
            return Ok(self.pow(n as u32));
        }
        let inv = Self::one(self.arity).div_exact(self)?;
        Ok(inv.pow((-n) as u32))
    }

    /// Re-inserts every term; a no-op for values built through this API.
    pub fn canonicalize(&self) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// Embeds into a larger ring: variable `i` becomes variable `offset + i`.
    pub fn embed(&self, arity: usize, offset: usize) -> Self {
        assert!(offset + self.arity <= arity);
        self.map_exponents(arity, |e| {
            let mut v = vec![0; arity];
            v[offset..offset + self.arity].copy_from_slice(&e.0);
            ExponentVector(v)
        })
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $call:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics on arity mismatch; use the `try_` form to get an error instead.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$call(rhs).expect("arity mismatch")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Uses `x1, x2, ...` (or `t` in one variable); see [`Vars`] for other names.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = Vars::default_for(self.arity);
        write!(f, "{}", vars.format(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Vars {
        Vars::t()
    }
    fn x() -> Vars {
        Vars::cluster(2)
    }

    #[test]
    fn add_cancels_to_empty_term_map() {
        let a = t().parse("t^(1/2)").unwrap();
        let s = &a + &(-&a);
        assert!(s.is_zero());
        assert_eq!(s.num_terms(), 0);
    }

    #[test]
    fn add_examples() {
        let a = x().parse("x1^2-x2^2").unwrap();
        let b = x().parse("x2^2").unwrap();
        assert_eq!(&a + &b, x().parse("x1^2").unwrap());

        let hopf = t().parse("-t^(5/2)-t^(1/2)").unwrap();
        assert!((&hopf + &-&hopf).is_zero());
        assert!((&hopf + &t().parse("t^(5/2)+t^(1/2)").unwrap()).is_zero());
    }

    #[test]
    fn mul_examples() {
        let a = x().parse("x1+x2").unwrap();
        let b = x().parse("x1-x2").unwrap();
        assert_eq!(&a * &b, x().parse("x1^2-x2^2").unwrap());

        // -(t+1) t^(-1/2) times one
        let v0 = &-&t().parse("t+1").unwrap() * &t().parse("t^(-1/2)").unwrap();
        assert_eq!(&v0 * &LaurentPoly::one(1), t().parse("-t^(1/2)-t^(-1/2)").unwrap());

        let inv = x().parse("x1^-1").unwrap();
        let p = x().parse("x2^2+1").unwrap();
        assert_eq!(&inv * &p, x().parse("x2^2*x1^-1+x1^-1").unwrap());
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = LaurentPoly::one(1);
        let b = LaurentPoly::one(2);
        assert_eq!(a.try_add(&b), Err(Error::ArityMismatch { left: 1, right: 2 }));
        assert!(a.try_mul(&b).is_err());
        assert!(a.div_exact(&b).is_err());
    }

    #[test]
    fn from_terms_merges_and_drops_zeros() {
        let e = ExponentVector::from_integers(&[1, 0]);
        let p = LaurentPoly::from_terms(2, vec![(e.clone(), 3), (e.clone(), -3)]).unwrap();
        assert!(p.is_zero());
        let p = LaurentPoly::from_terms(2, vec![(e.clone(), 3), (e.clone(), 4)]).unwrap();
        assert_eq!(p.coefficient(&e), BigInt::from(7));
        assert!(LaurentPoly::from_terms(3, vec![(e, 1)]).is_err());
    }

    #[test]
    fn terms_iterate_in_ascending_lex_order() {
        let p = x().parse("x2+x1^-1+x1*x2^3+7").unwrap();
        let keys: Vec<_> = p.terms().map(|(e, _)| e.clone()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn fraction_split() {
        let p = x().parse("x2^2*x1^-1+x1^-1").unwrap();
        let (num, den) = p.as_fraction();
        assert_eq!(num, x().parse("x2^2+1").unwrap());
        assert_eq!(den, ExponentVector::from_integers(&[1, 0]));
    }

    #[test]
    fn pow_and_negative_pow() {
        let p = t().parse("t+1").unwrap();
        assert_eq!(p.pow(3), t().parse("t^3+3t^2+3t+1").unwrap());
        assert_eq!(p.pow(0), LaurentPoly::one(1));
        let m = t().parse("2t^(1/2)").unwrap();
        assert_eq!(m.pow_signed(-1), Err(Error::NotDivisible));
        let m = t().parse("-t^(1/2)").unwrap();
        assert_eq!(m.pow_signed(-2).unwrap(), t().parse("t^-1").unwrap());
    }
}
