use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{ExponentVector, LaurentPoly};
use crate::error::{Error, Result};

impl LaurentPoly {
    /// Replaces variable `var` by the ratio `num / den`.
    ///
    /// `num` and `den` share a target ring of arity `m`. The result lives in
    /// the ring whose variables are the remaining variables of `self` (in
    /// order) followed by the `m` target variables. Denominators are cleared
    /// with [`LaurentPoly::div_exact`], so a ratio that does not produce a
    /// Laurent polynomial surfaces as [`Error::NotDivisible`].
    pub fn substitute(&self, var: usize, num: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly> {
        if var >= self.arity {
            return Err(Error::IndexOutOfRange { index: var, len: self.arity });
        }
        num.check_arity(den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let rest = self.arity - 1;
        let arity = rest + num.arity;
        if self.is_zero() {
            return Ok(LaurentPoly::zero(arity));
        }

        // group terms by the (whole) power of the substituted variable
        let mut groups: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let h = e.0[var];
            if h % 2 != 0 {
                return Err(Error::NonIntegralExponent { index: var });
            }
            let mut r: Vec<i64> = e.0.iter().enumerate().filter(|&(i, _)| i != var).map(|(_, &x)| x).collect();
            r.resize(arity, 0);
            groups
                .entry(h / 2)
                .or_insert_with(|| LaurentPoly::zero(arity))
                .add_term(ExponentVector(r), c.clone());
        }

        let lo = *groups.keys().next().expect("nonzero");
        let hi = *groups.keys().next_back().expect("nonzero");
        let num = num.embed(arity, rest);
        let den = den.embed(arity, rest);

        // sum_k c_k * num^(k-lo) * den^(hi-k), then fix up by num^lo / den^hi
        let mut common = LaurentPoly::zero(arity);
        for (&k, coeff) in &groups {
            let term = coeff * &num.pow((k - lo) as u32);
            common = &common + &(&term * &den.pow((hi - k) as u32));
        }
        let multiplier = &num.pow(lo.max(0) as u32) * &den.pow((-hi).max(0) as u32);
        let divisor = &num.pow((-lo).max(0) as u32) * &den.pow(hi.max(0) as u32);
        (&common * &multiplier).div_exact(&divisor)
    }

    /// Exact value at a rational point.
    ///
    /// Half-integer exponents need the coordinate to be the square of a
    /// positive rational.
    pub fn eval_rational(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: point.len() });
        }
        if let Some(i) = point.iter().position(Zero::is_zero) {
            return Err(Error::ZeroCoordinate { index: i });
        }
        let mut roots: Vec<Option<BigRational>> = vec![None; point.len()];
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for (i, &h) in e.0.iter().enumerate() {
                if h == 0 {
                    continue;
                }
                let base = if h % 2 == 0 {
                    point[i].clone()
                } else {
                    if roots[i].is_none() {
                        roots[i] = Some(rational_sqrt(&point[i]).ok_or(Error::NonRationalValue { index: i })?);
                    }
                    roots[i].clone().expect("set above")
                };
                let k = if h % 2 == 0 { h / 2 } else { h };
                v *= pow_rational(&base, k);
            }
            total += v;
        }
        Ok(total)
    }
}

fn pow_rational(b: &BigRational, k: i64) -> BigRational {
    let p = num_traits::pow(b.clone(), k.unsigned_abs() as usize);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if !q.is_positive() {
        return None;
    }
    let n = int_sqrt(q.numer())?;
    let d = int_sqrt(q.denom())?;
    Some(BigRational::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Convenience for integer points.
pub fn rational_point(values: &[i64]) -> Vec<BigRational> {
    values.iter().map(|&v| BigRational::from_integer(v.into())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Vars;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn x() -> Vars {
        Vars::cluster(2)
    }

    fn y_ratio() -> (LaurentPoly, LaurentPoly) {
        (x().parse("x1^2+x2^2+1").unwrap(), x().parse("x1*x2").unwrap())
    }

    #[test]
    fn substitute_into_t1() {
        let (n, d) = y_ratio();
        let t1 = Vars::x().parse("x").unwrap();
        let got = t1.substitute(0, &n, &d).unwrap();
        assert_eq!(got, x().parse("x1*x2^-1+x1^-1*x2+x1^-1*x2^-1").unwrap());
    }

    #[test]
    fn substitute_into_t2_matches_hand_expansion() {
        let (n, d) = y_ratio();
        let t2 = Vars::x().parse("2x^2-1").unwrap();
        let got = t2.substitute(0, &n, &d).unwrap();
        // independent route: expand 2(x1^2+x2^2+1)^2 - x1^2 x2^2 and divide by x1^2 x2^2
        let numer = &(&n.pow(2) * &LaurentPoly::constant(2, 2)) - &d.pow(2);
        assert_eq!(numer, x().parse("2x1^4+2x2^4+3x1^2*x2^2+4x1^2+4x2^2+2").unwrap());
        assert_eq!(got, numer.div_exact(&d.pow(2)).unwrap());
        assert!(got.all_coefficients_positive());
    }

    #[test]
    fn identity_substitution() {
        let t = Vars::t();
        let p = t.parse("-t^4+t^3+t-t^-2").unwrap();
        let got = p.substitute(0, &t.parse("t").unwrap(), &LaurentPoly::one(1)).unwrap();
        assert_eq!(got, p);
    }

    #[test]
    fn substitution_errors() {
        let t = Vars::t();
        let p = t.parse("t^(1/2)").unwrap();
        let one = LaurentPoly::one(1);
        assert_eq!(p.substitute(0, &one, &one), Err(Error::NonIntegralExponent { index: 0 }));
        assert_eq!(p.substitute(1, &one, &one), Err(Error::IndexOutOfRange { index: 1, len: 1 }));
        let p = t.parse("t").unwrap();
        let r = p.substitute(0, &one, &t.parse("t+1").unwrap());
        assert_eq!(r, Err(Error::NotDivisible));
    }

    #[test]
    fn keeps_other_variables_first() {
        // p(x1, x2) = x1 * x2^2, substitute x1 -> t^2
        let p = x().parse("x1*x2^2").unwrap();
        let got = p.substitute(0, &Vars::t().parse("t^2").unwrap(), &LaurentPoly::one(1)).unwrap();
        assert_eq!(got.arity(), 2);
        assert_eq!(got, Vars::new(["x2", "t"]).parse("x2^2*t^2").unwrap());
    }

    #[test]
    fn eval_examples() {
        let (n, d) = y_ratio();
        let y = n.div_exact(&d).unwrap();
        assert_eq!(y.eval_rational(&rational_point(&[1, 1])).unwrap(), q(3, 1));

        let t = Vars::t();
        let trefoil = t.parse("-t^4+t^3+t").unwrap();
        assert_eq!(trefoil.eval_rational(&rational_point(&[1])).unwrap(), q(1, 1));
        let unlink = t.parse("-t^(-1/2)-t^(1/2)").unwrap();
        assert_eq!(unlink.eval_rational(&rational_point(&[1])).unwrap(), q(-2, 1));
        // t = 4/9, sqrt = 2/3: -(3/2) - (2/3)
        assert_eq!(unlink.eval_rational(&[q(4, 9)]).unwrap(), q(-13, 6));
    }

    #[test]
    fn eval_errors() {
        let t = Vars::t();
        let p = t.parse("t^(1/2)").unwrap();
        assert_eq!(p.eval_rational(&[q(0, 1)]), Err(Error::ZeroCoordinate { index: 0 }));
        assert_eq!(p.eval_rational(&[q(2, 1)]), Err(Error::NonRationalValue { index: 0 }));
        assert_eq!(p.eval_rational(&[q(-4, 1)]), Err(Error::NonRationalValue { index: 0 }));
        assert!(p.eval_rational(&[]).is_err());
    }

    fn nonzero_q() -> impl Strategy<Value = BigRational> {
        (prop_oneof![-5i64..=-1, 1i64..=5], 1i64..=4).prop_map(|(n, d)| q(n, d))
    }

    // polynomials only: negative powers of the ratio are not Laurent
    fn poly1() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((0i64..=4, -3i64..=3), 0..5).prop_map(|ts| {
            LaurentPoly::from_terms(1, ts.into_iter().map(|(e, c)| (ExponentVector::from_integers(&[e]), c))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn substitute_commutes_with_eval(p in poly1(), a in nonzero_q(), b in nonzero_q()) {
            let (n, d) = y_ratio();
            let composite = p.substitute(0, &n, &d).unwrap();
            let pt = vec![a, b];
            let inner = &n.eval_rational(&pt).unwrap() / &d.eval_rational(&pt).unwrap();
            prop_assume!(!inner.is_zero());
            prop_assert_eq!(composite.eval_rational(&pt).unwrap(), p.eval_rational(&[inner]).unwrap());
        }
    }
}
