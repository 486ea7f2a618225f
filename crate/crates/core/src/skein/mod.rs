//! Jones polynomials of the `(2, n)` torus family from the skein relation,
//! and the correspondence between the skein recurrence and the Chebyshev
//! recurrence.
//!
//! The skein relation is taken literally in the form
//! `t^-1 V(L-) - t V(L+) = (t^(1/2) - t^(-1/2)) V(L)`, where `L+` / `L-` add
//! an overpass / underpass to `L`. In the usual `(L+, L-, L0)` notation this
//! is the standard Jones skein relation with `L+` and `L-` exchanged and
//! `L` playing the role of `L0`. The torus chain below indexes
//! `V0 = unlink, V1 = unknot, V2 = Hopf, V3 = trefoil, ...` and produces
//! `V_{n+1}` from `(V_{n-1}, V_n)` with `V_{n-1}` in the `L+` slot and
//! `V_n` in the `L` slot.

mod chebyshev;
mod correspondence;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::laurent::{rational_point, LaurentPoly, Vars};
use crate::report::Report;

pub use chebyshev::{basis_elements, cheb_self_check, chebyshev_t, chebyshev_table, x_substitution_identity, BasisElement};
pub use correspondence::{map_t_squared, verify_correspondence, LinearRecurrence};

/// `t^(half/2)`.
pub fn t_pow(half: i64) -> LaurentPoly {
    LaurentPoly::var_pow_half(1, 0, half)
}

/// An element of `Z[t^(1/2), t^(-1/2)]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JonesPolynomial(LaurentPoly);

impl JonesPolynomial {
    pub fn new(p: LaurentPoly) -> Result<Self> {
        if p.arity() != 1 {
            return Err(Error::ArityMismatch { left: 1, right: p.arity() });
        }
        Ok(Self(p))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self(Vars::t().parse(text)?))
    }

    pub fn zero() -> Self {
        Self(LaurentPoly::zero(1))
    }

    pub fn unknot() -> Self {
        Self(LaurentPoly::one(1))
    }

    /// Two unlinked unknots: `-t^(1/2) - t^(-1/2)`.
    pub fn unlink2() -> Self {
        Self(-&(&t_pow(1) + &t_pow(-1)))
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.0
    }

    pub fn eval_at_one(&self) -> BigRational {
        self.0.eval_rational(&rational_point(&[1])).expect("t = 1 is always admissible")
    }

    /// Image under `t -> 1/t` (the mirror link).
    pub fn mirror(&self) -> Self {
        Self(self.0.map_exponents(1, |e| crate::ExponentVector::from_half_units(vec![-e.half_units()[0]])))
    }
}

impl fmt::Display for JonesPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Vars::t().format(&self.0))
    }
}

/// Position of a link in one instance of the skein relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Plus,
    Minus,
    Base,
}

/// Scalar that carries `V` into W-space for the given role:
/// `-(t+1)/t^(1/2)` for `L+` and `L-`, `t^2 - 1` for `L`.
pub fn w_scalar(role: Role) -> LaurentPoly {
    match role {
        Role::Plus | Role::Minus => -&(&t_pow(1) + &t_pow(-1)),
        Role::Base => &t_pow(4) - &LaurentPoly::one(1),
    }
}

pub fn w_transform(v: &JonesPolynomial, role: Role) -> LaurentPoly {
    &w_scalar(role) * &v.0
}

/// A skein relation `minus * V(L-) + plus * V(L+) + base * V(L) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinRelation {
    pub minus: LaurentPoly,
    pub plus: LaurentPoly,
    pub base: LaurentPoly,
}

impl SkeinRelation {
    /// `t^-1 V(L-) - t V(L+) - (t^(1/2) - t^(-1/2)) V(L) = 0`.
    pub fn jones() -> Self {
        Self {
            minus: t_pow(-2),
            plus: -t_pow(2),
            base: -&(&t_pow(1) - &t_pow(-1)),
        }
    }

    pub fn holds(&self, plus: &JonesPolynomial, base: &JonesPolynomial, minus: &JonesPolynomial) -> bool {
        let total = &(&(&self.minus * &minus.0) + &(&self.plus * &plus.0)) + &(&self.base * &base.0);
        total.is_zero()
    }

    /// Coefficients `(a, b)` with `V(L-) = a V(L+) + b V(L)`, solved by exact
    /// division.
    pub fn solve_minus(&self) -> Result<(LaurentPoly, LaurentPoly)> {
        Ok(((-&self.plus).div_exact(&self.minus)?, (-&self.base).div_exact(&self.minus)?))
    }

    /// Coefficients `(a, b)` with `W(L) = a W(L+) + b W(L-)` after the
    /// W-transform.
    pub fn w_space(&self) -> Result<(LaurentPoly, LaurentPoly)> {
        // c_m V- + c_p V+ + c_b V = 0 with V_r = W_r / w_r
        let wb = w_scalar(Role::Base);
        let denom = &self.base * &w_scalar(Role::Plus);
        let a = (-&(&self.plus * &wb)).div_exact(&denom)?;
        let denom = &self.base * &w_scalar(Role::Minus);
        let b = (-&(&self.minus * &wb)).div_exact(&denom)?;
        Ok((a, b))
    }
}

fn step_coefficients() -> &'static (LaurentPoly, LaurentPoly) {
    static COEFFS: OnceLock<(LaurentPoly, LaurentPoly)> = OnceLock::new();
    COEFFS.get_or_init(|| SkeinRelation::jones().solve_minus().expect("leading coefficient is a unit"))
}

/// Solves the skein relation for `V(L-)` given `V(L+)` and `V(L)`.
pub fn skein_step(v_plus: &JonesPolynomial, v_base: &JonesPolynomial) -> JonesPolynomial {
    let (a, b) = step_coefficients();
    JonesPolynomial(&(a * &v_plus.0) + &(b * &v_base.0))
}

/// Solves the W-space relation for `V(L)`; fails when the result would not be
/// a Laurent polynomial.
pub fn skein_solve_base(v_plus: &JonesPolynomial, v_minus: &JonesPolynomial) -> Result<JonesPolynomial> {
    let w = &(&t_pow(4) * &w_transform(v_plus, Role::Plus)) - &w_transform(v_minus, Role::Minus);
    Ok(JonesPolynomial(w.div_exact(&w_scalar(Role::Base))?))
}

/// `V_0, ..., V_N` for the `(2, n)` torus links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusChain(Vec<JonesPolynomial>);

impl TorusChain {
    pub fn get(&self, n: usize) -> Option<&JonesPolynomial> {
        self.0.get(n)
    }

    pub fn values(&self) -> &[JonesPolynomial] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Index<usize> for TorusChain {
    type Output = JonesPolynomial;
    fn index(&self, n: usize) -> &JonesPolynomial {
        &self.0[n]
    }
}

pub fn torus_chain(n_max: usize) -> TorusChain {
    let mut v = vec![JonesPolynomial::unlink2(), JonesPolynomial::unknot()];
    while v.len() <= n_max {
        let n = v.len() - 1;
        let next = skein_step(&v[n - 1], &v[n]);
        v.push(next);
    }
    v.truncate(n_max.max(1) + 1);
    TorusChain(v)
}

/// Number of components of the `(2, n)` torus link.
pub fn torus_components(n: usize) -> usize {
    if n.is_multiple_of(2) {
        2
    } else {
        1
    }
}

/// Re-checks `(t^2-1) V_n = ((t+1)/t^(1/2)) (V_{n+1} - t^2 V_{n-1})` on every
/// consecutive triple and `V_n(1) = (-2)^(components-1)`.
pub fn verify_skein_chain(n_max: usize) -> Report {
    let chain = torus_chain(n_max + 1);
    let mut rep = Report::new("skein-chain");
    let lhs_scalar = w_scalar(Role::Base);
    let rhs_scalar = &t_pow(1) + &t_pow(-1);
    for n in 1..=n_max {
        let (prev, cur, next) = (&chain[n - 1].0, &chain[n].0, &chain[n + 1].0);
        let lhs = &lhs_scalar * cur;
        let rhs = &rhs_scalar * &(next - &(&t_pow(4) * prev));
        rep.check(format!("triple {n}"), lhs == rhs, format!("(V{}, V{n}, V{})", n - 1, n + 1));
    }
    for n in 0..=n_max {
        let at_one = chain[n].eval_at_one();
        let expected = BigRational::from_integer(BigInt::from(-2).pow(torus_components(n) as u32 - 1));
        rep.check(format!("V{n}(1)"), at_one == expected, format!("{at_one}"));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn j(s: &str) -> JonesPolynomial {
        JonesPolynomial::parse(s).unwrap()
    }

    #[test]
    fn w_transform_examples() {
        assert_eq!(w_transform(&JonesPolynomial::unknot(), Role::Plus), Vars::t().parse("-t^(1/2)-t^(-1/2)").unwrap());
        assert_eq!(w_transform(&JonesPolynomial::unknot(), Role::Base), Vars::t().parse("t^2-1").unwrap());
        for r in [Role::Plus, Role::Minus, Role::Base] {
            assert!(w_transform(&JonesPolynomial::zero(), r).is_zero());
        }
    }

    #[test]
    fn derived_step_matches_closed_form() {
        // V(L-) = t^2 V(L+) + t^(1/2)(t-1) V(L)
        let (a, b) = step_coefficients();
        assert_eq!(a, &t_pow(4));
        assert_eq!(b, &(&t_pow(3) - &t_pow(1)));
        let (wa, wb) = SkeinRelation::jones().w_space().unwrap();
        assert_eq!(wa, t_pow(4));
        assert_eq!(wb, -LaurentPoly::one(1));
    }

    #[test]
    fn skein_step_examples() {
        assert_eq!(skein_step(&JonesPolynomial::unlink2(), &JonesPolynomial::unknot()), j("-t^(5/2)-t^(1/2)"));
        assert_eq!(skein_step(&JonesPolynomial::unknot(), &j("-t^(5/2)-t^(1/2)")), j("-t^4+t^3+t"));
        assert_eq!(skein_step(&JonesPolynomial::zero(), &JonesPolynomial::zero()), JonesPolynomial::zero());
    }

    #[test]
    fn solve_base_examples() {
        let one = JonesPolynomial::unknot();
        assert_eq!(skein_solve_base(&one, &one).unwrap(), j("-t^(-1/2)-t^(1/2)"));
        let v0 = JonesPolynomial::unlink2();
        assert_eq!(skein_solve_base(&v0, &j("-t^(5/2)-t^(1/2)")).unwrap(), one);
        assert_eq!(skein_solve_base(&JonesPolynomial::zero(), &JonesPolynomial::zero()).unwrap(), JonesPolynomial::zero());
        assert_eq!(skein_solve_base(&JonesPolynomial::zero(), &one), Err(Error::NotDivisible));
    }

    #[test]
    fn torus_chain_values() {
        let c = torus_chain(4);
        assert_eq!(c.len(), 5);
        assert_eq!(c[0], j("-t^(-1/2)-t^(1/2)"));
        assert_eq!(c[1], j("1"));
        assert_eq!(c[2], j("-t^(5/2)-t^(1/2)"));
        assert_eq!(c[3], j("-t^4+t^3+t"));
        assert_eq!(c[4], j("-t^(11/2)+t^(9/2)-t^(7/2)-t^(3/2)"));
        assert_eq!(torus_chain(1).len(), 2);
    }

    #[test]
    fn chain_satisfies_paper_relation() {
        let c = torus_chain(12);
        let rel = SkeinRelation::jones();
        for n in 1..12 {
            assert!(rel.holds(&c[n - 1], &c[n], &c[n + 1]), "n={n}");
        }
    }

    #[test]
    fn skein_chain_report() {
        let rep = verify_skein_chain(10);
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.checks.len(), 10 + 11);
    }

    #[test]
    fn values_at_one_up_to_twenty() {
        let c = torus_chain(20);
        for n in 0..=20 {
            let expect = if n % 2 == 1 { 1 } else { -2 };
            assert_eq!(c[n].eval_at_one(), BigRational::from_integer(expect.into()), "n={n}");
        }
    }

    #[test]
    fn mirror_inverts_exponents() {
        assert_eq!(j("-t^4+t^3+t").mirror(), j("-t^-4+t^-3+t^-1"));
        assert_eq!(JonesPolynomial::unlink2().mirror(), JonesPolynomial::unlink2());
    }

    fn jpoly() -> impl Strategy<Value = JonesPolynomial> {
        prop::collection::vec((-8i64..=8, -5i64..=5), 0..6).prop_map(|ts| {
            let p = LaurentPoly::from_terms(1, ts.into_iter().map(|(e, c)| (crate::ExponentVector::from_half_units(vec![e]), c))).unwrap();
            JonesPolynomial::new(p).unwrap()
        })
    }

    proptest! {
        #[test]
        fn solve_base_inverts_step(plus in jpoly(), base in jpoly()) {
            let minus = skein_step(&plus, &base);
            prop_assert_eq!(skein_solve_base(&plus, &minus).unwrap(), base);
        }

        #[test]
        fn w_transform_is_linear(a in jpoly(), b in jpoly()) {
            for r in [Role::Plus, Role::Minus, Role::Base] {
                let sum = JonesPolynomial::new(a.poly() + b.poly()).unwrap();
                prop_assert_eq!(w_transform(&sum, r), &w_transform(&a, r) + &w_transform(&b, r));
            }
            let base = w_transform(&a, Role::Base);
            prop_assert_eq!(base, &(&t_pow(4) - &LaurentPoly::one(1)) * a.poly());
        }
    }
}
