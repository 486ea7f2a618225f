use crate::error::{Error, Result};
use crate::laurent::{ExponentVector, LaurentPoly, Vars};
use crate::report::Report;

use super::chebyshev::{chebyshev_table, x_substitution_identity};
use super::{t_pow, torus_chain, w_transform, Role, SkeinRelation};

/// A second-order recurrence `next = lead * current + trail * previous`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRecurrence {
    pub lead: LaurentPoly,
    pub trail: LaurentPoly,
}

impl LinearRecurrence {
    /// The skein relation in W-space: `W(L) = t^2 W(L+) - W(L-)`.
    pub fn skein() -> Result<Self> {
        let (lead, trail) = SkeinRelation::jones().w_space()?;
        Ok(Self { lead, trail })
    }

    /// Recovers the Chebyshev recurrence from `T_0..T_3` by Cramer's rule:
    /// `T_2 = a T_1 + b T_0`, `T_3 = a T_2 + b T_1`.
    pub fn chebyshev() -> Result<Self> {
        let t = chebyshev_table(3);
        let det = &(&t[1] * &t[1]) - &(&t[0] * &t[2]);
        let lead = (&(&t[2] * &t[1]) - &(&t[0] * &t[3])).div_exact(&det)?;
        let trail = (&(&t[1] * &t[3]) - &(&t[2] * &t[2])).div_exact(&det)?;
        Ok(Self { lead, trail })
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> Result<LaurentPoly>) -> Result<Self> {
        Ok(Self { lead: f(&self.lead)?, trail: f(&self.trail)? })
    }
}

/// Rewrites a polynomial in `t^2` by sending `t^(2k)` to `image^k`.
///
/// Fails with [`Error::NonIntegralExponent`] when some power of `t` is not
/// even.
pub fn map_t_squared(p: &LaurentPoly, image: &LaurentPoly) -> Result<LaurentPoly> {
    if p.terms().any(|(e, _)| e.half_units()[0] % 4 != 0) {
        return Err(Error::NonIntegralExponent { index: 0 });
    }
    let in_u = p.map_exponents(1, |e| ExponentVector::from_half_units(vec![e.half_units()[0] / 2]));
    in_u.substitute(0, image, &LaurentPoly::one(image.arity()))
}

/// Compares the skein recurrence with the Chebyshev recurrence and checks the
/// cluster-side substitution identity.
pub fn verify_correspondence() -> Report {
    let mut rep = Report::new("correspondence");
    let t = Vars::t();
    let xv = Vars::x();
    let cl = Vars::cluster(2);

    let skein = match LinearRecurrence::skein() {
        Ok(r) => r,
        Err(e) => {
            rep.fail("skein-coefficients", e.to_string());
            return rep;
        }
    };
    let cheb = match LinearRecurrence::chebyshev() {
        Ok(r) => r,
        Err(e) => {
            rep.fail("chebyshev-coefficients", e.to_string());
            return rep;
        }
    };

    rep.check(
        "skein-coefficients",
        skein.lead == t_pow(4) && skein.trail == -LaurentPoly::one(1),
        format!("W(L) = ({}) W(L+) + ({}) W(L-)", t.format(&skein.lead), t.format(&skein.trail)),
    );

    let two_x = xv.parse("2x").expect("literal");
    rep.check(
        "chebyshev-coefficients",
        cheb.lead == two_x && cheb.trail == -LaurentPoly::one(1),
        format!("T(n+1) = ({}) T(n) + ({}) T(n-1)", xv.format(&cheb.lead), xv.format(&cheb.trail)),
    );

    match skein.map(|p| map_t_squared(p, &two_x)) {
        Ok(image) => rep.check(
            "t^2 -> 2x",
            image == cheb,
            format!("image ({}, {}) vs ({}, {})", xv.format(&image.lead), xv.format(&image.trail), xv.format(&cheb.lead), xv.format(&cheb.trail)),
        ),
        Err(e) => rep.check("t^2 -> 2x", false, e.to_string()),
    };

    match x_substitution_identity() {
        Ok(y) => {
            rep.pass("x1*x4-x2*x3", cl.format_fraction(&y));
            let rhs = cl
                .parse("2x1^2+2x2^2+2")
                .and_then(|n| n.div_exact(&cl.parse("x1*x2")?))
                .expect("monomial divisor");
            rep.check("t^2 substitution", y.scale(&2.into()) == rhs, format!("2(x1*x4-x2*x3) = {}", cl.format_fraction(&rhs)));

            // the Chebyshev recurrence with x = x1*x4 - x2*x3, expanded in (x1, x2)
            let one = LaurentPoly::one(2);
            let table: Vec<LaurentPoly> = chebyshev_table(8)
                .iter()
                .map(|p| p.substitute(0, &y, &one).expect("polynomial in y"))
                .collect();
            let two_y = y.scale(&2.into());
            let ok = (1..8).all(|n| table[n + 1] == &(&two_y * &table[n]) - &table[n - 1]);
            rep.check("cluster recurrence", ok, "T(n+1) = 2(x1*x4-x2*x3) T(n) - T(n-1) for n < 8");
        }
        Err(e) => rep.fail("x1*x4-x2*x3", e.to_string()),
    }

    // roles: W(L) <- V_n, W(L+) <- V_{n-1}, W(L-) <- V_{n+1}
    let chain = torus_chain(11);
    let ok = (1..=10).all(|n| {
        let wl = w_transform(&chain[n], Role::Base);
        let wp = w_transform(&chain[n - 1], Role::Plus);
        let wm = w_transform(&chain[n + 1], Role::Minus);
        wl == &(&skein.lead * &wp) + &(&skein.trail * &wm)
    });
    rep.check("w-space chain", ok, "W(L) = t^2 W(L+) - W(L-) on the torus chain, n <= 10");
    rep
}
