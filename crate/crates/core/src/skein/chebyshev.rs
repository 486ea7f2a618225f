use std::ops::RangeInclusive;

use crate::cluster::{rank2_sequence, triangulation_matrix, Seed};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Vars};

/// Chebyshev polynomial of the first kind `T_n(x)` in one variable.
pub fn chebyshev_t(n: usize) -> LaurentPoly {
    chebyshev_table(n).pop().expect("non-empty")
}

/// `T_0, ..., T_n` from `T_{k+1} = 2x T_k - T_{k-1}`.
pub fn chebyshev_table(n: usize) -> Vec<LaurentPoly> {
    let two_x = LaurentPoly::var(1, 0).scale(&2.into());
    let mut table = vec![LaurentPoly::one(1), LaurentPoly::var(1, 0)];
    while table.len() <= n {
        let k = table.len();
        let next = &(&two_x * &table[k - 1]) - &table[k - 2];
        table.push(next);
    }
    table.truncate(n + 1);
    table
}

/// Checks `T_{n+1} = 2x T_n - T_{n-1}` (for `n >= 1`) and the composition law
/// `T_m(T_n(x)) = T_{mn}(x)`.
pub fn cheb_self_check(m: usize, n: usize) -> bool {
    let table = chebyshev_table((m * n).max(n + 1));
    let two_x = LaurentPoly::var(1, 0).scale(&2.into());
    let recurrence = n == 0 || table[n + 1] == &(&two_x * &table[n]) - &table[n - 1];
    let composed = table[m].substitute(0, &table[n], &LaurentPoly::one(1));
    recurrence && composed.map(|c| c == table[m * n]).unwrap_or(false)
}

/// The quantity `x1 x4 - x2 x3` built from two seed mutations of the sphere
/// seed, checked against `(x1^2 + x2^2 + 1)/(x1 x2)`.
pub fn x_substitution_identity() -> Result<LaurentPoly> {
    let seed = Seed::initial(triangulation_matrix(0, 2)?);
    let s1 = seed.mutate(0)?;
    let s2 = s1.mutate(1)?;
    let (x1, x2) = (&seed.cluster()[0], &seed.cluster()[1]);
    let (x3, x4) = (&s2.cluster()[0], &s2.cluster()[1]);
    let value = &(x1 * x4) - &(x2 * x3);

    let x = Vars::cluster(2);
    let expected = x.parse("x1^2+x2^2+1")?.div_exact(&x.parse("x1*x2")?)?;
    if value != expected {
        return Err(Error::IdentityFailure(format!(
            "x1*x4 - x2*x3 = {} but expected {}",
            x.format_fraction(&value),
            x.format_fraction(&expected)
        )));
    }
    Ok(value)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub label: String,
    pub value: LaurentPoly,
}

/// Elements of the rank-2 `(2,2)` basis: cluster monomials
/// `x_i^p x_{i+1}^q` for `i` in `window` and `T_n(x1 x4 - x2 x3)` for
/// `1 <= n <= n_max`, each expanded in `(x1, x2)`. Duplicate monomials that
/// arise from overlapping windows are listed once.
pub fn basis_elements(window: RangeInclusive<usize>, p_max: u32, q_max: u32, n_max: usize) -> Result<Vec<BasisElement>> {
    if *window.start() == 0 {
        return Err(Error::Unsupported("cluster variables are labelled from x1".into()));
    }
    let top = (*window.end() + 1).max(4);
    let xs = rank2_sequence(2, 2, top)?;
    let mut out: Vec<BasisElement> = Vec::new();
    for i in window {
        for p in 0..=p_max {
            for q in 0..=q_max {
                let value = &xs[i - 1].pow(p) * &xs[i].pow(q);
                if out.iter().any(|e| e.value == value) {
                    continue;
                }
                out.push(BasisElement { label: format!("x{i}^{p}*x{}^{q}", i + 1), value });
            }
        }
    }
    let y = &(&xs[0] * &xs[3]) - &(&xs[1] * &xs[2]);
    let one = LaurentPoly::one(2);
    for (n, t) in chebyshev_table(n_max).iter().enumerate().skip(1) {
        let value = t.substitute(0, &y, &one)?;
        out.push(BasisElement { label: format!("T{n}(x1*x4-x2*x3)"), value });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    /// `T_n(x) = sum_k C(n, 2k) (x^2 - 1)^k x^(n-2k)`, independent of the
    /// recurrence.
    fn closed_form(n: usize) -> LaurentPoly {
        let x = LaurentPoly::var(1, 0);
        let x2m1 = &x.pow(2) - &LaurentPoly::one(1);
        let mut acc = LaurentPoly::zero(1);
        for k in 0..=n / 2 {
            let binom = binomial(n, 2 * k);
            acc = &acc + &(&x2m1.pow(k as u32) * &x.pow((n - 2 * k) as u32)).scale(&binom);
        }
        acc
    }

    fn binomial(n: usize, k: usize) -> BigInt {
        (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn small_values() {
        let x = Vars::x();
        assert_eq!(chebyshev_t(0), LaurentPoly::one(1));
        assert_eq!(chebyshev_t(1), x.parse("x").unwrap());
        assert_eq!(chebyshev_t(2), x.parse("2x^2-1").unwrap());
        assert_eq!(closed_form(5), x.parse("16x^5-20x^3+5x").unwrap());
        assert_eq!(chebyshev_t(5), x.parse("16x^5-20x^3+5x").unwrap());
    }

    #[test]
    fn recurrence_matches_closed_form() {
        for n in 0..=16 {
            assert_eq!(chebyshev_t(n), closed_form(n), "T_{n}");
        }
    }

    #[test]
    fn self_checks() {
        assert!(cheb_self_check(2, 3));
        for k in 0..8 {
            assert!(cheb_self_check(1, k));
        }
        assert!(cheb_self_check(3, 4));
        assert!(cheb_self_check(0, 5));
        let x = Vars::x();
        let two_x = x.parse("2x").unwrap();
        assert_eq!(&(&two_x * &chebyshev_t(4)) - &chebyshev_t(3), chebyshev_t(5));
    }

    #[test]
    fn substitution_identity() {
        let y = x_substitution_identity().unwrap();
        let x = Vars::cluster(2);
        assert_eq!(y, x.parse("x1*x2^-1+x2*x1^-1+x1^-1*x2^-1").unwrap());
        assert_eq!(y.eval_rational(&crate::laurent::rational_point(&[1, 1])).unwrap(), num_rational::BigRational::from_integer(3.into()));
        let rhs = x.parse("2x1^2+2x2^2+2").unwrap().div_exact(&x.parse("x1*x2").unwrap()).unwrap();
        assert_eq!(y.scale(&2.into()), rhs);
    }

    #[test]
    fn basis_examples() {
        let x = Vars::cluster(2);
        let basis = basis_elements(1..=1, 0, 0, 2).unwrap();
        assert_eq!(basis[0].value, LaurentPoly::one(2));
        assert_eq!(basis[1].value, x_substitution_identity().unwrap());
        let t2 = &basis[2].value;
        let numer = x.parse("2x1^4+2x2^4+3x1^2*x2^2+4x1^2+4x2^2+2").unwrap();
        assert_eq!(t2, &numer.div_exact(&x.parse("x1^2*x2^2").unwrap()).unwrap());
        assert!(t2.all_coefficients_positive());
    }

    #[test]
    fn basis_window_dedupes() {
        let basis = basis_elements(1..=2, 1, 1, 0).unwrap();
        // i=1: 1, x2, x1, x1x2; i=2: (1), x3, (x2), x2x3
        assert_eq!(basis.len(), 6);
        assert!(basis_elements(0..=1, 1, 1, 0).is_err());
    }

    #[test]
    fn chebyshev_basis_positive_up_to_ten() {
        let basis = basis_elements(1..=1, 0, 0, 10).unwrap();
        for e in basis.iter().skip(1) {
            assert!(e.value.all_coefficients_positive(), "{}", e.label);
            assert!(e.value.has_integral_exponents());
        }
    }
}
