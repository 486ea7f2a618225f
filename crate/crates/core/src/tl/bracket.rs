use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{ExponentVector, LaurentPoly, Vars};
use crate::skein::JonesPolynomial;

use super::algebra::TlAlgebra;
use super::braid::BraidWord;

/// Largest number of crossings accepted by the state sum.
pub const MAX_CROSSINGS: usize = 24;

/// The calibration target: Jones polynomial of the trefoil in the
/// convention used by the torus chain.
pub const TREFOIL: &str = "-t^4+t^3+t";

/// `A^k` in the one-variable ring of `A`.
fn a_pow(k: i64) -> LaurentPoly {
    LaurentPoly::var_pow_half(1, 0, 2 * k)
}

/// Loop value `-A^2 - A^-2`.
pub fn delta_a() -> LaurentPoly {
    -&(&a_pow(2) + &a_pow(-2))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Kauffman bracket of the braid closure, normalised so the unknot is 1.
///
/// Each crossing `sigma_i` resolves as `A * identity + A^-1 * E_i` (inverse
/// letters swap the two weights). Every state is enumerated.
pub fn kauffman_bracket(w: &BraidWord) -> Result<LaurentPoly> {
    let k = w.len();
    if k > MAX_CROSSINGS {
        return Err(Error::Unsupported(format!("{k} crossings exceed the state-sum limit of {MAX_CROSSINGS}")));
    }
    let n = w.strands();
    if k == 0 {
        return Ok(delta_a().pow(n as u32 - 1));
    }
    // node (level, strand); level k is glued back to level 0
    let node = |level: usize, strand: usize| (level % k) * n + strand;
    let mut tally: HashMap<(i64, usize), u64> = HashMap::new();
    for state in 0u64..(1u64 << k) {
        let mut uf = UnionFind::new(k * n);
        let mut a_exp = 0i64;
        for (level, &g) in w.letters().iter().enumerate() {
            let c = g.unsigned_abs() as usize - 1;
            let smooth_e = state >> level & 1 == 1;
            a_exp += match (g > 0, smooth_e) {
                (true, false) | (false, true) => 1,
                _ => -1,
            };
            for j in 0..n {
                if !smooth_e || (j != c && j != c + 1) {
                    uf.union(node(level, j), node(level + 1, j));
                }
            }
            if smooth_e {
                uf.union(node(level, c), node(level, c + 1));
                uf.union(node(level + 1, c), node(level + 1, c + 1));
            }
        }
        let loops = (0..k * n).filter(|&x| uf.find(x) == x).count();
        *tally.entry((a_exp, loops)).or_default() += 1;
    }
    let delta = delta_a();
    let max_loops = tally.keys().map(|&(_, l)| l).max().unwrap_or(1);
    let mut pows = vec![LaurentPoly::one(1)];
    for _ in 1..max_loops {
        let next = pows.last().expect("non-empty") * &delta;
        pows.push(next);
    }
    let mut acc = LaurentPoly::zero(1);
    let mut keys: Vec<_> = tally.into_iter().collect();
    keys.sort();
    for ((a_exp, loops), count) in keys {
        acc = &acc + &(&a_pow(a_exp) * &pows[loops - 1]).scale(&count.into());
    }
    Ok(acc)
}

/// The same bracket computed as a product in the diagram algebra with loop
/// value `delta_A`, then closed up.
pub fn bracket_via_tl(w: &BraidWord) -> Result<LaurentPoly> {
    let n = w.strands();
    let alg = TlAlgebra::new(n, delta_a());
    let mut acc = alg.identity();
    for &g in w.letters() {
        let e = alg.generator(g.unsigned_abs() as usize)?;
        let (id_w, e_w) = if g > 0 { (a_pow(1), a_pow(-1)) } else { (a_pow(-1), a_pow(1)) };
        let factor = alg.identity().scale(&id_w).try_add(&e.scale(&e_w))?;
        acc = alg.compose(&acc, &factor)?;
    }
    let tr = alg.markov_trace(&acc)?;
    Ok(tr.num)
}

/// Rewrites a polynomial in `A` as one in `t = A^-4`.
fn a_to_t(p: &LaurentPoly) -> Result<LaurentPoly> {
    for (e, _) in p.terms() {
        let k = e.half_units()[0] / 2;
        if k % 2 != 0 {
            return Err(Error::ResultNotHalfIntegral(k));
        }
    }
    Ok(p.map_exponents(1, |e| ExponentVector::from_half_units(vec![-e.half_units()[0] / 4])))
}

/// `(-A)^(-3 w) <b>` with `t = A^-4`, in the raw state-sum chirality.
pub fn jones_via_bracket(w: &BraidWord) -> Result<JonesPolynomial> {
    let writhe = w.exponent_sum();
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let normalised = (&a_pow(-3 * writhe) * &kauffman_bracket(w)?).scale(&sign.into());
    JonesPolynomial::new(a_to_t(&normalised)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chirality {
    /// The raw bracket already matches the torus-chain convention.
    Direct,
    /// Results are mapped through `t -> 1/t`.
    Mirrored,
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chirality::Direct => "direct",
            Chirality::Mirrored => "mirrored (t -> 1/t)",
        })
    }
}

/// Decides the chirality once, by evaluating the closure of `sigma_1^3`.
pub fn calibrate_chirality() -> Result<Chirality> {
    let raw = jones_via_bracket(&BraidWord::torus(3))?;
    let target = JonesPolynomial::parse(TREFOIL)?;
    if raw == target {
        Ok(Chirality::Direct)
    } else if raw.mirror() == target {
        Ok(Chirality::Mirrored)
    } else {
        Err(Error::IdentityFailure(format!(
            "trefoil bracket gives {raw}, which is neither {target} nor its mirror"
        )))
    }
}

/// Jones polynomial of a braid closure in the calibrated chirality.
pub fn jones_of_braid(w: &BraidWord) -> Result<JonesPolynomial> {
    let raw = jones_via_bracket(w)?;
    Ok(match calibrate_chirality()? {
        Chirality::Direct => raw,
        Chirality::Mirrored => raw.mirror(),
    })
}

/// Formats a polynomial in `A`.
pub fn format_bracket(p: &LaurentPoly) -> String {
    Vars::a().format(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::torus_chain;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn a(s: &str) -> LaurentPoly {
        Vars::a().parse(s).unwrap()
    }

    #[test]
    fn small_brackets() {
        assert_eq!(kauffman_bracket(&BraidWord::identity(1).unwrap()).unwrap(), LaurentPoly::one(1));
        assert_eq!(kauffman_bracket(&BraidWord::torus(1)).unwrap(), a("-A^3"));
        assert_eq!(kauffman_bracket(&BraidWord::torus(-1)).unwrap(), a("-A^-3"));
        assert_eq!(kauffman_bracket(&BraidWord::torus(0)).unwrap(), a("-A^2-A^-2"));
    }

    #[test]
    fn trefoil_state_sum_by_hand() {
        // 8 states of sigma_1^3: j E-smoothings weigh A^(3-2j) with C(3,j)
        // copies and close to j loops (2 loops when j = 0).
        let d = delta_a();
        let expected = &(&(&a("A^3") * &d) + &a("3A")) + &(&(&a("3A^-1") * &d) + &(&a("A^-3") * &d.pow(2)));
        assert_eq!(expected, a("-A^5-A^-3+A^-7"));
        assert_eq!(kauffman_bracket(&BraidWord::torus(3)).unwrap(), expected);
    }

    #[test]
    fn state_sum_matches_tl_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for strands in 1..=4 {
            for len in 0..=6 {
                if strands == 1 && len > 0 {
                    continue;
                }
                let w = BraidWord::random(&mut rng, strands, len).unwrap();
                assert_eq!(kauffman_bracket(&w).unwrap(), bracket_via_tl(&w).unwrap(), "{w}");
            }
        }
    }

    #[test]
    fn unknot_diagrams() {
        for w in ["1", "-1", "1,2", "1,-2,-3", "1,-1"] {
            let strands = if w.contains('3') { 4 } else { 3 };
            let v = jones_via_bracket(&BraidWord::parse(strands, w).unwrap()).unwrap();
            let comps = BraidWord::parse(strands, w).unwrap().components();
            let expect = BigInt::from(-2).pow(comps as u32 - 1);
            assert_eq!(v.eval_at_one(), expect.into(), "{w}");
        }
        assert_eq!(jones_via_bracket(&BraidWord::parse(3, "1,2").unwrap()).unwrap(), JonesPolynomial::unknot());
    }

    #[test]
    fn chirality_and_mirror() {
        let c = calibrate_chirality().unwrap();
        let trefoil = JonesPolynomial::parse(TREFOIL).unwrap();
        let (word, other) = match c {
            Chirality::Direct => (BraidWord::torus(3), BraidWord::torus(-3)),
            Chirality::Mirrored => (BraidWord::torus(-3), BraidWord::torus(3)),
        };
        assert_eq!(jones_via_bracket(&word).unwrap(), trefoil);
        assert_eq!(jones_via_bracket(&other).unwrap(), trefoil.mirror());
    }

    #[test]
    fn agrees_with_torus_chain() {
        let chain = torus_chain(8);
        for n in 0..=8 {
            let v = jones_of_braid(&BraidWord::torus(n as i32)).unwrap();
            assert_eq!(v, chain[n], "n={n}");
        }
    }

    #[test]
    fn crossing_limit() {
        let long = BraidWord::torus(MAX_CROSSINGS as i32 + 1);
        assert!(matches!(kauffman_bracket(&long), Err(Error::Unsupported(_))));
    }

    #[test]
    fn odd_power_is_rejected() {
        assert_eq!(a_to_t(&a("A")), Err(Error::ResultNotHalfIntegral(1)));
        assert_eq!(a_to_t(&a("A^-4")).unwrap(), Vars::t().parse("t").unwrap());
        assert_eq!(a_to_t(&a("A^2")).unwrap(), Vars::t().parse("t^(-1/2)").unwrap());
    }
}
