//! The trace formula for the Jones polynomial of a braid closure, evaluated
//! literally in the diagram algebra with `delta = s (t+1)/t^(1/2)`:
//!
//! `V = (-(t+1)/t^(1/2))^(n-1) (t^(1/2))^exp(b) tr(b)`,
//! `sigma_i -> t^(1/2) ((t+1) e_i - 1)`, `e_i = E_i / delta`.
//!
//! The result is then multiplied by `t^(kappa exp(b)/2)`. With `kappa = 0`
//! the formula is taken as written; the calibration sweep finds the `kappa`
//! under which it agrees with the bracket.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::laurent::{LaurentPoly, RationalFunction};
use crate::report::Report;
use crate::skein::{t_pow, JonesPolynomial};

use super::algebra::{TlAlgebra, TlElement};
use super::braid::BraidWord;
use super::bracket::jones_of_braid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DeltaSign {
    Plus,
    Minus,
}

impl DeltaSign {
    pub fn value(self) -> i64 {
        match self {
            DeltaSign::Plus => 1,
            DeltaSign::Minus => -1,
        }
    }
}

impl fmt::Display for DeltaSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DeltaSign::Plus => "+",
            DeltaSign::Minus => "-",
        })
    }
}

/// `s (t^(1/2) + t^(-1/2))`.
pub fn trace_formula_delta(sign: DeltaSign) -> LaurentPoly {
    (&t_pow(1) + &t_pow(-1)).scale(&sign.value().into())
}

/// Images of `sigma_i` and `sigma_i^-1` as `(coefficient of E_i, coefficient
/// of 1)`. The inverse is solved in the two-dimensional algebra spanned by
/// `1` and `E` (with `E^2 = delta E`).
pub fn generator_images(sign: DeltaSign) -> Result<[(LaurentPoly, LaurentPoly); 2]> {
    let delta = trace_formula_delta(sign);
    let one = LaurentPoly::one(1);
    // sqrt(t)(t+1) e_i = sqrt(t)(t+1)/delta E_i
    let a = (&t_pow(1) * &(&t_pow(2) + &one)).div_exact(&delta)?;
    let b = -t_pow(1);
    // (aE + b)(cE + d) = 1: bd = 1, c (a delta + b) + a d = 0
    let d = one.div_exact(&b)?;
    let c = (-&(&a * &d)).div_exact(&(&(&a * &delta) + &b))?;
    Ok([(a, b), (c, d)])
}

fn letter_image(alg: &TlAlgebra, images: &[(LaurentPoly, LaurentPoly); 2], g: i32) -> Result<TlElement> {
    let (e_coeff, id_coeff) = if g > 0 { &images[0] } else { &images[1] };
    let e = alg.generator(g.unsigned_abs() as usize)?;
    alg.identity().scale(id_coeff).try_add(&e.scale(e_coeff))
}

/// Evaluates the trace formula with calibration exponent `kappa`.
pub fn trace_formula_trace(w: &BraidWord, kappa: i64, sign: DeltaSign) -> Result<JonesPolynomial> {
    let n = w.strands();
    let delta = trace_formula_delta(sign);
    let alg = TlAlgebra::new(n, delta);
    let images = generator_images(sign)?;
    let mut acc = alg.identity();
    for &g in w.letters() {
        acc = alg.compose(&acc, &letter_image(&alg, &images, g)?)?;
    }
    let tr = alg.markov_trace(&acc)?;
    let exp = w.exponent_sum();
    let prefactor = -&(&t_pow(1) + &t_pow(-1));
    let scalar = &(&prefactor.pow(n as u32 - 1) * &t_pow(exp)) * &t_pow(kappa * exp);
    let value = RationalFunction::from_laurent(scalar).mul(&tr).to_laurent()?;
    JonesPolynomial::new(value)
}

/// Result of sweeping `kappa` and the sign of `delta`.
#[derive(Clone, Debug)]
pub struct TraceCalibration {
    /// `(kappa, sign, words matched)` for every combination tried.
    pub table: Vec<(i64, DeltaSign, usize)>,
    pub words: Vec<BraidWord>,
    pub report: Report,
}

impl TraceCalibration {
    /// Combinations that match the bracket on every calibration word.
    pub fn matches(&self) -> Vec<(i64, DeltaSign)> {
        self.table
            .iter()
            .filter(|&&(_, _, hits)| hits == self.words.len())
            .map(|&(k, s, _)| (k, s))
            .collect()
    }

    /// The calibration exponent, when exactly one value of `kappa` matches.
    pub fn kappa(&self) -> Option<i64> {
        let mut ks: Vec<i64> = self.matches().iter().map(|&(k, _)| k).collect();
        ks.dedup();
        (ks.len() == 1).then(|| ks[0])
    }
}

pub const KAPPA_RANGE: std::ops::RangeInclusive<i64> = -2..=2;

/// Sweeps `kappa` over [`KAPPA_RANGE`] and both signs of `delta` on
/// `sigma_1^(+-2)`, `sigma_1^(+-3)`, checks the identity braids at
/// `kappa = 0`, and confirms the selected `kappa` on random words.
pub fn trace_formula_calibration(random_words: usize, rng_seed: u64) -> TraceCalibration {
    let mut rep = Report::new("trace-formula");
    let words: Vec<BraidWord> = [2, -2, 3, -3].into_iter().map(BraidWord::torus).collect();

    for (strands, expected) in [(1, JonesPolynomial::unknot()), (2, JonesPolynomial::unlink2())] {
        let id = BraidWord::identity(strands).expect("strands >= 1");
        match trace_formula_trace(&id, 0, DeltaSign::Plus) {
            Ok(v) => rep.check(format!("B{strands} identity"), v == expected, format!("kappa = 0 gives {v}")),
            Err(e) => rep.check(format!("B{strands} identity"), false, e.to_string()),
        };
    }

    let oracle: Vec<Option<JonesPolynomial>> = words.iter().map(|w| jones_of_braid(w).ok()).collect();
    let mut table = Vec::new();
    for kappa in KAPPA_RANGE {
        for sign in [DeltaSign::Plus, DeltaSign::Minus] {
            let hits = words
                .iter()
                .zip(&oracle)
                .filter(|(w, o)| matches!((trace_formula_trace(w, kappa, sign), o), (Ok(v), Some(o)) if &v == o))
                .count();
            table.push((kappa, sign, hits));
        }
    }
    let cal = TraceCalibration { table, words, report: Report::new("trace-formula") };
    let matches = cal.matches();
    let signs: Vec<String> = matches.iter().map(|(_, s)| s.to_string()).collect();
    let kappa = cal.kappa();
    let sweep: Vec<String> = cal.table.iter().map(|(k, s, hits)| format!("({k},{s}) {hits}/{}", cal.words.len())).collect();
    rep.check(
        "unique kappa",
        kappa.is_some(),
        match kappa {
            Some(k) => format!("kappa = {k}, delta sign {}; sweep {}", signs.join(" and "), sweep.join(", ")),
            None => format!("no single kappa; sweep {}", sweep.join(", ")),
        },
    );

    if let Some(k) = kappa {
        let literal = trace_formula_trace(&BraidWord::torus(3), 0, DeltaSign::Plus);
        let half = literal.as_ref().map(|v| !v.poly().has_integral_exponents()).unwrap_or(false);
        rep.pass(
            "literal trefoil",
            match literal {
                Ok(v) => format!("kappa = 0 gives {v}{}", if half { " (half-integer exponents)" } else { "" }),
                Err(e) => e.to_string(),
            },
        );

        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
        let mut agree = 0;
        let mut first_bad = None;
        for i in 0..random_words {
            let strands = 2 + i % 2;
            let w = BraidWord::random(&mut rng, strands, 1 + i % 5).expect("strands >= 2");
            let ok = matches!((trace_formula_trace(&w, k, matches[0].1), jones_of_braid(&w)), (Ok(a), Ok(b)) if a == b);
            if ok {
                agree += 1;
            } else if first_bad.is_none() {
                first_bad = Some(w);
            }
        }
        rep.check(
            "random words",
            agree == random_words,
            match first_bad {
                None => format!("{agree}/{random_words} agree with the bracket at kappa = {k}"),
                Some(w) => format!("{agree}/{random_words} agree; first disagreement {w}"),
            },
        );
    }
    TraceCalibration { report: rep, ..cal }
}
