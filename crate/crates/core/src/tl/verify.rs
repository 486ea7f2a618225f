use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::Report;
use crate::skein::torus_chain;

use super::braid::BraidWord;
use super::bracket::{calibrate_chirality, jones_of_braid};

/// Checks that conjugation by `trials` random words and both stabilisations
/// leave the Jones polynomial of `w` unchanged, and that `V(1)` matches the
/// component count of the braid permutation.
pub fn verify_markov_invariance<R: Rng>(w: &BraidWord, trials: usize, rng: &mut R) -> Report {
    let mut rep = Report::new(format!("markov {w}"));
    let base = match jones_of_braid(w) {
        Ok(v) => v,
        Err(e) => {
            rep.fail("base", e.to_string());
            return rep;
        }
    };
    let expected_at_one = BigRational::from_integer(BigInt::from(-2).pow(w.components() as u32 - 1));
    rep.check("V(1)", base.eval_at_one() == expected_at_one, format!("{} components", w.components()));

    if w.strands() >= 2 {
        for i in 0..trials {
            let len = rng.gen_range(1..=3);
            let g = BraidWord::random(rng, w.strands(), len).expect("strands >= 2");
            let conj = w.conjugate(&g).expect("same strands");
            let ok = jones_of_braid(&conj).map(|v| v == base).unwrap_or(false);
            rep.check(format!("conjugate {i}"), ok, format!("by {g}"));
        }
    }
    for positive in [true, false] {
        let s = w.stabilize(positive);
        let ok = jones_of_braid(&s).map(|v| v == base).unwrap_or(false);
        rep.check(if positive { "stabilize +" } else { "stabilize -" }, ok, s.to_string());
    }
    rep
}

/// Runs [`verify_markov_invariance`] on `words` random braid words with at
/// most `max_strands` strands and `max_length` letters.
pub fn verify_markov(words: usize, max_strands: usize, max_length: usize, rng_seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut rep = Report::new("markov");
    let max_strands = max_strands.max(1);
    let min_strands = max_strands.min(2);
    for _ in 0..words {
        let strands = rng.gen_range(min_strands..=max_strands);
        let len = if strands == 1 { 0 } else { rng.gen_range(0..=max_length) };
        let w = BraidWord::random(&mut rng, strands, len).expect("valid sizes");
        let sub = verify_markov_invariance(&w, 2, &mut rng);
        let ok = sub.passed();
        let detail = match sub.failures().next() {
            None => format!("{} checks", sub.checks.len()),
            Some(c) => format!("{}: {}", c.id, c.detail),
        };
        rep.check(w.to_string(), ok, detail);
    }
    rep
}

/// The calibrated bracket on `sigma_1^n` against the skein torus chain.
pub fn verify_oracle(n_max: usize) -> Report {
    let mut rep = Report::new("oracle");
    match calibrate_chirality() {
        Ok(c) => rep.pass("chirality", c.to_string()),
        Err(e) => {
            rep.fail("chirality", e.to_string());
            return rep;
        }
    };
    let chain = torus_chain(n_max);
    for n in 2..=n_max {
        match jones_of_braid(&BraidWord::torus(n as i32)) {
            Ok(v) => rep.check(format!("n={n}"), v == chain[n], v.to_string()),
            Err(e) => rep.check(format!("n={n}"), false, e.to_string()),
        };
    }
    rep
}
