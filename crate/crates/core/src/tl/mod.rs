//! Temperley–Lieb diagrams, the Kauffman bracket of braid closures, and the
//! trace formula for the Jones polynomial. This module is the independent
//! check on the skein-relation values.

mod algebra;
mod braid;
mod bracket;
mod trace_formula;
mod matching;
mod verify;

pub use algebra::{TlAlgebra, TlElement};
pub use braid::BraidWord;
pub use bracket::{
    bracket_via_tl, calibrate_chirality, delta_a, format_bracket, jones_of_braid, jones_via_bracket, kauffman_bracket,
    Chirality, MAX_CROSSINGS, TREFOIL,
};
pub use trace_formula::{trace_formula_calibration, trace_formula_delta, trace_formula_trace, generator_images, DeltaSign, TraceCalibration, KAPPA_RANGE};
pub use matching::{all_matchings, count_matchings, for_each_matching, PlanarMatching};
pub use verify::{verify_markov, verify_markov_invariance, verify_oracle};
