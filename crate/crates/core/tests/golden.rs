use skein_cluster::bratteli::{build_diagram, catalan_check, DiagramKind};
use skein_cluster::cluster::{rank2_sequence, triangulation_matrix, verify_involution, verify_laurent, Seed};
use skein_cluster::skein::{torus_chain, verify_correspondence, verify_skein_chain, x_substitution_identity};
use skein_cluster::tl::{count_matchings, trace_formula_calibration, jones_of_braid, verify_markov, verify_oracle, BraidWord};
use skein_cluster::{JonesPolynomial, Vars, DEFAULT_RNG_SEED};

fn v(s: &str) -> JonesPolynomial {
    JonesPolynomial::parse(s).unwrap()
}

#[test]
fn torus_chain_small_links() {
    let chain = torus_chain(4);
    assert_eq!(chain[0], v("-t^(-1/2)-t^(1/2)"));
    assert_eq!(chain[1], v("1"));
    assert_eq!(chain[2], v("-t^(5/2)-t^(1/2)"));
    assert_eq!(chain[3], v("-t^4+t^3+t"));
    assert_eq!(chain[4], v("-t^(11/2)+t^(9/2)-t^(7/2)-t^(3/2)"));
}

#[test]
fn bracket_reproduces_hopf_and_four_crossing_link() {
    assert_eq!(jones_of_braid(&BraidWord::torus(2)).unwrap(), v("-t^(5/2)-t^(1/2)"));
    assert_eq!(jones_of_braid(&BraidWord::torus(4)).unwrap(), torus_chain(4)[4]);
}

#[test]
fn rank2_first_variables() {
    let x = Vars::cluster(2);
    let xs = rank2_sequence(2, 2, 4).unwrap();
    assert_eq!(xs[2], x.parse("x2^2+1").unwrap().div_exact(&x.parse("x1").unwrap()).unwrap());
    let x4 = x.parse("x1^2+(x2^2+1)^2").unwrap().div_exact(&x.parse("x1^2*x2").unwrap()).unwrap();
    assert_eq!(xs[3], x4);
    // the same variables from seed mutation of the sphere triangulation
    let seed = Seed::initial(triangulation_matrix(0, 2).unwrap());
    let s = seed.mutate_walk(&[0, 1]).unwrap();
    assert_eq!((&s.cluster()[0], &s.cluster()[1]), (&xs[2], &xs[3]));
}

#[test]
fn cluster_side_identity() {
    let x = Vars::cluster(2);
    let expected = x.parse("x1^2+x2^2+1").unwrap().div_exact(&x.parse("x1*x2").unwrap()).unwrap();
    assert_eq!(x_substitution_identity().unwrap(), expected);
}

#[test]
fn every_suite_passes_at_default_sizes() {
    let reports = [
        verify_skein_chain(10),
        verify_correspondence(),
        verify_laurent(12),
        verify_involution(200, 4, 5, DEFAULT_RNG_SEED),
        verify_oracle(8),
        verify_markov(30, 4, 6, DEFAULT_RNG_SEED),
        trace_formula_calibration(10, DEFAULT_RNG_SEED).report,
        catalan_check(10),
    ];
    for r in reports {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn truncated_squares_count_matchings() {
    let d = build_diagram(DiagramKind::TruncatedPascal, 9).unwrap();
    for (n, dims) in d.dimension_vectors().iter().enumerate() {
        let squares: u64 = dims.iter().map(|x| u64::try_from(x * x).unwrap()).sum();
        assert_eq!(squares, count_matchings(n + 1), "level {n}");
    }
}
