//! Brute-force oracle against the inclusion–exclusion engine.

use num_bigint::BigInt;
use num_rational::BigRational;

use bingo_core::distribution::{
    cdf_at, cdf_at_exact, eval_reliability, expectation_by_sum, expectation_closed_form, pmf_at_exact,
    ReliabilityPolynomial,
};
use bingo_core::oracle::{
    exact_cdf_by_subsets, exact_expectation_by_enumeration, exact_reliability_by_grids,
    exact_reliability_by_grids_rational,
};
use bingo_core::rational::from_ints;
use bingo_core::{
    coverage_profile, generate_card, geometry_lines, lines_of, s_value, union_lines, CardSpec, PatternFamily,
};

#[test]
fn cdf_and_pmf_match_for_three_by_three() {
    for free_space in [false, true] {
        for m in [3, 4, 5] {
            let spec = CardSpec::new(3, m).unwrap().with_free_space(free_space);
            let card = generate_card(spec, 1234).unwrap();
            let lines = lines_of(&card, &PatternFamily::StandardLines).unwrap();
            let p = coverage_profile(&lines, 1).unwrap();
            let pool = spec.pool_size();
            for k in 0..=pool {
                let truth = exact_cdf_by_subsets(&lines, k).unwrap();
                assert_eq!(cdf_at_exact(&p, pool, k).unwrap(), truth, "m={m} k={k}");
                if k > 0 {
                    let below = exact_cdf_by_subsets(&lines, k - 1).unwrap();
                    assert_eq!(pmf_at_exact(&p, pool, k).unwrap(), truth - below);
                }
            }
        }
    }
}

#[test]
fn first_completion_probability() {
    let spec = CardSpec::new(3, 3).unwrap().with_free_space(false);
    let lines = lines_of(&generate_card(spec, 0).unwrap(), &PatternFamily::StandardLines).unwrap();
    let p = coverage_profile(&lines, 1).unwrap();
    assert_eq!(exact_cdf_by_subsets(&lines, 3).unwrap(), from_ints(8, 84));
    assert_eq!(cdf_at_exact(&p, 9, 3).unwrap(), from_ints(2, 21));
    assert!((cdf_at(&p, 9, 3).unwrap() - 2.0 / 21.0).abs() < 1e-15);
}

#[test]
fn expectation_matches_enumeration() {
    for free_space in [false, true] {
        let spec = CardSpec::new(3, 3).unwrap().with_free_space(free_space);
        let lines = lines_of(&generate_card(spec, 5).unwrap(), &PatternFamily::StandardLines).unwrap();
        let truth = exact_expectation_by_enumeration(&lines, 9).unwrap();
        let p = coverage_profile(&lines, 1).unwrap();
        assert_eq!(expectation_closed_form(&s_value(&p), 3, 3), truth);
        assert_eq!(expectation_by_sum(&p, 9).unwrap(), truth);
        // free square: (9+1)(1 - 43/70) = 27/7
        if free_space {
            assert_eq!(truth, from_ints(27, 7));
        }
    }
}

#[test]
fn duplicate_cards_give_single_card_value() {
    let spec = CardSpec::new(3, 3).unwrap().with_free_space(false);
    let card = generate_card(spec, 8).unwrap();
    let one = lines_of(&card, &PatternFamily::StandardLines).unwrap();
    let two = union_lines(&[card.clone(), card], &PatternFamily::StandardLines).unwrap();
    assert_eq!(
        exact_expectation_by_enumeration(&one, 9).unwrap(),
        exact_expectation_by_enumeration(&two, 9).unwrap()
    );
}

#[test]
fn multiplayer_pool_fifteen() {
    let spec = CardSpec::new(3, 5).unwrap().with_free_space(false);
    let cards = bingo_core::generate_cards(spec, 3, 77).unwrap();
    let lines = union_lines(&cards, &PatternFamily::StandardLines).unwrap();
    let p = coverage_profile(&lines, 1).unwrap();
    assert_eq!(
        expectation_closed_form(&s_value(&p), 3, 5),
        exact_expectation_by_enumeration(&lines, 15).unwrap()
    );
}

#[test]
fn reliability_matches_grid_enumeration() {
    for free_space in [false, true] {
        let lines = geometry_lines(3, &PatternFamily::StandardLines, free_space).unwrap();
        let p = coverage_profile(&lines, 1).unwrap();
        let poly = ReliabilityPolynomial::new(&p);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(poly.eval_exact(&half), exact_reliability_by_grids_rational(&lines, &half).unwrap());
        for x in [0.0, 0.1, 0.5, 0.77, 1.0] {
            let (value, q) = eval_reliability(&p, x).unwrap();
            let truth = exact_reliability_by_grids(&lines, x).unwrap();
            assert!((value - truth).abs() < 1e-13, "p={x}");
            assert!((q - (1.0 - truth)).abs() < 1e-13);
        }
    }
    // corners on a 5x5 card: the only winning marking is all four
    let corners = geometry_lines(5, &PatternFamily::FourCorners, true).unwrap();
    let p = coverage_profile(&corners, 1).unwrap();
    let x = 0.3f64;
    assert!((eval_reliability(&p, x).unwrap().0 - x.powi(4)).abs() < 1e-15);
}
