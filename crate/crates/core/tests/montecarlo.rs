//! Simulator against exact values.

use bingo_core::distribution::{eval_reliability, expectation_closed_form};
use bingo_core::montecarlo::{estimate_reliability, run_histogram, run_trials, SimConfig, SimSource};
use bingo_core::oracle::exact_expectation_by_enumeration;
use bingo_core::rational::to_f64;
use bingo_core::{coverage_profile, generate_card, geometry_lines, lines_of, s_value, CardSpec, PatternFamily};

#[test]
fn determinism_across_workers() {
    let spec = CardSpec::new(5, 9).unwrap();
    let source = SimSource::Cards { spec, players: 3, family: PatternFamily::StandardLines, master_seed: 4 };
    let cfg = |w| SimConfig { source: source.clone(), trials: 30_000, seed: 11, workers: w };
    let base = run_trials(&cfg(1)).unwrap();
    for w in [4, 16] {
        assert_eq!(run_trials(&cfg(w)).unwrap(), base);
    }
}

#[test]
fn support_bounds() {
    for free_space in [false, true] {
        let spec = CardSpec::new(3, 6).unwrap().with_free_space(free_space);
        let lines = lines_of(&generate_card(spec, 2).unwrap(), &PatternFamily::StandardLines).unwrap();
        let hist = run_histogram(&SimConfig::new(lines.clone(), 50_000, 6)).unwrap();
        let min = lines.min_line_size();
        assert!(hist[..min].iter().all(|&c| c == 0));
        assert_eq!(hist.len(), 19);
    }
}

#[test]
fn mean_matches_oracle_within_envelope() {
    let spec = CardSpec::new(3, 3).unwrap().with_free_space(false);
    let lines = lines_of(&generate_card(spec, 21).unwrap(), &PatternFamily::StandardLines).unwrap();
    let exact = to_f64(&exact_expectation_by_enumeration(&lines, 9).unwrap());
    let stats = run_trials(&SimConfig::new(lines, 1_000_000, 8)).unwrap();
    assert!((stats.mean - exact).abs() <= 4.0 * stats.standard_error);
    assert!(stats.ci95.0 < stats.mean && stats.mean < stats.ci95.1);
}

#[test]
fn error_envelope_at_each_sample_size() {
    let lines = geometry_lines(5, &PatternFamily::StandardLines, true).unwrap();
    let p = coverage_profile(&lines, 1).unwrap();
    let exact = to_f64(&expectation_closed_form(&s_value(&p), 5, 5));
    for trials in [1_000, 10_000, 100_000] {
        let stats = run_trials(&SimConfig::new(lines.clone(), trials, 99)).unwrap();
        assert!((stats.mean - exact).abs() <= 4.0 * stats.standard_error, "trials={trials}");
    }
}

#[test]
fn reliability_estimate_matches_polynomial() {
    let lines = geometry_lines(3, &PatternFamily::StandardLines, false).unwrap();
    let p = coverage_profile(&lines, 1).unwrap();
    let trials = 1_000_000u64;
    let estimate = estimate_reliability(&lines, 0.5, trials, 12).unwrap();
    let (_, q) = eval_reliability(&p, 0.5).unwrap();
    let se = (q * (1.0 - q) / trials as f64).sqrt();
    assert!((estimate - q).abs() <= 4.0 * se, "{estimate} vs {q}");
}
