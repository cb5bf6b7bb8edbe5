//! Randomised invariants of the model, the enumerator and the distribution.

use proptest::prelude::*;

use bingo_core::distribution::{cdf_at, cdf_at_exact, pmf_at, pmf_at_exact};
use bingo_core::rational::to_f64;
use bingo_core::{
    coverage_profile, generate_card, generate_cards, geometry_lines, s_value, union_lines, CardSpec, LineSet,
    PatternFamily,
};

/// Independent enumerator: every subset bitmask, union rebuilt from scratch.
fn naive_profile(lines: &LineSet) -> Vec<i64> {
    let mut counts = vec![0i64; lines.universe_size() + 1];
    let l = lines.lines();
    for mask in 1u32..(1u32 << l.len()) {
        let mut union = std::collections::BTreeSet::new();
        for (i, line) in l.iter().enumerate() {
            if mask >> i & 1 == 1 {
                union.extend(line.numbers.iter().copied());
            }
        }
        counts[union.len()] += if mask.count_ones() % 2 == 1 { 1 } else { -1 };
    }
    counts
}

fn line_sets(max_lines: usize) -> impl Strategy<Value = LineSet> {
    (4usize..40).prop_flat_map(move |u| {
        prop::collection::vec(prop::collection::vec(1..=u as u32, 1..6), 1..=max_lines)
            .prop_map(move |raw| LineSet::new(u, raw).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dfs_matches_naive(lines in line_sets(10)) {
        let p = coverage_profile(&lines, 1).unwrap();
        prop_assert_eq!(p.counts(), &naive_profile(&lines)[..]);
        prop_assert_eq!(p.total(), 1);
    }

    #[test]
    fn support_window(lines in line_sets(12)) {
        let p = coverage_profile(&lines, 1).unwrap();
        let lo = p.min_support().unwrap();
        let hi = p.max_support().unwrap();
        prop_assert!(lo >= lines.min_line_size());
        prop_assert!(hi <= lines.covered().len());
    }

    #[test]
    fn permutation_and_workers(lines in line_sets(12), rot in 0usize..12, workers in 1usize..9) {
        let p = coverage_profile(&lines, 1).unwrap();
        let mut raw: Vec<Vec<u32>> = lines.lines().iter().map(|l| l.numbers.clone()).collect();
        let r = rot % raw.len();
        raw.rotate_left(r);
        raw.reverse();
        let shuffled = LineSet::new(lines.universe_size(), raw).unwrap();
        prop_assert_eq!(&coverage_profile(&shuffled, 1).unwrap(), &p);
        prop_assert_eq!(&coverage_profile(&lines, workers).unwrap(), &p);
    }

    #[test]
    fn float_path_tracks_exact(lines in line_sets(8), k_frac in 0.0f64..=1.0) {
        let p = coverage_profile(&lines, 1).unwrap();
        let pool = lines.universe_size();
        let k = ((pool as f64) * k_frac).round() as usize;
        let exact = to_f64(&cdf_at_exact(&p, pool, k).unwrap());
        prop_assert!((cdf_at(&p, pool, k).unwrap() - exact).abs() <= 1e-9 * exact.abs().max(1.0));
        if k >= 1 {
            let exact = to_f64(&pmf_at_exact(&p, pool, k).unwrap());
            prop_assert!((pmf_at(&p, pool, k).unwrap() - exact).abs() <= 1e-9 * exact.abs().max(1.0));
        }
    }

    #[test]
    fn cards_respect_column_ranges(n in prop::sample::select(vec![3usize, 5, 7]), extra in 0usize..10, seed: u64) {
        let spec = CardSpec::new(n, n + extra).unwrap();
        let card = generate_card(spec, seed).unwrap();
        for col in 0..n {
            let (lo, hi) = spec.column_range(col);
            let mut values: Vec<u32> = (0..n).map(|r| card.get(r, col)).collect();
            prop_assert!(values.iter().all(|v| (lo..=hi).contains(v)));
            values.sort_unstable();
            values.dedup();
            prop_assert_eq!(values.len(), n);
        }
        prop_assert_eq!(generate_card(spec, seed).unwrap(), card);
    }

    #[test]
    fn union_is_order_free_and_idempotent(seed: u64, players in 1usize..5) {
        let spec = CardSpec::new(3, 4).unwrap();
        let cards = generate_cards(spec, players, seed).unwrap();
        let set = union_lines(&cards, &PatternFamily::StandardLines).unwrap();
        prop_assert!(set.len() <= players * 8);
        let mut reversed = cards.clone();
        reversed.reverse();
        let other = union_lines(&reversed, &PatternFamily::StandardLines).unwrap();
        prop_assert_eq!(other.number_sets(), set.number_sets());
        let again = LineSet::from_lines(set.universe_size(), set.lines().to_vec()).unwrap();
        prop_assert_eq!(again, set);
    }
}

#[test]
fn one_minus_s_increases_with_n() {
    // exact values through n = 9; n = 11 is covered by the acceptance suite
    let mut prev = 0.0;
    for n in [3, 5, 7, 9] {
        let p = coverage_profile(&geometry_lines(n, &PatternFamily::StandardLines, true).unwrap(), 1).unwrap();
        let v = 1.0 - to_f64(&s_value(&p));
        assert!(v > prev && v < 1.0, "n={n}: {v}");
        prev = v;
    }
}

#[test]
fn q_strictly_inside_unit_interval() {
    use bingo_core::distribution::eval_reliability;
    for n in [3, 5] {
        let p = coverage_profile(&geometry_lines(n, &PatternFamily::StandardLines, true).unwrap(), 1).unwrap();
        for i in 1..1000 {
            let (_, q) = eval_reliability(&p, i as f64 / 1000.0).unwrap();
            assert!(q > 0.0 && q < 1.0);
        }
    }
}
