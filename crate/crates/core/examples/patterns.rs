//! Other winning patterns: four corners, and a custom "X" made of both
//! diagonals, for one card and for many.
//!
//! ```bash
//! cargo run --release -p bingo-core --example patterns
//! ```

use bingo_core::distribution::expectation_closed_form;
use bingo_core::rational::to_f64;
use bingo_core::{
    coverage_profile, generate_cards, run_trials, s_value, union_lines, CardSpec, PatternFamily, SimConfig,
};

fn main() -> bingo_core::Result<()> {
    let n = 5;
    let x: Vec<(usize, usize)> = (0..n).flat_map(|i| [(i, i), (i, n - 1 - i)]).collect();
    let families = [
        ("lines", PatternFamily::StandardLines),
        ("corners", PatternFamily::FourCorners),
        ("x", PatternFamily::Custom(vec![x])),
    ];
    let spec = CardSpec::new(n, 15)?;
    println!("{:>8} {:>8} {:>8} {:>10}", "family", "players", "lines", "E[B]");
    for (name, family) in &families {
        for players in [1, 2, 4, 8] {
            let cards = generate_cards(spec, players, 99)?;
            let lines = union_lines(&cards, family)?;
            if lines.len() > bingo_core::ie::DEFAULT_LIMIT {
                // too many lines to enumerate; estimate instead
                let stats = run_trials(&SimConfig::new(lines.clone(), 100_000, 1))?;
                println!("{name:>8} {players:>8} {:>8} {:>10.4} ± {:.4} (simulated)", lines.len(), stats.mean, 1.96 * stats.standard_error);
                continue;
            }
            let e = expectation_closed_form(&s_value(&coverage_profile(&lines, 1)?), n, spec.m);
            println!("{name:>8} {players:>8} {:>8} {:>10.4}", lines.len(), to_f64(&e));
        }
    }
    Ok(())
}
