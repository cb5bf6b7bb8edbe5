//! Conditional expectation for random multiplayer cards against simulation.
//!
//! ```bash
//! cargo run --release -p bingo-core --example multiplayer_validation
//! ```

use std::time::Instant;

use bingo_core::distribution::expectation_closed_form;
use bingo_core::rational::to_f64;
use bingo_core::{
    coverage_profile, generate_cards, run_trials, s_value, union_lines, CardSpec, PatternFamily, SimConfig,
};

fn main() -> bingo_core::Result<()> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    println!(" n  m  N  lines   simulation    formula   rel.err   z");
    for (n, m, players) in [(3, 5, 2), (3, 5, 3), (3, 7, 2), (5, 7, 2)] {
        let start = Instant::now();
        let spec = CardSpec::new(n, m)?.with_free_space(false);
        let cards = generate_cards(spec, players, 7)?;
        let lines = union_lines(&cards, &PatternFamily::StandardLines)?;
        let exact = expectation_closed_form(&s_value(&coverage_profile(&lines, workers)?), n, m);
        let exact = to_f64(&exact);
        let stats = run_trials(&SimConfig::new(lines.clone(), 100_000, 1).with_workers(workers))?;
        let diff = (stats.mean - exact).abs();
        println!(
            "{n:>2} {m:>2} {players:>2} {:>6} {:>12.4} {:>10.4} {:>8.3}% {:>4.2}  ({:.2}s)",
            lines.len(),
            stats.mean,
            exact,
            100.0 * diff / exact,
            diff / stats.standard_error,
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}
