//! Full game-length distribution of the classic 5x5, 75-number card.
//!
//! ```bash
//! cargo run --release -p bingo-core --example single_card
//! ```

use bingo_core::distribution::{expectation_closed_form, GameDistribution};
use bingo_core::rational::{to_f64, to_fraction_string, to_significant};
use bingo_core::{coverage_profile, generate_card, lines_of, s_value, CardSpec, PatternFamily};

fn main() -> bingo_core::Result<()> {
    let spec = CardSpec::new(5, 15)?;
    let card = generate_card(spec, 2024)?;
    for row in card.grid() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
        println!("{}", cells.join(" "));
    }

    let lines = lines_of(&card, &PatternFamily::StandardLines)?;
    let profile = coverage_profile(&lines, 1)?;
    let dist = GameDistribution::exact(&profile, spec.pool_size())?;
    let closed = expectation_closed_form(&s_value(&profile), spec.n, spec.m);

    println!("\nE[B] by summation  = {}", to_significant(&dist.expectation, 12));
    println!("E[B] closed form   = {}", to_significant(&closed, 12));
    println!("as a fraction      = {}", to_fraction_string(&closed));
    assert_eq!(dist.expectation, closed);

    println!("\n  k   P(B<=k)   P(B=k)");
    for k in (4..=60).step_by(4) {
        println!("{k:>3}  {:>8.5}  {:>8.5}", to_f64(&dist.cdf[k]), to_f64(&dist.pmf[k]));
    }
    let median = dist.cdf.iter().position(|c| to_f64(c) >= 0.5).unwrap();
    println!("\nmedian game length: {median} calls");
    Ok(())
}
