//! Brute-force counting against inclusion–exclusion on a 3x3 card.
//!
//! ```bash
//! cargo run --release -p bingo-core --example oracle_check
//! ```

use bingo_core::distribution::{cdf_at_exact, expectation_closed_form};
use bingo_core::oracle::{exact_cdf_by_subsets, exact_expectation_by_enumeration};
use bingo_core::rational::to_fraction_string;
use bingo_core::{coverage_profile, generate_card, lines_of, s_value, CardSpec, PatternFamily};

fn main() -> bingo_core::Result<()> {
    for free_space in [false, true] {
        let spec = CardSpec::new(3, 5)?.with_free_space(free_space);
        let lines = lines_of(&generate_card(spec, 1)?, &PatternFamily::StandardLines)?;
        let profile = coverage_profile(&lines, 1)?;
        println!("free space: {free_space}, profile {:?}", profile.counts());
        for k in 0..=spec.pool_size() {
            let engine = cdf_at_exact(&profile, spec.pool_size(), k)?;
            let count = exact_cdf_by_subsets(&lines, k)?;
            let mark = if engine == count { "ok" } else { "MISMATCH" };
            println!("  k={k:>2}  {:>14}  {mark}", to_fraction_string(&engine));
        }
        let e = expectation_closed_form(&s_value(&profile), 3, 5);
        let brute = exact_expectation_by_enumeration(&lines, spec.pool_size())?;
        println!("  E[B] = {} (brute force {})\n", to_fraction_string(&e), to_fraction_string(&brute));
    }
    Ok(())
}
