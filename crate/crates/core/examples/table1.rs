//! S_n and 1 - S_n for n = 3..=11, with and without the free center square.
//!
//! ```bash
//! cargo run --release -p bingo-core --example table1
//! ```

use std::time::Instant;

use bingo_core::rational::to_fixed;
use bingo_core::{coverage_profile, geometry_lines, s_value, PatternFamily};
use num_rational::BigRational;
use num_traits::One;

fn main() -> bingo_core::Result<()> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    println!("{:>3} {:>10} {:>12} {:>12} {:>9}", "n", "free", "S_n", "1 - S_n", "seconds");
    for free_space in [true, false] {
        for n in [3, 5, 7, 9, 11] {
            let start = Instant::now();
            let lines = geometry_lines(n, &PatternFamily::StandardLines, free_space)?;
            let s = s_value(&coverage_profile(&lines, workers)?);
            println!(
                "{n:>3} {free_space:>10} {:>12} {:>12} {:>9.3}",
                to_fixed(&s, 8),
                to_fixed(&(BigRational::one() - &s), 8),
                start.elapsed().as_secs_f64()
            );
        }
    }
    Ok(())
}
