//! E[B] against m for n = 5 and n = 7, as plot-ready CSV on stdout.
//!
//! ```bash
//! cargo run --release -p bingo-core --example linearity_sweep > sweep.csv
//! ```

use bingo_core::distribution::{affine_fit, second_differences, sweep_expectation};
use bingo_core::rational::{to_f64, to_significant};
use bingo_core::{coverage_profile, geometry_lines, PatternFamily};
use num_traits::Zero;

fn main() -> bingo_core::Result<()> {
    println!("n,m,expectation");
    for n in [5, 7] {
        let profile = coverage_profile(&geometry_lines(n, &PatternFamily::StandardLines, true)?, 1)?;
        let rows = sweep_expectation(&profile, n, n..=30)?;
        for row in &rows {
            println!("{n},{},{}", row.m, to_significant(&row.expectation, 12));
        }
        assert!(second_differences(&rows).iter().all(Zero::is_zero));
        let (slope, intercept) = affine_fit(&rows).expect("affine");
        eprintln!("n={n}: slope {:.6}, intercept {:.6}", to_f64(&slope), to_f64(&intercept));
    }
    Ok(())
}
