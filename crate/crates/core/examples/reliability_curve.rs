//! The reliability polynomial P(p) of a 5x5 card and the integral of Q = 1 - P.
//!
//! ```bash
//! cargo run --release -p bingo-core --example reliability_curve
//! ```

use bingo_core::distribution::{trapezoid_q, ReliabilityPolynomial};
use bingo_core::montecarlo::estimate_reliability;
use bingo_core::rational::to_f64;
use bingo_core::{coverage_profile, geometry_lines, s_value, PatternFamily};

fn main() -> bingo_core::Result<()> {
    let lines = geometry_lines(5, &PatternFamily::StandardLines, true)?;
    let profile = coverage_profile(&lines, 1)?;
    let poly = ReliabilityPolynomial::new(&profile);

    println!("   p      P(p)      Q(p)   Q simulated");
    for i in 0..=10 {
        let p = i as f64 / 10.0;
        let q_sim = estimate_reliability(&lines, p, 200_000, 5)?;
        println!("{p:>4.1} {:>9.6} {:>9.6} {:>9.6}", poly.eval(p), poly.complement(p), q_sim);
    }
    let exact = 1.0 - to_f64(&s_value(&profile));
    let trapezoid = trapezoid_q(&poly, 10_000);
    println!("\nintegral of Q: trapezoid {trapezoid:.10}, exact 1 - S_5 {exact:.10}");
    Ok(())
}
