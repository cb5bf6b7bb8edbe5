//! Exact and simulated game lengths for generalized `(n, m)`-Bingo.
//!
//! An `(n, m)` card is an `n x n` grid (`n` odd) whose column `j` holds `n`
//! distinct numbers from `[m(j-1)+1, mj]`; numbers are called uniformly
//! without replacement from the pool of `mn`. The game ends when some winning
//! pattern is fully called. Cards default to a pre-marked center square.
//!
//! * [`model`] builds cards, pattern families and deduplicated line sets.
//! * [`ie`] enumerates line subsets into a [`CoverageProfile`].
//! * [`distribution`] turns a profile into the CDF, PMF, expectation and
//!   reliability polynomial, exactly or in `f64`.
//! * [`montecarlo`] simulates games reproducibly.
//! * [`oracle`] recomputes small cases by brute force.
//!
//! ```
//! use bingo_core::{coverage_profile, geometry_lines, s_value, PatternFamily};
//! use bingo_core::distribution::expectation_closed_form;
//! use bingo_core::rational::to_fixed;
//!
//! let lines = geometry_lines(5, &PatternFamily::StandardLines, true).unwrap();
//! let profile = coverage_profile(&lines, 1).unwrap();
//! let s = s_value(&profile);
//! assert_eq!(to_fixed(&s, 8), "0.45567666");
//! let e = expectation_closed_form(&s, 5, 15);
//! assert_eq!(to_fixed(&e, 4), "41.3686");
//! ```

pub mod bitset;
pub mod commands;
pub mod distribution;
pub mod error;
pub mod ie;
pub mod model;
pub mod montecarlo;
pub mod oracle;
pub mod rational;
pub mod seed;

pub use distribution::{GameDistribution, ReliabilityPolynomial};
pub use error::{BingoError, Result};
pub use ie::{coverage_profile, coverage_profile_with, s_value, CoverageProfile, EnumOptions};
pub use model::{
    generate_card, generate_cards, geometry_lines, lines_of, union_lines, Card, CardSet, CardSpec,
    Line, LineSet, PatternFamily,
};
pub use montecarlo::{run_trials, simulate_game, SimConfig, TrialStats};
pub use rational::ExactRational;
