//! The work behind each `bingo` subcommand. Outputs are plain strings or
//! files so the binary stays a thin argument parser.

use std::fs;
use std::path::{Path, PathBuf};

use num_traits::One;
use serde::Serialize;
use serde_json::json;

use crate::distribution::{
    affine_fit, expectation_by_sum, expectation_closed_form, second_differences,
    sweep_expectation, trapezoid_q, GameDistribution, ReliabilityPolynomial,
};
use crate::error::{BingoError, Result};
use crate::ie::{coverage_profile_with, s_value, CoverageProfile, EnumOptions};
use crate::model::{generate_cards, geometry_lines, union_lines, CardSet, CardSpec, PatternFamily};
use crate::montecarlo::{run_trials, SimConfig};
use crate::rational::{to_f64, to_fixed, to_fraction_string, to_significant, ExactRational};
use crate::seed::mix_seed;

/// Significant digits for decimal renderings.
pub const DEFAULT_DIGITS: u32 = 12;

/// Shared knobs of every command.
#[derive(Debug, Clone)]
pub struct Common {
    pub n: usize,
    pub family: PatternFamily,
    pub free_space: bool,
    pub workers: usize,
    pub limit: usize,
}

impl Common {
    fn options(&self) -> EnumOptions {
        EnumOptions { workers: self.workers, limit: self.limit }
    }

    fn family_name(&self) -> &'static str {
        match self.family {
            PatternFamily::StandardLines => "lines",
            PatternFamily::FourCorners => "corners",
            PatternFamily::Custom(_) => "custom",
        }
    }

    /// Profile of a single card's geometry (independent of `m`).
    fn geometry_profile(&self) -> Result<CoverageProfile> {
        let lines = geometry_lines(self.n, &self.family, self.free_space)?;
        coverage_profile_with(&lines, self.options())
    }
}

fn exact_json(x: &ExactRational) -> serde_json::Value {
    json!({ "decimal": to_significant(x, DEFAULT_DIGITS), "fraction": to_fraction_string(x) })
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

/// Files written by [`run_exact`].
#[derive(Debug, Clone)]
pub struct ExactOutputs {
    pub profile: PathBuf,
    pub distribution: PathBuf,
    pub summary: PathBuf,
    pub summary_json: serde_json::Value,
}

/// Single-card exact computation: profile, distribution CSV and summary.
pub fn run_exact(common: &Common, m: usize, out_dir: &Path) -> Result<ExactOutputs> {
    let spec = CardSpec::new(common.n, m)?.with_free_space(common.free_space);
    let profile = common.geometry_profile()?;
    let s = s_value(&profile);
    let pool = spec.pool_size();
    let dist = GameDistribution::exact(&profile, pool)?;
    let closed = expectation_closed_form(&s, common.n, m);
    if dist.expectation != closed {
        return Err(BingoError::Internal(format!(
            "expectation by sum {} differs from closed form {}",
            to_fraction_string(&dist.expectation),
            to_fraction_string(&closed)
        )));
    }

    fs::create_dir_all(out_dir)?;
    let profile_path = out_dir.join("profile.json");
    let dist_path = out_dir.join("distribution.csv");
    let summary_path = out_dir.join("summary.json");
    write_json(&profile_path, &profile.to_dump())?;
    fs::write(&dist_path, dist.to_csv())?;

    let one_minus_s = ExactRational::one() - &s;
    let summary = json!({
        "n": common.n,
        "m": m,
        "free_space": common.free_space,
        "family": common.family_name(),
        "lines": geometry_lines(common.n, &common.family, common.free_space)?.len(),
        "pool_size": pool,
        "s": { "decimal": to_fixed(&s, 30), "fraction": to_fraction_string(&s) },
        "one_minus_s": { "decimal": to_fixed(&one_minus_s, 30), "fraction": to_fraction_string(&one_minus_s) },
        "expectation_closed_form": exact_json(&closed),
        "expectation_by_sum": exact_json(&dist.expectation),
    });
    write_json(&summary_path, &summary)?;
    Ok(ExactOutputs {
        profile: profile_path,
        distribution: dist_path,
        summary: summary_path,
        summary_json: summary,
    })
}

/// `E[B]` over `m_min..=m_max` as CSV `m,expectation,slope_check`, where
/// `slope_check` is the step from the previous row. Trailing `#` lines give
/// the fitted slope and intercept.
pub fn run_sweep(common: &Common, m_min: usize, m_max: usize) -> Result<String> {
    let profile = common.geometry_profile()?;
    let rows = sweep_expectation(&profile, common.n, m_min..=m_max)?;
    let (slope, intercept) = affine_fit(&rows)
        .ok_or_else(|| BingoError::Internal("sweep is not affine in m".into()))?;
    debug_assert!(second_differences(&rows).iter().all(num_traits::Zero::is_zero));
    let mut out = String::from("m,expectation,slope_check\n");
    for (i, row) in rows.iter().enumerate() {
        let step = if i == 0 {
            String::new()
        } else {
            to_significant(&(&row.expectation - &rows[i - 1].expectation), DEFAULT_DIGITS)
        };
        out.push_str(&format!(
            "{},{},{}\n",
            row.m,
            to_significant(&row.expectation, DEFAULT_DIGITS),
            step
        ));
    }
    out.push_str(&format!("# slope={} ({})\n", to_significant(&slope, DEFAULT_DIGITS), to_fraction_string(&slope)));
    out.push_str(&format!(
        "# intercept={} ({})\n",
        to_significant(&intercept, DEFAULT_DIGITS),
        to_fraction_string(&intercept)
    ));
    out.push_str("# affine=true\n");
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiplayerMode {
    Exact,
    Simulate,
    Validate,
}

#[derive(Debug, Clone)]
pub struct MultiplayerArgs {
    pub common: Common,
    pub m: usize,
    pub players: usize,
    pub seed: u64,
    pub trials: u64,
    pub mode: MultiplayerMode,
}

/// Seed of the simulation stream, kept apart from the card sub-seeds.
pub fn simulation_seed(master_seed: u64) -> u64 {
    mix_seed(master_seed ^ 0x5349_4D55_4C41_5445, u64::MAX)
}

/// Draws the cards, writes `cards.json`, and reports the conditional
/// expectation and/or simulated mean in `report.json`.
pub fn run_multiplayer(args: &MultiplayerArgs, out_dir: &Path) -> Result<serde_json::Value> {
    let common = &args.common;
    if args.players == 0 {
        return Err(BingoError::Validation("players must be at least 1".into()));
    }
    let spec = CardSpec::new(common.n, args.m)?.with_free_space(common.free_space);
    let cards = generate_cards(spec, args.players, args.seed)?;
    let lines = union_lines(&cards, &common.family)?;

    fs::create_dir_all(out_dir)?;
    write_json(&out_dir.join("cards.json"), &CardSet { master_seed: args.seed, cards })?;

    let mut report = json!({
        "n": common.n,
        "m": args.m,
        "players": args.players,
        "master_seed": args.seed,
        "family": common.family_name(),
        "free_space": common.free_space,
        "unique_lines": lines.len(),
    });

    let mut exact_value = None;
    if args.mode != MultiplayerMode::Simulate {
        let profile = coverage_profile_with(&lines, common.options())?;
        let s = s_value(&profile);
        let e = expectation_closed_form(&s, common.n, args.m);
        let by_sum = expectation_by_sum(&profile, spec.pool_size())?;
        if by_sum != e {
            return Err(BingoError::Internal("conditional expectation identity failed".into()));
        }
        report["exact"] = json!({
            "s": { "decimal": to_fixed(&s, 30), "fraction": to_fraction_string(&s) },
            "expectation": exact_json(&e),
        });
        exact_value = Some(to_f64(&e));
    }
    if args.mode != MultiplayerMode::Exact {
        let sim_seed = simulation_seed(args.seed);
        let config = SimConfig::new(lines.clone(), args.trials, sim_seed).with_workers(common.workers);
        let stats = run_trials(&config)?;
        report["simulation"] = serde_json::to_value(stats.to_dump(sim_seed))?;
        if let Some(exact) = exact_value {
            let diff = (stats.mean - exact).abs();
            report["relative_error"] = json!(diff / exact);
            report["standard_errors"] = json!(if stats.standard_error > 0.0 {
                diff / stats.standard_error
            } else {
                f64::INFINITY
            });
            report["within_4se"] = json!(diff <= 4.0 * stats.standard_error);
        }
    }
    write_json(&out_dir.join("report.json"), &report)?;
    Ok(report)
}

/// Rows `p,P,Q` on `points` equally spaced nodes of `[0, 1]`, with a footer
/// comparing the trapezoid integral of `Q` to the exact `1 - S`.
pub fn run_reliability(common: &Common, points: usize) -> Result<String> {
    if points < 2 {
        return Err(BingoError::Validation("need at least 2 grid points".into()));
    }
    let profile = common.geometry_profile()?;
    let poly = ReliabilityPolynomial::new(&profile);
    let h = 1.0 / (points - 1) as f64;
    let mut out = String::from("p,P,Q\n");
    for i in 0..points {
        let p = i as f64 * h;
        let value = poly.eval(p);
        out.push_str(&format!("{},{},{}\n", fmt_f64(p), fmt_f64(value), fmt_f64(1.0 - value)));
    }
    let trapezoid = trapezoid_q(&poly, points);
    let exact = to_f64(&(ExactRational::one() - s_value(&profile)));
    out.push_str(&format!("# trapezoid_integral_q={}\n", fmt_f64(trapezoid)));
    out.push_str(&format!("# exact_one_minus_s={}\n", fmt_f64(exact)));
    out.push_str(&format!("# difference={:e}\n", trapezoid - exact));
    Ok(out)
}

/// `f64` to 12 significant digits via its exact binary value.
pub fn fmt_f64(x: f64) -> String {
    match num_rational::BigRational::from_float(x) {
        Some(r) => to_significant(&r, DEFAULT_DIGITS),
        None => x.to_string(),
    }
}
