use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bingo_core::commands::{
    run_exact, run_multiplayer, run_reliability, run_sweep, Common, MultiplayerArgs, MultiplayerMode,
};
use bingo_core::ie::DEFAULT_LIMIT;
use bingo_core::{BingoError, PatternFamily};

#[derive(Parser)]
#[command(name = "bingo", version, about = "Exact and simulated (n,m)-Bingo game lengths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Lines,
    Corners,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Simulate,
    Validate,
}

#[derive(Args)]
struct Shared {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "lines")]
    family: Family,
    /// Pre-marked center square; `--free-space=false` disables it.
    #[arg(long, default_value_t = true, num_args = 0..=1, default_missing_value = "true", action = clap::ArgAction::Set)]
    free_space: bool,
    #[arg(long, env = "BINGO_WORKERS", default_value_t = 1)]
    workers: usize,
    /// Maximum number of lines enumerated exactly.
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
}

impl Shared {
    fn common(&self) -> Common {
        Common {
            n: self.n,
            family: match self.family {
                Family::Lines => PatternFamily::StandardLines,
                Family::Corners => PatternFamily::FourCorners,
            },
            free_space: self.free_space,
            workers: self.workers,
            limit: self.limit,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Profile, distribution and expectation for one card.
    Exact {
        #[command(flatten)]
        shared: Shared,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Expectation over a range of m.
    Sweep {
        #[command(flatten)]
        shared: Shared,
        #[arg(long)]
        m_min: usize,
        #[arg(long)]
        m_max: usize,
        /// CSV file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random multiplayer cards: conditional expectation and/or simulation.
    Multiplayer {
        #[command(flatten)]
        shared: Shared,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        players: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, value_enum, default_value = "validate")]
        mode: Mode,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Reliability polynomial P(p) and Q(p) on a grid.
    Reliability {
        #[command(flatten)]
        shared: Shared,
        #[arg(long, default_value_t = 10_000)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: String, out: Option<PathBuf>) -> Result<(), BingoError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), BingoError> {
    match cli.command {
        Command::Exact { shared, m, out } => {
            let outputs = run_exact(&shared.common(), m, &out)?;
            println!("{}", serde_json::to_string_pretty(&outputs.summary_json)?);
        }
        Command::Sweep { shared, m_min, m_max, out } => {
            emit(run_sweep(&shared.common(), m_min, m_max)?, out)?;
        }
        Command::Multiplayer { shared, m, players, seed, trials, mode, out } => {
            let args = MultiplayerArgs {
                common: shared.common(),
                m,
                players,
                seed,
                trials,
                mode: match mode {
                    Mode::Exact => MultiplayerMode::Exact,
                    Mode::Simulate => MultiplayerMode::Simulate,
                    Mode::Validate => MultiplayerMode::Validate,
                },
            };
            let report = run_multiplayer(&args, &out).map_err(|e| match e {
                BingoError::Capacity { lines, limit } => {
                    eprintln!("{lines} unique lines exceed the limit {limit}; try --mode simulate");
                    BingoError::Capacity { lines, limit }
                }
                other => other,
            })?;
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::Reliability { shared, points, out } => {
            emit(run_reliability(&shared.common(), points)?, out)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
