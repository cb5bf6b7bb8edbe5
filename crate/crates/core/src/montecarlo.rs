//! Monte Carlo game simulation.
//!
//! A game is one uniformly random call order. Each number's call position is
//! drawn once, and the game length is the minimum over lines of the latest
//! call among the line's numbers. Trial `t` draws from its own ChaCha stream
//! seeded by `mix_seed(seed, t)`, and per-chunk tallies are integer
//! histograms, so results are bit-identical for any worker count.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{BingoError, Result};
use crate::model::{generate_cards, union_lines, CardSpec, LineSet, PatternFamily};
use crate::seed::mix_seed;

const CHUNK: u64 = 4096;

/// Summary statistics of simulated game lengths.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialStats {
    pub trials: u64,
    pub mean: f64,
    /// Unbiased sample variance; reported as 0 when `trials == 1`.
    pub sample_variance: f64,
    pub standard_error: f64,
    pub ci95: (f64, f64),
    /// False when `trials == 1` and the variance is undefined.
    pub variance_defined: bool,
}

impl TrialStats {
    /// Statistics from a histogram of lengths (`hist[k]` = games of length `k`).
    pub fn from_histogram(hist: &[u64]) -> Result<Self> {
        let trials: u64 = hist.iter().sum();
        if trials == 0 {
            return Err(BingoError::Validation("no trials".into()));
        }
        let (sum, sumsq) = hist.iter().enumerate().fold((0u128, 0u128), |(s, q), (k, &c)| {
            let (k, c) = (k as u128, c as u128);
            (s + k * c, q + k * k * c)
        });
        let t = trials as u128;
        let mean = sum as f64 / trials as f64;
        let (sample_variance, variance_defined) = if trials > 1 {
            ((t * sumsq - sum * sum) as f64 / (t * (t - 1)) as f64, true)
        } else {
            (0.0, false)
        };
        let standard_error = (sample_variance / trials as f64).sqrt();
        Ok(TrialStats {
            trials,
            mean,
            sample_variance,
            standard_error,
            ci95: (mean - 1.96 * standard_error, mean + 1.96 * standard_error),
            variance_defined,
        })
    }

    pub fn to_dump(&self, seed: u64) -> StatsDump {
        StatsDump {
            trials: self.trials,
            mean: self.mean,
            variance: self.sample_variance,
            se: self.standard_error,
            ci95: [self.ci95.0, self.ci95.1],
            seed,
        }
    }
}

/// JSON form of [`TrialStats`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsDump {
    pub trials: u64,
    pub mean: f64,
    pub variance: f64,
    pub se: f64,
    pub ci95: [f64; 2],
    pub seed: u64,
}

/// Where the simulated lines come from.
#[derive(Debug, Clone)]
pub enum SimSource {
    Lines(LineSet),
    /// `players` cards drawn from `master_seed`, lines deduplicated.
    Cards { spec: CardSpec, players: usize, family: PatternFamily, master_seed: u64 },
}

#[derive(Debug, Clone)]
pub struct SimConfig {
    pub source: SimSource,
    pub trials: u64,
    pub seed: u64,
    pub workers: usize,
}

impl SimConfig {
    pub fn new(lines: LineSet, trials: u64, seed: u64) -> Self {
        SimConfig { source: SimSource::Lines(lines), trials, seed, workers: 1 }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn line_set(&self) -> Result<LineSet> {
        match &self.source {
            SimSource::Lines(lines) => Ok(lines.clone()),
            SimSource::Cards { spec, players, family, master_seed } => {
                let cards = generate_cards(*spec, *players, *master_seed)?;
                union_lines(&cards, family)
            }
        }
    }
}

/// Reusable per-thread state for simulating games on one line set.
pub struct GameSimulator {
    pool: usize,
    /// Lines as indices into `covered`.
    lines: Vec<Vec<usize>>,
    covered: usize,
    slots: Vec<u32>,
}

impl GameSimulator {
    pub fn new(lines: &LineSet) -> Result<Self> {
        if lines.is_empty() {
            return Err(BingoError::Validation("cannot simulate an empty line set".into()));
        }
        let covered = lines.covered();
        let idx = lines
            .lines()
            .iter()
            .map(|l| l.numbers.iter().map(|v| covered.binary_search(v).unwrap()).collect())
            .collect();
        Ok(GameSimulator {
            pool: lines.universe_size(),
            lines: idx,
            covered: covered.len(),
            slots: Vec::with_capacity(lines.universe_size()),
        })
    }

    /// Calls needed until the first line is complete.
    pub fn play<R: Rng + ?Sized>(&mut self, rng: &mut R) -> usize {
        self.slots.clear();
        self.slots.extend(1..=self.pool as u32);
        // call positions of the covered numbers: a uniform injection into 1..=pool
        let (positions, _) = self.slots.partial_shuffle(rng, self.covered);
        self.lines
            .iter()
            .map(|line| line.iter().map(|&i| positions[i]).max().unwrap_or(0))
            .min()
            .unwrap_or(0) as usize
    }
}

/// One game on `lines`.
pub fn simulate_game<R: Rng + ?Sized>(lines: &LineSet, rng: &mut R) -> Result<usize> {
    Ok(GameSimulator::new(lines)?.play(rng))
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix_seed(seed, trial))
}

fn thread_pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| BingoError::Internal(e.to_string()))
}

/// Histogram of game lengths over `config.trials` games; index is the length.
pub fn run_histogram(config: &SimConfig) -> Result<Vec<u64>> {
    if config.trials == 0 {
        return Err(BingoError::Validation("trials must be at least 1".into()));
    }
    let lines = config.line_set()?;
    let proto = GameSimulator::new(&lines)?;
    let size = lines.universe_size() + 1;
    let chunks = config.trials.div_ceil(CHUNK);
    let seed = config.seed;
    let trials = config.trials;
    let parts: Vec<Vec<u64>> = thread_pool(config.workers)?.install(|| {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut sim = GameSimulator {
                    pool: proto.pool,
                    lines: proto.lines.clone(),
                    covered: proto.covered,
                    slots: Vec::with_capacity(proto.pool),
                };
                let mut hist = vec![0u64; size];
                for t in c * CHUNK..((c + 1) * CHUNK).min(trials) {
                    hist[sim.play(&mut trial_rng(seed, t))] += 1;
                }
                hist
            })
            .collect()
    });
    let mut hist = vec![0u64; size];
    for part in parts {
        for (a, b) in hist.iter_mut().zip(part) {
            *a += b;
        }
    }
    Ok(hist)
}

/// Mean, variance and 95% interval of simulated game lengths.
pub fn run_trials(config: &SimConfig) -> Result<TrialStats> {
    TrialStats::from_histogram(&run_histogram(config)?)
}

/// Fraction of trials in which no line is fully marked when each number is
/// marked independently with probability `p`. Estimates `Q(p)`.
pub fn estimate_reliability(lines: &LineSet, p: f64, trials: u64, seed: u64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(BingoError::Validation(format!("p={p} outside [0, 1]")));
    }
    if trials == 0 {
        return Err(BingoError::Validation("trials must be at least 1".into()));
    }
    if lines.is_empty() {
        return Err(BingoError::Validation("empty line set".into()));
    }
    let covered = lines.covered();
    let idx: Vec<Vec<usize>> = lines
        .lines()
        .iter()
        .map(|l| l.numbers.iter().map(|v| covered.binary_search(v).unwrap()).collect())
        .collect();
    let chunks = trials.div_ceil(CHUNK);
    let blocked: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut marked = vec![false; covered.len()];
            let mut count = 0u64;
            for t in c * CHUNK..((c + 1) * CHUNK).min(trials) {
                let mut rng = trial_rng(seed, t);
                for slot in marked.iter_mut() {
                    *slot = rng.random_bool(p);
                }
                if !idx.iter().any(|line| line.iter().all(|&i| marked[i])) {
                    count += 1;
                }
            }
            count
        })
        .sum();
    Ok(blocked as f64 / trials as f64)
}
