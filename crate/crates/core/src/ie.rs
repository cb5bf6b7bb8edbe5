//! Inclusion–exclusion over line subsets, compressed to a coverage profile.
//!
//! `A[j]` is the sum of `(-1)^(|X|+1)` over all non-empty subsets `X` of the
//! lines whose union covers exactly `j` numbers. Every alternating sum over
//! subsets downstream (S, CDF, PMF, reliability polynomial) is a single pass
//! over `A`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::{Block, Wide};
use crate::error::{BingoError, Result};
use crate::model::LineSet;
use crate::rational::ExactRational;

/// Default cap on the number of lines enumerated exactly.
pub const DEFAULT_LIMIT: usize = 28;
/// Above this `A[j]` could overflow `i64`.
pub const HARD_LIMIT: usize = 62;

/// Signed coverage counts `A[0..=universe_size]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageProfile {
    universe_size: usize,
    counts: Vec<i64>,
}

impl CoverageProfile {
    /// Wraps raw counts; `counts.len()` must be `universe_size + 1`.
    pub fn from_counts(universe_size: usize, counts: Vec<i64>) -> Result<Self> {
        if counts.len() != universe_size + 1 {
            return Err(BingoError::Validation(format!(
                "profile needs {} entries, got {}",
                universe_size + 1,
                counts.len()
            )));
        }
        Ok(CoverageProfile { universe_size, counts })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    /// Indices with non-zero count, ascending.
    pub fn support(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.counts.iter().enumerate().filter(|(_, &a)| a != 0).map(|(j, &a)| (j, a))
    }

    pub fn min_support(&self) -> Option<usize> {
        self.support().next().map(|(j, _)| j)
    }

    pub fn max_support(&self) -> Option<usize> {
        self.support().last().map(|(j, _)| j)
    }

    pub fn total(&self) -> i64 {
        self.counts.iter().sum()
    }

    pub fn to_dump(&self) -> ProfileDump {
        ProfileDump {
            universe: self.universe_size,
            counts: self.support().collect(),
        }
    }

    pub fn from_dump(dump: &ProfileDump) -> Result<Self> {
        let mut counts = vec![0i64; dump.universe + 1];
        for (&j, &a) in &dump.counts {
            if j > dump.universe {
                return Err(BingoError::Validation(format!("profile index {j} beyond universe")));
            }
            counts[j] = a;
        }
        Self::from_counts(dump.universe, counts)
    }
}

/// JSON form: `{"universe": U, "counts": {"j": A[j], ...}}`, zeros omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileDump {
    pub universe: usize,
    pub counts: BTreeMap<usize, i64>,
}

/// Enumeration settings.
#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    pub workers: usize,
    pub limit: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { workers: 1, limit: DEFAULT_LIMIT }
    }
}

/// Coverage profile with the default limit.
pub fn coverage_profile(lines: &LineSet, worker_count: usize) -> Result<CoverageProfile> {
    coverage_profile_with(lines, EnumOptions { workers: worker_count, limit: DEFAULT_LIMIT })
}

/// Enumerates every non-empty subset of `lines` depth-first, carrying the
/// running union. The first `ceil(log2 workers)` include/exclude decisions are
/// split into independent tasks whose integer profiles are summed, so the
/// result does not depend on the worker count.
pub fn coverage_profile_with(lines: &LineSet, opts: EnumOptions) -> Result<CoverageProfile> {
    if lines.is_empty() {
        return Err(BingoError::Validation("cannot enumerate an empty line set".into()));
    }
    let limit = opts.limit.min(HARD_LIMIT);
    if lines.len() > limit {
        return Err(BingoError::Capacity { lines: lines.len(), limit });
    }
    // dense re-indexing of covered numbers keeps the bitsets narrow
    let covered = lines.covered();
    let words = covered.len().div_ceil(64);
    let counts = match words {
        1 => enumerate::<u64>(lines, &covered, opts.workers),
        2 => enumerate::<u128>(lines, &covered, opts.workers),
        3..=4 => enumerate::<Wide<4>>(lines, &covered, opts.workers),
        5..=8 => enumerate::<Wide<8>>(lines, &covered, opts.workers),
        9..=16 => enumerate::<Wide<16>>(lines, &covered, opts.workers),
        17..=64 => enumerate::<Wide<64>>(lines, &covered, opts.workers),
        _ => {
            return Err(BingoError::Validation(format!(
                "union of lines covers {} numbers; at most 4096 supported",
                covered.len()
            )))
        }
    }?;
    let mut full = vec![0i64; lines.universe_size() + 1];
    full[..counts.len()].copy_from_slice(&counts);
    let profile = CoverageProfile::from_counts(lines.universe_size(), full)?;
    if profile.total() != 1 {
        return Err(BingoError::Internal(format!(
            "coverage counts sum to {} instead of 1",
            profile.total()
        )));
    }
    Ok(profile)
}

fn enumerate<B: Block>(lines: &LineSet, covered: &[u32], workers: usize) -> Result<Vec<i64>> {
    let masks: Vec<B> = lines
        .lines()
        .iter()
        .map(|line| {
            line.numbers.iter().fold(B::default(), |acc, v| {
                acc.with_bit(covered.binary_search(v).expect("number is covered"))
            })
        })
        .collect();
    let size = covered.len() + 1;
    let split = split_depth(workers, masks.len());
    if split == 0 {
        let mut acc = vec![0i64; size];
        descend(&masks, 0, B::default(), 1, &mut acc);
        return Ok(acc);
    }
    let task = |prefix: u64| -> Vec<i64> {
        let mut acc = vec![0i64; size];
        let mut union = B::default();
        let mut chosen = 0u32;
        for (i, mask) in masks[..split].iter().enumerate() {
            if prefix >> i & 1 == 1 {
                union = union | *mask;
                chosen += 1;
            }
        }
        if chosen > 0 {
            acc[union.popcount() as usize] += sign(chosen);
        }
        descend(&masks, split, union, sign(chosen + 1), &mut acc);
        acc
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| BingoError::Internal(e.to_string()))?;
    let parts: Vec<Vec<i64>> = pool.install(|| (0..1u64 << split).into_par_iter().map(task).collect());
    let mut acc = vec![0i64; size];
    for part in parts {
        for (a, b) in acc.iter_mut().zip(part) {
            *a += b;
        }
    }
    Ok(acc)
}

#[inline]
fn sign(subset_size: u32) -> i64 {
    if subset_size % 2 == 1 {
        1
    } else {
        -1
    }
}

fn split_depth(workers: usize, lines: usize) -> usize {
    if workers <= 1 {
        return 0;
    }
    let depth = usize::BITS - (workers - 1).leading_zeros();
    (depth as usize).min(lines)
}

/// Every extension of `union` by one more line from `start..` contributes
/// `next_sign` at its coverage, then recurses with the sign flipped.
fn descend<B: Block>(masks: &[B], start: usize, union: B, next_sign: i64, acc: &mut [i64]) {
    for i in start..masks.len() {
        let u = union | masks[i];
        acc[u.popcount() as usize] += next_sign;
        if i + 1 < masks.len() {
            descend(masks, i + 1, u, -next_sign, acc);
        }
    }
}

/// `S = sum_j A[j] / (j + 1)`, exact.
pub fn s_value(profile: &CoverageProfile) -> ExactRational {
    profile
        .support()
        .map(|(j, a)| BigRational::new(BigInt::from(a), BigInt::from(j + 1)))
        .sum()
}

/// Double-precision `S`. Each term is split into its integer quotient (summed
/// exactly) and a fractional remainder, so large alternating counts do not
/// lose precision.
pub fn s_value_f64(profile: &CoverageProfile) -> f64 {
    let mut whole: i64 = 0;
    let mut frac = 0.0f64;
    for (j, a) in profile.support() {
        let d = (j + 1) as i64;
        whole += a.div_euclid(d);
        frac += a.rem_euclid(d) as f64 / d as f64;
    }
    whole as f64 + frac
}
