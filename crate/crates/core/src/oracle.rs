//! Brute-force ground truth for tiny instances.
//!
//! Everything here is obtained by direct counting over call sets or marking
//! grids. Nothing is shared with the inclusion–exclusion engine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{BingoError, Result};
use crate::model::LineSet;
use crate::rational::ExactRational;

/// Largest pool the call-set enumerator accepts.
pub const MAX_POOL: usize = 24;
/// Largest covered universe the grid enumerator accepts.
pub const MAX_GRID: usize = 20;

fn line_masks(lines: &LineSet, pool: usize) -> Result<Vec<u32>> {
    if pool > MAX_POOL {
        return Err(BingoError::OracleCapacity(format!("pool {pool} exceeds {MAX_POOL}")));
    }
    lines
        .lines()
        .iter()
        .map(|l| {
            l.numbers.iter().try_fold(0u32, |mask, &v| {
                if v == 0 || v as usize > pool {
                    Err(BingoError::Validation(format!("number {v} outside pool {pool}")))
                } else {
                    Ok(mask | 1 << (v - 1))
                }
            })
        })
        .collect()
}

fn choose(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of `k`-subsets of the pool that contain some full line.
fn winning_call_sets(masks: &[u32], pool: usize, k: usize) -> u64 {
    if k == 0 {
        return 0;
    }
    let limit = 1u64 << pool;
    let mut set: u64 = (1u64 << k) - 1;
    let mut hits = 0u64;
    while set < limit {
        let s = set as u32;
        if masks.iter().any(|&m| s & m == m) {
            hits += 1;
        }
        // next subset with the same popcount
        let low = set & set.wrapping_neg();
        let ripple = set + low;
        set = (((ripple ^ set) >> 2) / low) | ripple;
    }
    hits
}

/// `P(B <= k)` by enumerating every `k`-subset of calls.
pub fn exact_cdf_by_subsets(lines: &LineSet, k: usize) -> Result<ExactRational> {
    let pool = lines.universe_size();
    let masks = line_masks(lines, pool)?;
    if k > pool {
        return Err(BingoError::Validation(format!("k={k} beyond pool {pool}")));
    }
    let hits = winning_call_sets(&masks, pool, k);
    Ok(BigRational::new(
        BigInt::from(hits),
        BigInt::from(choose(pool as u64, k as u64)),
    ))
}

/// `E[B] = sum_k k (P(B <= k) - P(B <= k-1))` from full enumeration.
pub fn exact_expectation_by_enumeration(lines: &LineSet, pool_size: usize) -> Result<ExactRational> {
    let masks = line_masks(lines, pool_size)?;
    let mut prev = BigRational::zero();
    let mut e = BigRational::zero();
    for k in 1..=pool_size {
        let cdf = BigRational::new(
            BigInt::from(winning_call_sets(&masks, pool_size, k)),
            BigInt::from(choose(pool_size as u64, k as u64)),
        );
        e += (&cdf - &prev) * BigInt::from(k);
        prev = cdf;
    }
    Ok(e)
}

/// Lines as masks over the distinct numbers they cover.
fn grid_masks(lines: &LineSet) -> Result<(Vec<u32>, usize)> {
    let mut cells: Vec<u32> = lines.lines().iter().flat_map(|l| l.numbers.clone()).collect();
    cells.sort_unstable();
    cells.dedup();
    if cells.len() > MAX_GRID {
        return Err(BingoError::OracleCapacity(format!(
            "{} covered cells exceed {MAX_GRID}",
            cells.len()
        )));
    }
    let masks = lines
        .lines()
        .iter()
        .map(|l| {
            l.numbers
                .iter()
                .fold(0u32, |m, v| m | 1 << cells.iter().position(|c| c == v).unwrap())
        })
        .collect();
    Ok((masks, cells.len()))
}

/// Counts of winning markings by number of marked cells.
fn winning_markings(masks: &[u32], cells: usize) -> Vec<u64> {
    let mut by_marks = vec![0u64; cells + 1];
    for marking in 0u32..(1u32 << cells) {
        if masks.iter().any(|&m| marking & m == m) {
            by_marks[marking.count_ones() as usize] += 1;
        }
    }
    by_marks
}

/// Probability some line is fully marked, summing `p^|M| (1-p)^(U-|M|)` over
/// every winning marking `M` of the covered cells.
pub fn exact_reliability_by_grids(lines: &LineSet, p: f64) -> Result<f64> {
    let (masks, cells) = grid_masks(lines)?;
    Ok(winning_markings(&masks, cells)
        .iter()
        .enumerate()
        .map(|(marks, &count)| {
            count as f64 * p.powi(marks as i32) * (1.0 - p).powi((cells - marks) as i32)
        })
        .sum())
}

/// Exact-rational version of [`exact_reliability_by_grids`].
pub fn exact_reliability_by_grids_rational(lines: &LineSet, p: &ExactRational) -> Result<ExactRational> {
    let (masks, cells) = grid_masks(lines)?;
    let q = BigRational::one() - p;
    Ok(winning_markings(&masks, cells)
        .iter()
        .enumerate()
        .map(|(marks, &count)| {
            BigRational::from_integer(BigInt::from(count))
                * num_traits::pow(p.clone(), marks)
                * num_traits::pow(q.clone(), cells - marks)
        })
        .sum())
}
