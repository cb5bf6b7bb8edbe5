//! Game-length distribution, expectation and the reliability polynomial,
//! all evaluated from a [`CoverageProfile`].
//!
//! With `A` the profile and `N` the pool size,
//!
//! * `P(B <= k) = sum_j A[j] C(k, j) / C(N, j)`
//! * `P(B = k)  = sum_j A[j] C(k-1, j-1) / C(N, j)`
//! * `E[B]      = (N + 1)(1 - S)`, `S = sum_j A[j] / (j + 1)`
//! * `P(p)      = sum_j A[j] p^j`
//!
//! Exact variants return [`ExactRational`]; `f64` variants use the
//! telescoping product `prod_{i<j} (k-i)/(N-i)` and never form factorials.

use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{BingoError, Result};
use crate::ie::{s_value, CoverageProfile};
use crate::rational::{to_f64, to_significant, ExactRational};

fn check_pool(profile: &CoverageProfile, pool_size: usize) -> Result<()> {
    match profile.max_support() {
        None => Err(BingoError::Validation("profile has no non-zero counts".into())),
        Some(top) if top > pool_size => Err(BingoError::Validation(format!(
            "pool size {pool_size} smaller than covered universe {top}"
        ))),
        Some(_) => Ok(()),
    }
}

fn check_k(k: usize, lo: usize, pool_size: usize) -> Result<()> {
    if k < lo || k > pool_size {
        return Err(BingoError::Validation(format!(
            "k={k} outside [{lo}, {pool_size}]"
        )));
    }
    Ok(())
}

/// `C(k, j) / C(pool, j)` as a telescoping product.
fn binomial_ratio(k: usize, pool: usize, j: usize) -> f64 {
    if j > k {
        return 0.0;
    }
    (0..j).fold(1.0, |r, i| r * (k - i) as f64 / (pool - i) as f64)
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // exact at every step: C(n-k+i+1, i+1) = C(n-k+i, i) * (n-k+i+1) / (i+1)
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - k + i + 1) / (i + 1))
}

fn ratio(numer: i64, num_binom: BigUint, den_binom: &BigUint) -> ExactRational {
    BigRational::new(BigInt::from(numer) * BigInt::from(num_binom), BigInt::from(den_binom.clone()))
}

/// `P(B <= k)`, double precision.
pub fn cdf_at(profile: &CoverageProfile, pool_size: usize, k: usize) -> Result<f64> {
    check_pool(profile, pool_size)?;
    check_k(k, 0, pool_size)?;
    Ok(profile
        .support()
        .map(|(j, a)| a as f64 * binomial_ratio(k, pool_size, j))
        .sum())
}

/// `P(B <= k)`, exact.
pub fn cdf_at_exact(profile: &CoverageProfile, pool_size: usize, k: usize) -> Result<ExactRational> {
    check_pool(profile, pool_size)?;
    check_k(k, 0, pool_size)?;
    Ok(profile
        .support()
        .map(|(j, a)| ratio(a, binomial(k, j), &binomial(pool_size, j)))
        .sum())
}

/// `P(B = k)`, double precision, via `(j/k) C(k,j)/C(N,j)`.
pub fn pmf_at(profile: &CoverageProfile, pool_size: usize, k: usize) -> Result<f64> {
    check_pool(profile, pool_size)?;
    check_k(k, 1, pool_size)?;
    Ok(profile
        .support()
        .map(|(j, a)| a as f64 * j as f64 / k as f64 * binomial_ratio(k, pool_size, j))
        .sum())
}

/// `P(B = k)`, exact, via `C(k-1, j-1) / C(N, j)`.
pub fn pmf_at_exact(profile: &CoverageProfile, pool_size: usize, k: usize) -> Result<ExactRational> {
    check_pool(profile, pool_size)?;
    check_k(k, 1, pool_size)?;
    Ok(profile
        .support()
        .filter(|&(j, _)| j >= 1)
        .map(|(j, a)| ratio(a, binomial(k - 1, j - 1), &binomial(pool_size, j)))
        .sum())
}

/// `(pool + 1)(1 - s)`.
pub fn expectation_for_pool(s: &ExactRational, pool_size: usize) -> ExactRational {
    BigRational::from_integer(BigInt::from(pool_size + 1)) * (BigRational::one() - s)
}

/// `(mn + 1)(1 - s)`.
pub fn expectation_closed_form(s: &ExactRational, n: usize, m: usize) -> ExactRational {
    expectation_for_pool(s, m * n)
}

/// `sum_k k P(B = k)`, term by term, exact.
pub fn expectation_by_sum(profile: &CoverageProfile, pool_size: usize) -> Result<ExactRational> {
    check_pool(profile, pool_size)?;
    let pmf = exact_pmf_table(profile, pool_size);
    Ok(pmf
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, p)| p * BigInt::from(k))
        .sum())
}

/// `pmf[k]` for `k in 0..=pool`, using one rolling Pascal row for `C(k-1, j-1)`.
fn exact_pmf_table(profile: &CoverageProfile, pool_size: usize) -> Vec<ExactRational> {
    let top = profile.max_support().unwrap_or(0);
    let support: Vec<(usize, i64)> = profile.support().collect();
    let denoms: Vec<BigUint> = (0..=top).map(|j| binomial(pool_size, j)).collect();
    let mut out = vec![BigRational::zero(); pool_size + 1];
    // row holds C(k-1, i) for i in 0..=top
    let mut row = vec![BigUint::zero(); top + 1];
    row[0] = BigUint::one();
    for (k, slot) in out.iter_mut().enumerate().skip(1) {
        if k >= 2 {
            for i in (1..=top).rev() {
                let prev = row[i - 1].clone();
                row[i] += prev;
            }
        }
        *slot = support
            .iter()
            .filter(|&&(j, _)| j >= 1)
            .map(|&(j, a)| ratio(a, row[j - 1].clone(), &denoms[j]))
            .sum();
    }
    out
}

/// Full exact distribution of the number of calls to the first completed line.
#[derive(Debug, Clone)]
pub struct GameDistribution {
    pub pool_size: usize,
    /// `cdf[k]` for `k in 0..=pool_size`.
    pub cdf: Vec<ExactRational>,
    /// `pmf[k]` for `k in 0..=pool_size`; `pmf[0] = 0`.
    pub pmf: Vec<ExactRational>,
    pub expectation: ExactRational,
}

impl GameDistribution {
    pub fn exact(profile: &CoverageProfile, pool_size: usize) -> Result<Self> {
        check_pool(profile, pool_size)?;
        let pmf = exact_pmf_table(profile, pool_size);
        let mut cdf = Vec::with_capacity(pool_size + 1);
        let mut running = BigRational::zero();
        for p in &pmf {
            running += p;
            cdf.push(running.clone());
        }
        let expectation = pmf
            .iter()
            .enumerate()
            .map(|(k, p)| p * BigInt::from(k))
            .sum();
        Ok(GameDistribution { pool_size, cdf, pmf, expectation })
    }

    pub fn expectation_f64(&self) -> f64 {
        to_f64(&self.expectation)
    }

    /// CSV with columns `k,cdf,pmf`, values to 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,cdf,pmf\n");
        for k in 0..=self.pool_size {
            out.push_str(&format!(
                "{k},{},{}\n",
                to_significant(&self.cdf[k], 12),
                to_significant(&self.pmf[k], 12)
            ));
        }
        out
    }
}

/// `P(p) = sum_j A[j] p^j`: probability that some line is fully marked when
/// every number is marked independently with probability `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReliabilityPolynomial {
    coefficients: Vec<i64>,
}

impl ReliabilityPolynomial {
    pub fn new(profile: &CoverageProfile) -> Self {
        let top = profile.max_support().unwrap_or(0);
        ReliabilityPolynomial { coefficients: profile.counts()[..=top].to_vec() }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Horner evaluation of `P(p)`.
    pub fn eval(&self, p: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, &a| acc * p + a as f64)
    }

    pub fn eval_exact(&self, p: &ExactRational) -> ExactRational {
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, &a| acc * p + BigInt::from(a))
    }

    /// `Q(p) = 1 - P(p)`.
    pub fn complement(&self, p: f64) -> f64 {
        1.0 - self.eval(p)
    }

    /// `integral_0^1 P(p) dp`, exact.
    pub fn integral(&self) -> ExactRational {
        self.coefficients
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(j, &a)| BigRational::new(BigInt::from(a), BigInt::from(j + 1)))
            .sum()
    }
}

/// `(P(p), Q(p))` with `p` checked to lie in `[0, 1]`.
pub fn eval_reliability(profile: &CoverageProfile, p: f64) -> Result<(f64, f64)> {
    if !(0.0..=1.0).contains(&p) {
        return Err(BingoError::Validation(format!("p={p} outside [0, 1]")));
    }
    let poly = ReliabilityPolynomial::new(profile);
    let value = poly.eval(p);
    Ok((value, 1.0 - value))
}

/// Trapezoid rule for `integral_0^1 Q(p) dp` on `points` equally spaced nodes.
pub fn trapezoid_q(poly: &ReliabilityPolynomial, points: usize) -> f64 {
    assert!(points >= 2);
    let h = 1.0 / (points - 1) as f64;
    let inner: f64 = (1..points - 1).map(|i| poly.complement(i as f64 * h)).sum();
    h * (inner + 0.5 * (poly.complement(0.0) + poly.complement(1.0)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub m: usize,
    pub expectation: ExactRational,
}

/// `E[B]` for each `m` in `m_range` from one profile; `S` does not depend on `m`.
pub fn sweep_expectation(
    profile: &CoverageProfile,
    n: usize,
    m_range: RangeInclusive<usize>,
) -> Result<Vec<SweepRow>> {
    if *m_range.start() < n || m_range.is_empty() {
        return Err(BingoError::Validation(format!(
            "m range {}..={} must be non-empty and start at or above n={n}",
            m_range.start(),
            m_range.end()
        )));
    }
    let s = s_value(profile);
    m_range
        .map(|m| {
            check_pool(profile, m * n)?;
            Ok(SweepRow { m, expectation: expectation_closed_form(&s, n, m) })
        })
        .collect()
}

/// Slope and intercept of an exactly affine sweep, or `None` when some second
/// difference is non-zero. A single row yields slope zero.
pub fn affine_fit(rows: &[SweepRow]) -> Option<(ExactRational, ExactRational)> {
    let first = rows.first()?;
    if rows.len() == 1 {
        return Some((BigRational::zero(), first.expectation.clone()));
    }
    let dm = BigInt::from(rows[1].m as i64 - first.m as i64);
    let slope = (&rows[1].expectation - &first.expectation) / dm;
    let affine = rows.windows(2).all(|w| {
        let step = BigInt::from(w[1].m as i64 - w[0].m as i64);
        &w[1].expectation - &w[0].expectation == &slope * step
    });
    if !affine {
        return None;
    }
    let intercept = &first.expectation - &slope * BigInt::from(first.m);
    Some((slope, intercept))
}

/// Second differences of consecutive sweep rows.
pub fn second_differences(rows: &[SweepRow]) -> Vec<ExactRational> {
    rows.windows(3)
        .map(|w| &w[2].expectation - &w[1].expectation * BigInt::from(2) + &w[0].expectation)
        .collect()
}
