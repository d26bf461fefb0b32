//! Empirical scan of the rule `Π_n = 2·Π_{n-1} − Π_{n-2} ± 2`.
//!
//! For consecutive primes `p < p'` the degree-1 extrapolation of the prime
//! sequence is `M = 2p' − p`. The conjecture says a prime sits in a small
//! window around `M`. Which window exactly is ambiguous, so it is a
//! [`WindowMode`]. Pairs whose window contains no prime are recorded as
//! counterexamples, not dropped.

mod gaps;
mod twins;

pub use gaps::{GapPoint, GapSeries};
pub use twins::{twin_pairs, twin_scan, TwinRecord};

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::primes::{is_prime, PrimePair, PrimeTable, Primes};

/// Default `min_midpoint`: every candidate `M − 2` exceeds 7 exactly when
/// `M >= 10`. Pass 8 for the looser "M itself exceeds 7" reading.
pub const DEFAULT_MIN_MIDPOINT: u64 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("table up to {limit} holds fewer than two primes")]
    InsufficientTable { limit: u64 },
    #[error("range end {range_max} is beyond the table limit {limit}")]
    RangeBeyondTable { range_max: u64, limit: u64 },
    #[error("prime list is not strictly increasing at index {0}")]
    NotIncreasing(usize),
}

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize, clap::ValueEnum,
)]
#[serde(rename_all = "lowercase")]
pub enum WindowMode {
    /// `{M − 2, M + 2}`
    #[default]
    Strict,
    /// `{M − 2, M, M + 2}`
    Odd3,
    /// every integer in `[M − 2, M + 2]`
    Interval,
}

impl WindowMode {
    pub const ALL: [WindowMode; 3] = [WindowMode::Strict, WindowMode::Odd3, WindowMode::Interval];

    pub fn as_str(self) -> &'static str {
        match self {
            WindowMode::Strict => "strict",
            WindowMode::Odd3 => "odd3",
            WindowMode::Interval => "interval",
        }
    }

    /// Candidate values around `midpoint`, ascending. `midpoint` must be at
    /// least 2.
    pub fn candidates(self, midpoint: u64) -> Vec<u64> {
        let lo = midpoint - 2;
        match self {
            WindowMode::Strict => vec![lo, midpoint + 2],
            WindowMode::Odd3 => vec![lo, midpoint, midpoint + 2],
            WindowMode::Interval => (lo..=midpoint + 2).collect(),
        }
    }
}

impl fmt::Display for WindowMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRecord {
    pub pair: PrimePair,
    pub midpoint: u64,
    pub mode: WindowMode,
    pub primes_found: Vec<u64>,
    pub hit: bool,
}

/// Builds the record for one pair. No threshold is applied here.
///
/// # Panics
///
/// If `2·p_prev1 + 2` overflows `u64`.
pub fn evaluate_window(pair: PrimePair, mode: WindowMode) -> ConjectureRecord {
    let midpoint = pair
        .p_prev1
        .checked_mul(2)
        .and_then(|d| d.checked_add(2))
        .map(|d| d - 2 - pair.p_prev2)
        .expect("window overflows u64");
    let primes_found: Vec<u64> = mode
        .candidates(midpoint)
        .into_iter()
        .filter(|&c| is_prime(c))
        .collect();
    ConjectureRecord {
        pair,
        midpoint,
        mode,
        hit: !primes_found.is_empty(),
        primes_found,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub mode: WindowMode,
    pub min_midpoint: u64,
    pub total_pairs: u64,
    pub hits: u64,
    pub misses: u64,
    /// `hits / total_pairs` to six decimals, rounded half up.
    pub hit_rate: String,
    pub counterexamples: Vec<PrimePair>,
}

impl ScanSummary {
    fn from_records(mode: WindowMode, min_midpoint: u64, records: &[ConjectureRecord]) -> Self {
        let total_pairs = records.len() as u64;
        let counterexamples: Vec<PrimePair> =
            records.iter().filter(|r| !r.hit).map(|r| r.pair).collect();
        let misses = counterexamples.len() as u64;
        let hits = total_pairs - misses;
        Self {
            mode,
            min_midpoint,
            total_pairs,
            hits,
            misses,
            hit_rate: decimal_ratio(hits, total_pairs),
            counterexamples,
        }
    }
}

/// `num / den` as a decimal string with six fractional digits, computed in
/// integers. `0 / 0` is `"0.000000"`.
pub fn decimal_ratio(num: u64, den: u64) -> String {
    if den == 0 {
        return "0.000000".to_string();
    }
    let scaled = (num as u128 * 2_000_000 + den as u128) / (2 * den as u128);
    format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOutcome {
    pub summary: ScanSummary,
    pub records: Vec<ConjectureRecord>,
}

/// Evaluates every consecutive pair in `table` whose midpoint is at least
/// `min_midpoint`.
///
/// Pairs are evaluated in parallel on the current rayon pool; the returned
/// records are ordered by `p_prev2` regardless of thread count.
pub fn scan(
    table: &PrimeTable,
    mode: WindowMode,
    min_midpoint: u64,
) -> Result<ScanOutcome, LabError> {
    if table.len() < 2 {
        return Err(LabError::InsufficientTable {
            limit: table.limit(),
        });
    }
    let records: Vec<ConjectureRecord> = table
        .primes()
        .par_windows(2)
        .map(|w| {
            evaluate_window(
                PrimePair {
                    p_prev2: w[0],
                    p_prev1: w[1],
                },
                mode,
            )
        })
        .filter(|r| r.midpoint >= min_midpoint)
        .collect();
    Ok(ScanOutcome {
        summary: ScanSummary::from_records(mode, min_midpoint, &records),
        records,
    })
}

/// Lazy scan over all primes, without an upper bound.
pub fn scan_unbounded(
    mode: WindowMode,
    min_midpoint: u64,
) -> impl Iterator<Item = ConjectureRecord> {
    let mut primes = Primes::new().peekable();
    std::iter::from_fn(move || {
        let p = primes.next()?;
        let q = *primes.peek()?;
        Some(PrimePair {
            p_prev2: p,
            p_prev1: q,
        })
    })
    .map(move |pair| evaluate_window(pair, mode))
    .filter(move |r| r.midpoint >= min_midpoint)
}

/// Sorted, deduplicated union of every prime found by the scan.
pub fn condition_primes(
    table: &PrimeTable,
    mode: WindowMode,
    min_midpoint: u64,
) -> Result<Vec<u64>, LabError> {
    let outcome = match scan(table, mode, min_midpoint) {
        Ok(o) => o,
        Err(LabError::InsufficientTable { .. }) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    Ok(primes_from_records(&outcome.records))
}

pub fn primes_from_records(records: &[ConjectureRecord]) -> Vec<u64> {
    let mut out: Vec<u64> = records
        .iter()
        .flat_map(|r| r.primes_found.iter().copied())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::sieve;

    fn pair(a: u64, b: u64) -> PrimePair {
        PrimePair {
            p_prev2: a,
            p_prev1: b,
        }
    }

    #[test]
    fn window_examples() {
        let r = evaluate_window(pair(7, 11), WindowMode::Strict);
        assert_eq!(r.midpoint, 15);
        assert_eq!(r.primes_found, vec![13, 17]);
        assert!(r.hit);

        let r = evaluate_window(pair(3, 5), WindowMode::Strict);
        assert_eq!(r.midpoint, 7);
        assert_eq!(r.primes_found, vec![5]);
        assert!(r.hit);

        let r = evaluate_window(pair(1327, 1361), WindowMode::Interval);
        assert_eq!(r.midpoint, 1395);
        assert!(r.primes_found.is_empty());
        assert!(!r.hit);
    }

    #[test]
    fn candidate_sets() {
        assert_eq!(WindowMode::Strict.candidates(15), vec![13, 17]);
        assert_eq!(WindowMode::Odd3.candidates(15), vec![13, 15, 17]);
        assert_eq!(
            WindowMode::Interval.candidates(15),
            vec![13, 14, 15, 16, 17]
        );
    }

    #[test]
    fn guard_threshold() {
        let t = sieve(10).unwrap();
        for mode in WindowMode::ALL {
            let out = scan(&t, mode, 8).unwrap();
            assert_eq!(out.records[0].pair, pair(5, 7));
            // default threshold drops (5,7) since M - 2 = 7
            let out = scan(&t, mode, DEFAULT_MIN_MIDPOINT).unwrap();
            assert!(out.records.is_empty());
            assert_eq!(out.summary.hit_rate, "0.000000");
        }
    }

    #[test]
    fn insufficient_table() {
        let t = sieve(2).unwrap();
        assert_eq!(
            scan(&t, WindowMode::Strict, 10),
            Err(LabError::InsufficientTable { limit: 2 })
        );
        assert!(condition_primes(&t, WindowMode::Strict, 10)
            .unwrap()
            .is_empty());
        let t = sieve(5).unwrap();
        assert!(condition_primes(&t, WindowMode::Strict, 10)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn summary_counts() {
        let t = sieve(2000).unwrap();
        let out = scan(&t, WindowMode::Interval, DEFAULT_MIN_MIDPOINT).unwrap();
        let s = &out.summary;
        assert_eq!(s.total_pairs, out.records.len() as u64);
        assert_eq!(s.hits + s.misses, s.total_pairs);
        assert!(s.counterexamples.contains(&pair(1327, 1361)));
    }

    #[test]
    fn decimal_ratio_rounding() {
        assert_eq!(decimal_ratio(1, 3), "0.333333");
        assert_eq!(decimal_ratio(2, 3), "0.666667");
        assert_eq!(decimal_ratio(5, 5), "1.000000");
        assert_eq!(decimal_ratio(1, 8_000_000), "0.000000");
        assert_eq!(decimal_ratio(1, 2_000_000), "0.000001");
    }

    #[test]
    fn unbounded_scan_matches_table_scan() {
        let t = sieve(50_000).unwrap();
        let out = scan(&t, WindowMode::Odd3, 10).unwrap();
        let streamed: Vec<ConjectureRecord> = scan_unbounded(WindowMode::Odd3, 10)
            .take(out.records.len())
            .collect();
        assert_eq!(streamed, out.records);
    }

    #[test]
    fn mode_serde_names() {
        assert_eq!(
            serde_json::to_string(&WindowMode::Odd3).unwrap(),
            "\"odd3\""
        );
        assert_eq!(WindowMode::Interval.to_string(), "interval");
    }
}
