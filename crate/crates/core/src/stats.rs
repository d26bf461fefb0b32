//! Equal-width histograms over integer data and a side-by-side comparison
//! with shared bin edges.
//!
//! Bins are half-open `[lo, hi)` except the last, which is closed so the
//! range maximum is counted. Bin assignment is done in integer arithmetic,
//! the `f64` edges are only for reporting.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DEFAULT_BINS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("bin count must be at least 1")]
    ZeroBins,
    #[error("cannot derive a range from an empty input")]
    EmptyInput,
    #[error("invalid range [{lo}, {hi}]: need lo < hi")]
    InvalidRange { lo: i64, hi: i64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub total: u64,
}

impl Histogram {
    pub fn bin_count(&self) -> usize {
        self.counts.len()
    }
}

/// Histogram of `values` with `bins` equal-width bins.
///
/// Without an explicit range the bins span `[min, max + 1]`. Values outside
/// the range are ignored.
pub fn histogram(
    values: &[i64],
    bins: usize,
    range: Option<(i64, i64)>,
) -> Result<Histogram, StatsError> {
    if bins == 0 {
        return Err(StatsError::ZeroBins);
    }
    let (lo, hi) = match range {
        Some(r) => r,
        None => {
            let min = *values.iter().min().ok_or(StatsError::EmptyInput)?;
            let max = *values.iter().max().ok_or(StatsError::EmptyInput)?;
            (min, max + 1)
        }
    };
    if lo >= hi {
        return Err(StatsError::InvalidRange { lo, hi });
    }
    let span = (hi as i128) - (lo as i128);
    let b = bins as i128;

    let mut counts = vec![0u64; bins];
    for &v in values {
        if v < lo || v > hi {
            continue;
        }
        let idx = (((v as i128 - lo as i128) * b) / span).min(b - 1);
        counts[idx as usize] += 1;
    }
    let edges = (0..=bins)
        .map(|i| lo as f64 + (span as f64 * i as f64) / bins as f64)
        .collect();
    Ok(Histogram {
        edges,
        total: counts.iter().sum(),
        counts,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub count: u64,
    pub min: i64,
    pub max: i64,
    pub mean: f64,
    pub median: f64,
}

pub fn summary_stats(values: &[i64]) -> Result<SummaryStats, StatsError> {
    if values.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let n = sorted.len();
    let sum: i128 = sorted.iter().map(|&v| v as i128).sum();
    let median = if n % 2 == 1 {
        sorted[n / 2] as f64
    } else {
        (sorted[n / 2 - 1] as f64 + sorted[n / 2] as f64) / 2.0
    };
    Ok(SummaryStats {
        count: n as u64,
        min: sorted[0],
        max: sorted[n - 1],
        mean: sum as f64 / n as f64,
        median,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistributionComparison {
    pub histogram_condition: Histogram,
    pub histogram_all: Histogram,
    pub shared_edges: bool,
    pub condition_stats: SummaryStats,
    pub all_stats: SummaryStats,
}

/// Histograms both inputs over one set of edges spanning their union.
pub fn compare_distributions(
    condition: &[i64],
    all: &[i64],
    bins: usize,
) -> Result<DistributionComparison, StatsError> {
    let condition_stats = summary_stats(condition)?;
    let all_stats = summary_stats(all)?;
    let lo = condition_stats.min.min(all_stats.min);
    let hi = condition_stats.max.max(all_stats.max) + 1;
    let histogram_condition = histogram(condition, bins, Some((lo, hi)))?;
    let histogram_all = histogram(all, bins, Some((lo, hi)))?;
    let shared_edges = histogram_condition
        .edges
        .iter()
        .zip(&histogram_all.edges)
        .all(|(a, b)| a.to_bits() == b.to_bits());
    Ok(DistributionComparison {
        histogram_condition,
        histogram_all,
        shared_edges,
        condition_stats,
        all_stats,
    })
}
