use serde::{Deserialize, Serialize};

use super::LabError;

/// Differences between successive entries of an increasing prime list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapSeries {
    pub source_primes: Vec<u64>,
    pub diffs: Vec<u64>,
}

/// One plotted point: 1-based index of the difference, the difference, and a
/// constant zero third coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapPoint {
    pub index: usize,
    pub diff: u64,
    pub zero: u64,
}

impl GapSeries {
    /// Fewer than two primes gives an empty series.
    pub fn from_primes(primes: &[u64]) -> Result<Self, LabError> {
        let diffs = primes
            .windows(2)
            .enumerate()
            .map(|(i, w)| {
                if w[1] > w[0] {
                    Ok(w[1] - w[0])
                } else {
                    Err(LabError::NotIncreasing(i + 1))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            source_primes: primes.to_vec(),
            diffs,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.diffs.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = GapPoint> + '_ {
        self.diffs.iter().enumerate().map(|(i, &diff)| GapPoint {
            index: i + 1,
            diff,
            zero: 0,
        })
    }
}
