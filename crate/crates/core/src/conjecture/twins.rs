use serde::{Deserialize, Serialize};

use super::{evaluate_window, LabError, WindowMode};
use crate::primes::{PrimePair, PrimeTable};

/// A prime, the prime after it, and whether the window anchored at that pair
/// contains a prime. Twin-ness is `difference == 2` and nothing else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinRecord {
    pub p_small: u64,
    pub p_large: u64,
    pub difference: u64,
    pub condition_satisfied: bool,
}

impl TwinRecord {
    pub fn is_twin(&self) -> bool {
        self.difference == 2
    }
}

/// One record per prime `p` in `[range_min, range_max]`. The successor of
/// the last prime may lie past `range_max` (or past the table).
pub fn twin_scan(
    table: &PrimeTable,
    range_min: u64,
    range_max: u64,
    mode: WindowMode,
) -> Result<Vec<TwinRecord>, LabError> {
    if range_max > table.limit() {
        return Err(LabError::RangeBeyondTable {
            range_max,
            limit: table.limit(),
        });
    }
    let primes = table.primes();
    let from = primes.partition_point(|&p| p < range_min);
    let to = primes.partition_point(|&p| p <= range_max);
    let out = primes[from..to.max(from)]
        .iter()
        .map(|&p| {
            let q = table.next_after(p).expect("successor of a table prime");
            let pair = PrimePair {
                p_prev2: p,
                p_prev1: q,
            };
            TwinRecord {
                p_small: p,
                p_large: q,
                difference: q - p,
                condition_satisfied: evaluate_window(pair, mode).hit,
            }
        })
        .collect();
    Ok(out)
}

pub fn twin_pairs(records: &[TwinRecord]) -> Vec<TwinRecord> {
    records
        .iter()
        .copied()
        .filter(TwinRecord::is_twin)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::sieve;

    #[test]
    fn small_range() {
        let t = sieve(100).unwrap();
        let recs = twin_scan(&t, 3, 30, WindowMode::Strict).unwrap();
        let twins: Vec<(u64, u64)> = twin_pairs(&recs)
            .iter()
            .map(|r| (r.p_small, r.p_large))
            .collect();
        assert_eq!(twins, vec![(3, 5), (5, 7), (11, 13), (17, 19), (29, 31)]);
        assert_eq!(recs.first().unwrap().p_small, 3);
        assert_eq!(recs.last().unwrap().p_small, 29);
    }

    #[test]
    fn successor_past_table_limit() {
        let t = sieve(30).unwrap();
        let recs = twin_scan(&t, 29, 30, WindowMode::Strict).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!((recs[0].p_small, recs[0].p_large), (29, 31));
    }

    #[test]
    fn empty_range() {
        let t = sieve(100).unwrap();
        assert!(twin_scan(&t, 24, 28, WindowMode::Strict)
            .unwrap()
            .is_empty());
        assert!(twin_scan(&t, 50, 40, WindowMode::Strict)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn condition_is_recorded_separately() {
        let t = sieve(100).unwrap();
        let recs = twin_scan(&t, 7, 7, WindowMode::Strict).unwrap();
        // (7, 11): M = 15, 13 and 17 prime
        assert_eq!(
            recs,
            vec![TwinRecord {
                p_small: 7,
                p_large: 11,
                difference: 4,
                condition_satisfied: true
            }]
        );
    }

    #[test]
    fn range_beyond_table() {
        let t = sieve(100).unwrap();
        assert_eq!(
            twin_scan(&t, 3, 101, WindowMode::Strict),
            Err(LabError::RangeBeyondTable {
                range_max: 101,
                limit: 100
            })
        );
    }
}
