//! Prime generation and primality testing.
//!
//! [`sieve`] builds a [`PrimeTable`] with a segmented sieve of Eratosthenes.
//! [`is_prime`] is a deterministic test valid for every `u64`, so code that
//! needs to look past the end of a table never has to guess.

mod primality;
mod sieve;

pub use primality::{is_prime, next_prime};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest limit [`sieve`] accepts. The prime list for this limit is about
/// 400 MB.
pub const DEFAULT_MAX_SIEVE_LIMIT: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrimeError {
    #[error("sieve limit must be at least 2, got {0}")]
    LimitTooSmall(u64),
    #[error("sieve limit {limit} exceeds the memory budget (max {max})")]
    ExceedsBudget { limit: u64, max: u64 },
}

/// Every prime up to and including `limit`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Membership by binary search. Values above `limit` always return
    /// `false`; use [`is_prime`] for those.
    pub fn contains(&self, n: u64) -> bool {
        self.primes.binary_search(&n).is_ok()
    }

    /// Successive prime pairs `(p, p')` with `p >= start_min`.
    pub fn consecutive_pairs(&self, start_min: u64) -> impl Iterator<Item = PrimePair> + '_ {
        let from = self.primes.partition_point(|&p| p < start_min);
        self.primes[from..].windows(2).map(|w| PrimePair {
            p_prev2: w[0],
            p_prev1: w[1],
        })
    }

    /// The prime following `p`. Falls back to primality testing when `p` is
    /// the last entry of the table.
    pub fn next_after(&self, p: u64) -> Option<u64> {
        let idx = self.primes.partition_point(|&q| q <= p);
        match self.primes.get(idx) {
            Some(&q) => Some(q),
            None => next_prime(p.max(self.limit)),
        }
    }
}

/// Two consecutive primes, `p_prev2 < p_prev1`, with nothing prime between.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PrimePair {
    pub p_prev2: u64,
    pub p_prev1: u64,
}

impl PrimePair {
    /// Builds a pair, checking both members and that they are consecutive.
    pub fn new(p_prev2: u64, p_prev1: u64) -> Option<Self> {
        (p_prev2 < p_prev1
            && is_prime(p_prev2)
            && is_prime(p_prev1)
            && next_prime(p_prev2) == Some(p_prev1))
        .then_some(Self { p_prev2, p_prev1 })
    }

    pub fn gap(&self) -> u64 {
        self.p_prev1 - self.p_prev2
    }
}

pub fn sieve(limit: u64) -> Result<PrimeTable, PrimeError> {
    sieve_with_budget(limit, DEFAULT_MAX_SIEVE_LIMIT)
}

pub fn sieve_with_budget(limit: u64, max_limit: u64) -> Result<PrimeTable, PrimeError> {
    if limit < 2 {
        return Err(PrimeError::LimitTooSmall(limit));
    }
    if limit > max_limit {
        return Err(PrimeError::ExceedsBudget {
            limit,
            max: max_limit,
        });
    }
    Ok(PrimeTable {
        limit,
        primes: sieve::primes_up_to(limit),
    })
}

/// Unbounded, increasing stream of primes.
///
/// Sieves one segment at a time and grows the base prime list on demand, so
/// memory stays proportional to the segment size plus `sqrt` of the current
/// position.
#[derive(Debug)]
pub struct Primes {
    buf: Vec<u64>,
    pos: usize,
    low: u64,
    base: Vec<u64>,
    base_limit: u64,
    marks: Vec<bool>,
    emitted_two: bool,
}

impl Primes {
    pub fn new() -> Self {
        Self {
            buf: Vec::new(),
            pos: 0,
            low: 3,
            base: Vec::new(),
            base_limit: 0,
            marks: Vec::new(),
            emitted_two: false,
        }
    }

    fn refill(&mut self) -> bool {
        let Some(high) = self.low.checked_add(2 * sieve::SEGMENT_ODDS as u64) else {
            return false;
        };
        let need = (high - 1).isqrt();
        if need > self.base_limit {
            self.base_limit = need.max(self.base_limit * 2);
            self.base = sieve::odd_base_primes(self.base_limit);
        }
        self.buf.clear();
        self.pos = 0;
        sieve::sieve_segment(self.low, high, &self.base, &mut self.marks, &mut self.buf);
        self.low = high;
        true
    }
}

impl Default for Primes {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if !self.emitted_two {
            self.emitted_two = true;
            return Some(2);
        }
        while self.pos >= self.buf.len() {
            if !self.refill() {
                return None;
            }
        }
        let p = self.buf[self.pos];
        self.pos += 1;
        Some(p)
    }
}
