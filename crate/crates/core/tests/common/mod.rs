// Independent oracles. Nothing here calls into the code paths under test
// except to read plain data back out of the result types.
#![allow(dead_code)]

use num_bigint::BigInt;

pub fn trial_is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn trial_primes_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&n| trial_is_prime(n)).collect()
}

/// What a scan record should contain, derived by explicit loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRecord {
    pub p_prev2: u64,
    pub p_prev1: u64,
    pub midpoint: u64,
    pub primes_found: Vec<u64>,
    pub hit: bool,
}

/// `mode`: "strict", "odd3" or "interval".
pub fn brute_force_scan(primes: &[u64], mode: &str, min_midpoint: u64) -> Vec<OracleRecord> {
    let mut out = Vec::new();
    for i in 0..primes.len().saturating_sub(1) {
        let (a, b) = (primes[i], primes[i + 1]);
        let m = 2 * b - a;
        if m < min_midpoint {
            continue;
        }
        let mut candidates = Vec::new();
        match mode {
            "strict" => {
                candidates.push(m - 2);
                candidates.push(m + 2);
            }
            "odd3" => {
                candidates.push(m - 2);
                candidates.push(m);
                candidates.push(m + 2);
            }
            "interval" => {
                let mut c = m - 2;
                while c <= m + 2 {
                    candidates.push(c);
                    c += 1;
                }
            }
            other => panic!("unknown mode {other}"),
        }
        let mut found = Vec::new();
        for c in candidates {
            if trial_is_prime(c) {
                found.push(c);
            }
        }
        out.push(OracleRecord {
            p_prev2: a,
            p_prev1: b,
            midpoint: m,
            hit: !found.is_empty(),
            primes_found: found,
        });
    }
    out
}

/// Horner evaluation of `Σ coeffs[i] x^i`.
pub fn eval_poly(coeffs: &[i64], x: i64) -> BigInt {
    let x = BigInt::from(x);
    coeffs
        .iter()
        .rev()
        .fold(BigInt::from(0), |acc, &c| acc * &x + BigInt::from(c))
}
