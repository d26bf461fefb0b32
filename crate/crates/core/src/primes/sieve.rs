// Segmented sieve over odd numbers only. Index i of a segment starting at
// `low` (odd) stands for low + 2i.

pub(crate) const SEGMENT_ODDS: usize = 1 << 17;

/// Plain sieve for the base primes. Returns odd primes `<= limit`.
pub(crate) fn odd_base_primes(limit: u64) -> Vec<u64> {
    if limit < 3 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    let mut i = 3;
    while i <= n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += 2 * i;
            }
        }
        i += 2;
    }
    out
}

/// Marks composites among the odd numbers in `[low, high)` and appends the
/// survivors to `out`. `low` must be odd and every prime factor below
/// `sqrt(high)` must be present in `base`.
pub(crate) fn sieve_segment(
    low: u64,
    high: u64,
    base: &[u64],
    marks: &mut Vec<bool>,
    out: &mut Vec<u64>,
) {
    debug_assert!(low % 2 == 1);
    if high <= low {
        return;
    }
    let count = (high - low).div_ceil(2) as usize;
    marks.clear();
    marks.resize(count, false);

    for &p in base {
        let Some(sq) = p.checked_mul(p) else { break };
        if sq >= high {
            break;
        }
        let mut m = low.div_ceil(p) * p;
        if m % 2 == 0 {
            m += p;
        }
        let start = m.max(sq);
        let mut idx = ((start - low) / 2) as usize;
        let step = p as usize;
        while idx < count {
            marks[idx] = true;
            idx += step;
        }
    }

    out.extend(
        marks
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(i, _)| low + 2 * i as u64)
            .filter(|&n| n > 1),
    );
}

/// All primes `<= limit`, in increasing order.
pub(crate) fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let mut out = vec![2];
    let base = odd_base_primes(limit.isqrt());
    let mut marks = Vec::with_capacity(SEGMENT_ODDS);
    let mut low = 3;
    while low <= limit {
        let high = (low + 2 * SEGMENT_ODDS as u64).min(limit + 1);
        sieve_segment(low, high, &base, &mut marks, &mut out);
        low += 2 * SEGMENT_ODDS as u64;
    }
    out
}
