const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp != 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// One Miller-Rabin round. `n` odd, `n - 1 = d · 2^s`.
fn strong_probable_prime(n: u64, d: u64, s: u32, a: u64) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality for every `u64`.
///
/// Trial division by the primes up to 37 first, then Miller-Rabin. The bases
/// `{2, 7, 61}` are sufficient below `2^32`, and the first twelve primes are
/// sufficient for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 37 * 37 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let bases: &[u64] = if n < 1 << 32 {
        &[2, 7, 61]
    } else {
        &SMALL_PRIMES
    };
    bases.iter().all(|&a| strong_probable_prime(n, d, s, a))
}

/// Smallest prime strictly greater than `n`, or `None` past the last 64-bit
/// prime.
pub fn next_prime(n: u64) -> Option<u64> {
    let mut c = n.checked_add(1)?;
    while !is_prime(c) {
        c = c.checked_add(1)?;
    }
    Some(c)
}
