//! Independent oracles for the integration suites. Everything here computes
//! through 128-bit intermediates or plain enumeration, deliberately sharing
//! no code with the production paths it checks.

#![allow(dead_code)] // each test binary uses a different subset

pub fn oracle_mod_add(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

pub fn oracle_mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn oracle_mod_exp(base: u64, exponent: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m = m as u128;
    let mut result = 1u128;
    let mut square = base as u128 % m;
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            result = result * square % m;
        }
        square = square * square % m;
        e >>= 1;
    }
    result as u64
}

/// Plain boolean sieve: `mask[x]` is true iff `x` is prime, for x < limit.
pub fn oracle_sieve(limit: usize) -> Vec<bool> {
    let mut mask = vec![true; limit.max(2)];
    mask[0] = false;
    mask[1] = false;
    let mut p = 2usize;
    while p * p < limit {
        if mask[p] {
            let mut multiple = p * p;
            while multiple < limit {
                mask[multiple] = false;
                multiple += p;
            }
        }
        p += 1;
    }
    mask.truncate(limit);
    mask
}

/// Miller-Rabin on 128-bit arithmetic with the same witness set the
/// production code uses; independent of every 64-bit-only trick.
pub fn oracle_is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for base in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let base = base % n;
        if base == 0 {
            continue;
        }
        let mut x = oracle_mod_exp(base, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = oracle_mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime factor by direct trial division, or None when `n` is
/// prime. Only sensible for moderate `n`.
pub fn smallest_factor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return Some(d);
        }
        d += 1;
    }
    None
}
