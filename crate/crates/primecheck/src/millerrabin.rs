//! Deterministic Miller-Rabin primality testing over the full u64 range.
//!
//! Built entirely on [`crate::modmath`], so no intermediate value ever needs
//! more than 64 bits. The fixed witness set below decides primality exactly
//! for every 64-bit integer; no randomness is involved anywhere.

use crate::modmath::{mod_exp, mod_mul};

/// Witness bases whose combined verdict is exact for all 64-bit integers.
pub const SPRP_BASES_U64: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

/// `n - 1` split into `2^s * d` with `d` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decomposition {
    pub s: u32,
    pub d: u64,
}

/// Splits `n - 1` into `2^s * d` with `d` odd. Panics unless `n` is odd and
/// at least 3.
pub fn decompose(n: u64) -> Decomposition {
    assert!(
        n >= 3 && n % 2 == 1,
        "decompose requires an odd n >= 3, got {n}"
    );
    let s = (n - 1).trailing_zeros();
    Decomposition { s, d: (n - 1) >> s }
}

/// Strong-probable-prime check of `n` against a single witness base.
///
/// Returns true when `base^d == +-1 (mod n)` or some squaring
/// `base^(2^r * d)` with `r < s` hits `-1`. The base is reduced modulo `n`
/// first; a base that reduces to 0 passes vacuously. Every prime passes for
/// every base, so a false return proves compositeness.
///
/// Panics unless `n` is odd and at least 3.
pub fn strong_probable_prime(n: u64, base: u64) -> bool {
    let Decomposition { s, d } = decompose(n);
    let base = base % n;
    if base == 0 {
        return true;
    }
    let mut x = mod_exp(base, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mod_mul(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Exact primality for any unsigned 64-bit integer.
///
/// ```
/// use primecheck::millerrabin::is_prime_u64;
///
/// assert!(is_prime_u64(2));
/// assert!(!is_prime_u64(2047)); // 23 * 89, passes base 2 alone
/// assert!(is_prime_u64(18_446_744_073_709_551_557));
/// ```
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n == 2 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    SPRP_BASES_U64
        .iter()
        .all(|&base| strong_probable_prime(n, base))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(13), Decomposition { s: 2, d: 3 });
        assert_eq!(decompose(17), Decomposition { s: 4, d: 1 });
        assert_eq!(decompose(2047), Decomposition { s: 1, d: 1023 });
    }

    #[test]
    #[should_panic(expected = "odd")]
    fn decompose_rejects_even() {
        decompose(12);
    }

    #[test]
    #[should_panic(expected = "odd")]
    fn decompose_rejects_tiny() {
        decompose(1);
    }

    #[test]
    fn sprp_accepts_primes() {
        assert!(strong_probable_prime(7, 2));
        assert!(strong_probable_prime(7, 5));
        // base reducing to 0 is a vacuous pass
        assert!(strong_probable_prime(7, 14));
    }

    #[test]
    fn sprp_base2_pseudoprime() {
        // 2047 = 23 * 89 fools base 2 but not base 3.
        assert!(strong_probable_prime(2047, 2));
        assert!(!strong_probable_prime(2047, 3));
    }

    #[test]
    fn is_prime_definitional() {
        assert!(!is_prime_u64(0));
        assert!(!is_prime_u64(1));
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(!is_prime_u64(4));
    }

    #[test]
    fn rejects_small_base_set_pseudoprime() {
        // smallest strong pseudoprime to bases 2, 3, 5 and 7
        assert!(!is_prime_u64(3215031751));
    }

    #[test]
    fn base_order_matches_contract() {
        assert_eq!(
            SPRP_BASES_U64,
            [2, 325, 9375, 28178, 450775, 9780504, 1795265022]
        );
    }

    #[test]
    fn largest_u64_prime() {
        assert!(is_prime_u64(18446744073709551557));
        assert!(!is_prime_u64(18446744073709551555));
    }
}
