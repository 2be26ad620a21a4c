//! Sieve of Eratosthenes prime generation and sorted-table membership.
//!
//! These are the two halves of the prime-table path for arrays: sieve every
//! prime up to the array maximum once, then answer each element with a
//! binary search instead of trial division.

use crate::error::Error;
use crate::util::isqrt;

/// Default upper bound accepted by the sieve before reporting a resource
/// error. At this size the odd-only bit buffer is 256 MiB.
pub const DEFAULT_SIEVE_CEILING: u64 = 1 << 32;

/// Exactly the primes up to `limit`, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
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

    pub fn contains(&self, value: u64) -> bool {
        self.primes.binary_search(&value).is_ok()
    }
}

/// Sieves all primes up to `limit` under the default memory ceiling.
pub fn primes_up_to(limit: u64) -> Result<PrimeTable, Error> {
    primes_up_to_bounded(limit, DEFAULT_SIEVE_CEILING)
}

/// Sieves all primes up to `limit`, refusing limits above `ceiling`.
///
/// A classic bit-per-odd-number Eratosthenes sieve; `limit < 2` yields an
/// empty table.
pub fn primes_up_to_bounded(limit: u64, ceiling: u64) -> Result<PrimeTable, Error> {
    if limit > ceiling {
        return Err(Error::SieveLimitExceeded {
            requested: limit,
            ceiling,
        });
    }
    if limit < 2 {
        return Ok(PrimeTable {
            limit,
            primes: Vec::new(),
        });
    }
    // Index i stands for the odd number 2i + 1; a set bit marks a composite.
    let half = ((limit - 1) / 2) as usize;
    let mut composite = vec![0u64; half / 64 + 1];
    composite[0] |= 1; // 1 is not prime
    let mut i = 1usize;
    loop {
        let p = 2 * i as u64 + 1;
        if p > limit / p {
            break; // p * p > limit, phrased without overflow
        }
        if composite[i / 64] >> (i % 64) & 1 == 0 {
            // Crossing off starts at p^2, whose index is 2i(i + 1).
            let mut j = 2 * i * (i + 1);
            while j <= half {
                composite[j / 64] |= 1 << (j % 64);
                j += p as usize;
            }
        }
        i += 1;
    }
    let mut primes = Vec::with_capacity(prime_count_estimate(limit));
    primes.push(2);
    'words: for (word_index, &word) in composite.iter().enumerate() {
        let mut live = !word;
        while live != 0 {
            let index = word_index * 64 + live.trailing_zeros() as usize;
            if index > half {
                break 'words;
            }
            primes.push(2 * index as u64 + 1);
            live &= live - 1;
        }
    }
    debug_assert!(primes.windows(2).all(|w| w[0] < w[1]));
    Ok(PrimeTable { limit, primes })
}

// Over-estimate of pi(limit) so the collection vector never reallocates.
fn prime_count_estimate(limit: u64) -> usize {
    if limit < 10 {
        return 8;
    }
    let n = limit as f64;
    (n / n.ln() * 1.2) as usize + 8
}

/// Membership mask: `mask[i]` is true iff `values[i]` appears in the table.
///
/// One binary search per element. Panics if a value exceeds the table's
/// limit, since absence from the table would then be meaningless.
pub fn sorted_membership(values: &[u64], table: &PrimeTable) -> Vec<bool> {
    values
        .iter()
        .map(|&value| {
            assert!(
                value <= table.limit(),
                "value {value} exceeds the prime table limit {}",
                table.limit()
            );
            table.contains(value)
        })
        .collect()
}

/// Cost model for trial division over the incrementing input `1..=n`: the
/// number of divisions performed when every element is divided by each prime
/// smaller than it, with candidate primes capped at `isqrt(n)`.
///
/// Each prime `q` is used once per element exceeding it, so the total is the
/// sum of `n - q` over the primes — identical to walking the elements one by
/// one, but feasible for n in the hundreds of millions. Accumulation is done
/// in 128 bits; panics if the final count does not fit in a `u64` (that
/// takes n beyond roughly 2^45).
pub fn division_count(n: u64) -> u64 {
    let table =
        primes_up_to(isqrt(n)).expect("sqrt bound is always within the default sieve ceiling");
    let total: u128 = table.primes().iter().map(|&q| (n - q) as u128).sum();
    u64::try_from(total).expect("division count exceeds the u64 range")
}
