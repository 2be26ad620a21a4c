//! Batch primality testing for unsigned 64-bit integers.
//!
//! The crate pairs overflow-safe modular arithmetic with a deterministic
//! Miller-Rabin test, wheel-based trial division, and a prime-table lookup
//! path for long arrays, then routes every input through whichever strategy
//! its size and shape favor.
//!
//! ```
//! use primecheck::{is_prime_mask, is_prime_u64};
//!
//! assert!(is_prime_u64(18_446_744_073_709_551_557));
//!
//! let mask = is_prime_mask(&[1, 2, 3, 4, 5]);
//! assert_eq!(mask.bits(), &[false, true, true, false, true]);
//! ```

pub mod dispatch;
mod error;
pub mod millerrabin;
pub mod modmath;
pub mod sieve;
pub mod util;
pub mod wheel;

pub use dispatch::{
    classify, shrink, validate, Config, Dispatcher, Evaluation, ForcedPath, HeuristicModel,
    PathDecision, PathKind, PrimalityMask, Shrunk, Survivor, LARGE_SCALAR_MIN, SMALL_SCALAR_LIMIT,
};
pub use error::{Error, InvalidReason};
pub use millerrabin::{is_prime_u64, SPRP_BASES_U64};
pub use sieve::{
    division_count, primes_up_to, primes_up_to_bounded, sorted_membership, PrimeTable,
    DEFAULT_SIEVE_CEILING,
};
pub use util::isqrt;
pub use wheel::{
    build_wheel, trial_division_medium, trial_division_small, wheel_divisors, WheelSpec,
};

/// Primality of every element under the default configuration.
pub fn is_prime_mask(values: &[u64]) -> PrimalityMask {
    Dispatcher::default()
        .is_prime(values)
        .expect("the default sieve ceiling covers every sqrt-path request")
}
