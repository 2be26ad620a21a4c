//! Wheel sieves: repeating difference cycles over a small prime basis, plus
//! the trial-division paths built on them.
//!
//! A wheel over basis `[2, 3, 5, 7]` is the increasing sequence of integers
//! coprime to every basis prime. Its gaps repeat with period 210 (the basis
//! product), so candidate divisors can be generated by cumulatively summing
//! a fixed 48-entry difference cycle instead of sieving.

use std::sync::OnceLock;

use crate::util::isqrt;

const SUPPORTED_BASIS: [u64; 4] = [2, 3, 5, 7];

/// A wheel's basis primes, difference cycle, and period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelSpec {
    basis: Vec<u64>,
    diffs: Vec<u64>,
    cycle_length: u64,
}

impl WheelSpec {
    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    /// Gaps between consecutive wheel elements over one full cycle.
    pub fn diffs(&self) -> &[u64] {
        &self.diffs
    }

    /// Period of the difference cycle: the product of the basis primes.
    pub fn cycle_length(&self) -> u64 {
        self.cycle_length
    }
}

/// Builds the wheel for a basis that is a non-empty prefix of `[2, 3, 5, 7]`.
///
/// The difference cycle is derived, not hardcoded: integers in
/// `[1, cycle_length]` coprime to the basis are enumerated, the wraparound
/// point `cycle_length + 1` is appended, and consecutive gaps are taken.
///
/// Panics on any other basis.
pub fn build_wheel(basis: &[u64]) -> WheelSpec {
    assert!(
        !basis.is_empty() && basis.len() <= 4 && basis == &SUPPORTED_BASIS[..basis.len()],
        "wheel basis must be a non-empty prefix of [2, 3, 5, 7], got {basis:?}"
    );
    let cycle_length: u64 = basis.iter().product();
    let mut elements: Vec<u64> = (1..=cycle_length)
        .filter(|k| basis.iter().all(|p| k % p != 0))
        .collect();
    elements.push(cycle_length + 1);
    let diffs = elements.windows(2).map(|w| w[1] - w[0]).collect();
    WheelSpec {
        basis: basis.to_vec(),
        diffs,
        cycle_length,
    }
}

/// Streams wheel elements greater than 1 in increasing order, up to a limit
/// (inclusive). Generation is cycle-by-cycle, so nothing is materialized.
pub struct WheelDivisors<'a> {
    diffs: &'a [u64],
    position: usize,
    current: u64,
    limit: u64,
}

impl<'a> WheelDivisors<'a> {
    pub fn new(spec: &'a WheelSpec, limit: u64) -> Self {
        Self {
            diffs: spec.diffs(),
            position: 0,
            current: 1,
            limit,
        }
    }
}

impl Iterator for WheelDivisors<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let next = self.current.checked_add(self.diffs[self.position])?;
        if next > self.limit {
            return None;
        }
        self.position = (self.position + 1) % self.diffs.len();
        self.current = next;
        Some(next)
    }
}

/// All wheel elements in `(1, limit]`, in increasing order.
///
/// The leading 1 every wheel starts from is excluded: dividing by it says
/// nothing.
pub fn wheel_divisors(spec: &WheelSpec, limit: u64) -> Vec<u64> {
    WheelDivisors::new(spec, limit).collect()
}

fn wheel_2357() -> &'static WheelSpec {
    static WHEEL: OnceLock<WheelSpec> = OnceLock::new();
    WHEEL.get_or_init(|| build_wheel(&SUPPORTED_BASIS))
}

/// Trial division for mid-range scalars via the 2/3/5/7 wheel.
///
/// True iff `n` is divisible by no basis prime and by no wheel element up to
/// `isqrt(n)`. The rule is only a primality test for `n` past the basis
/// primes; the dispatcher routes `2^18 <= n < 2^49` here and owns that
/// range guard.
pub fn trial_division_medium(n: u64) -> bool {
    let spec = wheel_2357();
    for &p in spec.basis() {
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let limit = isqrt(n);
    for divisor in WheelDivisors::new(spec, limit) {
        if n.is_multiple_of(divisor) {
            return false;
        }
    }
    true
}

/// Trial division for small scalars (`n < 2^18`) against odd divisors only.
///
/// Wheels wider than the 2-wheel do not pay off at this size: generating the
/// difference cycle costs more than the divisions it saves.
pub fn trial_division_small(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n == 2 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let limit = isqrt(n);
    let mut divisor = 3u64;
    while divisor <= limit {
        if n.is_multiple_of(divisor) {
            return false;
        }
        divisor += 2;
    }
    true
}
