//! Small numeric helpers shared across modules.

/// Integer square root: the largest `r` with `r * r <= n`.
///
/// Floating-point square roots lose exactness above 2^52, which matters when
/// a divisor bound sits next to a perfect square, so this stays in integers.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    // Newton's method from a power-of-two seed that is at least sqrt(n).
    let mut x = 1u64 << (n.ilog2() / 2 + 1);
    let mut next = (x + n / x) / 2;
    while next < x {
        x = next;
        next = (x + n / x) / 2;
    }
    x
}
