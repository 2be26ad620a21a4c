//! Overflow-safe modular arithmetic on unsigned 64-bit integers.
//!
//! Adding or multiplying two residues near a 64-bit modulus overflows the
//! intermediate value before the reduction can happen. The routines here
//! reorder the arithmetic so every intermediate stays within 64 bits, for
//! any modulus up to `u64::MAX`. Wider integers are reserved for the test
//! suite's oracles; the production path never uses them.

/// Modular addition `(a + b) mod m` with every intermediate below 2^64.
///
/// Operands must already be reduced (`a < m`, `b < m`); an unreduced operand
/// is a caller bug and panics rather than being silently reduced.
pub fn mod_add(a: u64, b: u64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be at least 1");
    assert!(
        a < m && b < m,
        "operands must be reduced: a={a}, b={b}, m={m}"
    );
    if a >= m - b {
        // a + b >= m, so the reduction is a single subtraction of m.
        // Written as a - (m - b), no step can exceed 64 bits.
        a - (m - b)
    } else {
        a + b
    }
}

/// Modular multiplication `(a * b) mod m` with every intermediate below 2^64.
///
/// Four cases, tried in order:
/// 1. the full product fits in 64 bits: multiply and reduce directly;
/// 2. squaring (`a == b`): square the smaller of `a` and `m - a` when that
///    square fits in 64 bits;
/// 3. doubling (`a == 2`): a single overflow-safe addition;
/// 4. otherwise: shift-and-add over the bits of `b`, with the accumulation
///    and the doubling both routed through [`mod_add`].
///
/// Panics unless `a < m` and `b < m`.
pub fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be at least 1");
    assert!(
        a < m && b < m,
        "operands must be reduced: a={a}, b={b}, m={m}"
    );
    if let Some(product) = a.checked_mul(b) {
        return product % m;
    }
    if a == b {
        // (m - a)^2 == a^2 (mod m), so square whichever factor is smaller.
        let small = a.min(m - a);
        if let Some(square) = small.checked_mul(small) {
            return square % m;
        }
    }
    if a == 2 {
        return mod_add(b, b, m);
    }
    let mut acc = 0u64;
    let mut addend = a;
    let mut remaining = b;
    while remaining > 0 {
        if remaining & 1 == 1 {
            acc = mod_add(acc, addend, m);
        }
        addend = mod_add(addend, addend, m);
        remaining >>= 1;
    }
    acc
}

/// Modular exponentiation `base^exponent mod m` by repeated squaring.
///
/// The base is reduced modulo `m` first; the zero exponent yields 1 for any
/// `m > 1`, and `m = 1` yields 0.
pub fn mod_exp(base: u64, exponent: u64, m: u64) -> u64 {
    assert!(m >= 1, "modulus must be at least 1");
    if m == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut square = base % m;
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            result = mod_mul(result, square, m);
        }
        e >>= 1;
        if e > 0 {
            square = mod_mul(square, square, m);
        }
    }
    result
}

/// A value known to be reduced modulo a fixed modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Panics unless `value < modulus` and `modulus >= 1`.
    pub fn new(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be at least 1");
        assert!(value < modulus, "{value} is not reduced modulo {modulus}");
        Self { value, modulus }
    }

    /// Reduces an arbitrary integer into the ring.
    pub fn reduce(value: u64, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be at least 1");
        Self {
            value: value % modulus,
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn pow(self, exponent: u64) -> Residue {
        Residue {
            value: mod_exp(self.value, exponent, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Add for Residue {
    type Output = Residue;

    fn add(self, other: Residue) -> Residue {
        assert_eq!(self.modulus, other.modulus, "mismatched moduli");
        Residue {
            value: mod_add(self.value, other.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Mul for Residue {
    type Output = Residue;

    fn mul(self, other: Residue) -> Residue {
        assert_eq!(self.modulus, other.modulus, "mismatched moduli");
        Residue {
            value: mod_mul(self.value, other.value, self.modulus),
            modulus: self.modulus,
        }
    }
}
