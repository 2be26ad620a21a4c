use std::fmt;

/// Why an input element was rejected during validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvalidReason {
    Negative,
    NonInteger,
    TooLarge,
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            InvalidReason::Negative => "negative",
            InvalidReason::NonInteger => "not an integer",
            InvalidReason::TooLarge => "beyond the 64-bit range",
        };
        f.write_str(text)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input element is outside the non-negative 64-bit integer domain.
    InvalidElement {
        index: usize,
        value: f64,
        reason: InvalidReason,
    },
    /// A sieve request exceeded the configured memory ceiling.
    SieveLimitExceeded { requested: u64, ceiling: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidElement {
                index,
                value,
                reason,
            } => write!(f, "input element {index} ({value}) is {reason}"),
            Error::SieveLimitExceeded { requested, ceiling } => write!(
                f,
                "sieve limit {requested} exceeds the configured ceiling of {ceiling}"
            ),
        }
    }
}

impl std::error::Error for Error {}
