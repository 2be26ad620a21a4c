//! Input validation, array shrinking, and routing between the five
//! evaluation strategies.
//!
//! Scalars are routed by magnitude: plain odd trial division below 2^18, the
//! 2/3/5/7 wheel up to 2^49, and Miller-Rabin beyond. Arrays are first
//! shrunk (multiples of 2, 3, 5 and 7 are resolved on the spot), then the
//! remaining elements go either to sieve-to-sqrt trial division or to a full
//! prime table with binary-search membership, picked by a fitted linear
//! crossover model of the array's size and maximum.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, InvalidReason};
use crate::millerrabin::is_prime_u64;
use crate::sieve;
use crate::util::isqrt;
use crate::wheel::{trial_division_medium, trial_division_small};

/// Scalars below this go to plain odd trial division.
pub const SMALL_SCALAR_LIMIT: u64 = 1 << 18;
/// Scalars at or above this go straight to Miller-Rabin.
pub const LARGE_SCALAR_MIN: u64 = 1 << 49;

const SHRINK_PRIMES: [u64; 4] = [2, 3, 5, 7];

/// The five evaluation strategies an input can be routed to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    SmallScalar,
    MediumScalar,
    LargeScalar,
    ArraySqrt,
    ArrayBinarySearch,
}

impl PathKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PathKind::SmallScalar => "small-scalar",
            PathKind::MediumScalar => "medium-scalar",
            PathKind::LargeScalar => "large-scalar",
            PathKind::ArraySqrt => "array-sqrt",
            PathKind::ArrayBinarySearch => "array-binsearch",
        }
    }
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PathKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "small-scalar" => Ok(PathKind::SmallScalar),
            "medium-scalar" => Ok(PathKind::MediumScalar),
            "large-scalar" => Ok(PathKind::LargeScalar),
            "array-sqrt" => Ok(PathKind::ArraySqrt),
            "array-binsearch" => Ok(PathKind::ArrayBinarySearch),
            other => Err(format!("unknown path kind: {other}")),
        }
    }
}

/// Which strategy was chosen and the numbers that drove the choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathDecision {
    pub kind: PathKind,
    /// Validated element count the heuristic saw.
    pub element_count: u64,
    /// Maximum value among the elements the chosen path must process.
    pub max_value: u64,
    /// Value of the crossover formula, when one was evaluated.
    pub crossover: Option<i128>,
}

/// The two fitted crossover lines and the element count where the fit
/// switches between them.
///
/// Either line maps an element count to the largest array maximum that still
/// favors the full prime table; the constants came from timing both paths
/// against each other and can be re-fitted from new measurements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeuristicModel {
    pub regime_split: u64,
    pub small_slope: i64,
    pub small_intercept: i64,
    pub large_slope: i64,
    pub large_intercept: i64,
}

impl Default for HeuristicModel {
    fn default() -> Self {
        Self {
            regime_split: 30_000,
            small_slope: 275,
            small_intercept: -100_000,
            large_slope: 613,
            large_intercept: -200_000_000,
        }
    }
}

impl HeuristicModel {
    /// Evaluates the crossover line for an element count. Signed and wide:
    /// the intercepts are negative and counts can be large.
    pub fn crossover(&self, element_count: u64) -> i128 {
        let (slope, intercept) = if element_count < self.regime_split {
            (self.small_slope, self.small_intercept)
        } else {
            (self.large_slope, self.large_intercept)
        };
        slope as i128 * element_count as i128 + intercept as i128
    }
}

/// Forces the array survivors down one path regardless of the heuristic.
/// The chosen path never changes any mask bit, only the work done.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ForcedPath {
    #[default]
    Auto,
    Sqrt,
    BinarySearch,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub heuristic: HeuristicModel,
    pub sieve_ceiling: u64,
    pub parallel: bool,
    pub forced_path: ForcedPath,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            heuristic: HeuristicModel::default(),
            sieve_ceiling: sieve::DEFAULT_SIEVE_CEILING,
            parallel: true,
            forced_path: ForcedPath::Auto,
        }
    }
}

/// Per-element primality results, in input order, with shape metadata for
/// callers that flattened a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalityMask {
    bits: Vec<bool>,
    shape: Vec<usize>,
}

impl PrimalityMask {
    pub fn new(bits: Vec<bool>) -> Self {
        let shape = vec![bits.len()];
        Self { bits, shape }
    }

    /// Panics unless the shape's element product equals the bit count.
    pub fn with_shape(bits: Vec<bool>, shape: Vec<usize>) -> Self {
        let expected: usize = shape.iter().product();
        assert_eq!(expected, bits.len(), "shape does not cover the mask");
        Self { bits, shape }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn count_primes(&self) -> u64 {
        self.bits.iter().filter(|&&bit| bit).count() as u64
    }
}

/// An element that survived shrinking, still carrying its input position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Survivor {
    pub index: usize,
    pub value: u64,
}

/// Result of shrinking: unresolved elements plus the partial mask for the
/// resolved ones (`None` marks a survivor's slot).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shrunk {
    pub survivors: Vec<Survivor>,
    pub resolved: Vec<Option<bool>>,
}

/// Checks that every element is a non-negative integer representable in 64
/// bits and converts it, preserving order.
pub fn validate(values: &[f64]) -> Result<Vec<u64>, Error> {
    const U64_DOMAIN_END: f64 = 18446744073709551616.0; // 2^64
    values
        .iter()
        .enumerate()
        .map(|(index, &value)| {
            let reason = if value < 0.0 {
                InvalidReason::Negative
            } else if value >= U64_DOMAIN_END {
                InvalidReason::TooLarge
            } else if value.fract() != 0.0 || value.is_nan() {
                InvalidReason::NonInteger
            } else {
                return Ok(value as u64);
            };
            Err(Error::InvalidElement {
                index,
                value,
                reason,
            })
        })
        .collect()
}

/// Resolves every element with a factor in {2, 3, 5, 7} (and the elements 0
/// and 1) immediately; everything else survives with its position.
///
/// For dense inputs this settles roughly three quarters of the array before
/// any path runs.
pub fn shrink(values: &[u64]) -> Shrunk {
    let mut survivors = Vec::new();
    let mut resolved = Vec::with_capacity(values.len());
    for (index, &value) in values.iter().enumerate() {
        if value < 2 {
            resolved.push(Some(false));
        } else if SHRINK_PRIMES.contains(&value) {
            resolved.push(Some(true));
        } else if SHRINK_PRIMES.iter().any(|&p| value % p == 0) {
            resolved.push(Some(false));
        } else {
            resolved.push(None);
            survivors.push(Survivor { index, value });
        }
    }
    Shrunk {
        survivors,
        resolved,
    }
}

fn scalar_kind(value: u64) -> PathKind {
    if value < SMALL_SCALAR_LIMIT {
        PathKind::SmallScalar
    } else if value < LARGE_SCALAR_MIN {
        PathKind::MediumScalar
    } else {
        PathKind::LargeScalar
    }
}

fn decide_array_path(
    element_count: u64,
    survivors: &[Survivor],
    model: &HeuristicModel,
) -> PathDecision {
    let max_value = survivors.iter().map(|s| s.value).max().unwrap_or(0);
    let crossover = model.crossover(element_count);
    // Binary search only when the model says the maximum is comfortably
    // low for this many elements; ties go to the sqrt path.
    let kind = if crossover <= max_value as i128 {
        PathKind::ArraySqrt
    } else {
        PathKind::ArrayBinarySearch
    };
    PathDecision {
        kind,
        element_count,
        max_value,
        crossover: Some(crossover),
    }
}

/// Picks the strategy for a validated, non-empty input.
///
/// A single element is classified by its magnitude alone. For longer inputs
/// the crossover model compares the validated element count against the
/// maximum of the elements that survive shrinking.
///
/// Panics on empty input (an empty input never reaches routing) and on a
/// degenerate model.
pub fn classify(values: &[u64], model: &HeuristicModel) -> PathDecision {
    assert!(!values.is_empty(), "classify requires at least one element");
    assert!(
        model.small_slope > 0 && model.large_slope > 0 && model.regime_split >= 1,
        "heuristic model must have positive slopes and a regime split of at least 1"
    );
    if values.len() == 1 {
        let value = values[0];
        return PathDecision {
            kind: scalar_kind(value),
            element_count: 1,
            max_value: value,
            crossover: None,
        };
    }
    let shrunk = shrink(values);
    decide_array_path(values.len() as u64, &shrunk.survivors, model)
}

/// A mask plus the routing decision that produced it (when any element
/// actually reached a path; fully shrunk inputs resolve without one).
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub mask: PrimalityMask,
    pub decision: Option<PathDecision>,
}

/// Evaluates primality for lists of values under a fixed configuration.
#[derive(Debug, Clone, Default)]
pub struct Dispatcher {
    config: Config,
}

impl Dispatcher {
    pub fn new(config: Config) -> Self {
        Self { config }
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    /// Primality of every element, in input order.
    ///
    /// Errors only when a sieve request exceeds the configured ceiling and
    /// no cheaper path can stand in (the binary-search path falls back to
    /// the sqrt path on its own).
    pub fn is_prime(&self, values: &[u64]) -> Result<PrimalityMask, Error> {
        self.evaluate(values).map(|evaluation| evaluation.mask)
    }

    /// Validates floating-point input, then evaluates it.
    pub fn is_prime_numeric(&self, values: &[f64]) -> Result<PrimalityMask, Error> {
        let validated = validate(values)?;
        self.is_prime(&validated)
    }

    /// Full evaluation, reporting the routing decision alongside the mask.
    pub fn evaluate(&self, values: &[u64]) -> Result<Evaluation, Error> {
        if values.is_empty() {
            return Ok(Evaluation {
                mask: PrimalityMask::new(Vec::new()),
                decision: None,
            });
        }
        let Shrunk {
            survivors,
            mut resolved,
        } = shrink(values);
        let mut decision = None;
        if values.len() == 1 {
            if let Some(&survivor) = survivors.first() {
                let scalar_decision = classify(values, &self.config.heuristic);
                let verdict = match scalar_decision.kind {
                    PathKind::SmallScalar => trial_division_small(survivor.value),
                    PathKind::MediumScalar => trial_division_medium(survivor.value),
                    PathKind::LargeScalar => is_prime_u64(survivor.value),
                    PathKind::ArraySqrt | PathKind::ArrayBinarySearch => {
                        unreachable!("single elements classify as scalars")
                    }
                };
                resolved[survivor.index] = Some(verdict);
                decision = Some(scalar_decision);
            }
        } else {
            let (huge, rest): (Vec<Survivor>, Vec<Survivor>) = survivors
                .into_iter()
                .partition(|s| s.value >= LARGE_SCALAR_MIN);
            // Values at or above 2^49 would drag an array sieve across the
            // whole 64-bit range; each is settled individually instead.
            for (survivor, verdict) in huge.iter().zip(self.map_survivors(&huge, is_prime_u64)) {
                resolved[survivor.index] = Some(verdict);
            }
            if !rest.is_empty() {
                let (array_decision, verdicts) = self.run_array_path(values.len() as u64, &rest)?;
                for (survivor, verdict) in rest.iter().zip(verdicts) {
                    resolved[survivor.index] = Some(verdict);
                }
                decision = Some(array_decision);
            }
        }
        let bits = resolved
            .into_iter()
            .map(|bit| bit.expect("every element is resolved by some path"))
            .collect();
        Ok(Evaluation {
            mask: PrimalityMask::new(bits),
            decision,
        })
    }

    fn run_array_path(
        &self,
        element_count: u64,
        survivors: &[Survivor],
    ) -> Result<(PathDecision, Vec<bool>), Error> {
        let mut decision = decide_array_path(element_count, survivors, &self.config.heuristic);
        decision.kind = match self.config.forced_path {
            ForcedPath::Auto => decision.kind,
            ForcedPath::Sqrt => PathKind::ArraySqrt,
            ForcedPath::BinarySearch => PathKind::ArrayBinarySearch,
        };
        if decision.kind == PathKind::ArrayBinarySearch {
            match self.binary_search_path(survivors) {
                Ok(bits) => return Ok((decision, bits)),
                // The full table did not fit; the sqrt path always can.
                Err(Error::SieveLimitExceeded { .. }) => {
                    decision.kind = PathKind::ArraySqrt;
                }
                Err(other) => return Err(other),
            }
        }
        let bits = self.sqrt_path(survivors)?;
        Ok((decision, bits))
    }

    fn sqrt_path(&self, survivors: &[Survivor]) -> Result<Vec<bool>, Error> {
        let max = survivors
            .iter()
            .map(|s| s.value)
            .max()
            .expect("array path requires survivors");
        let table = sieve::primes_up_to_bounded(isqrt(max), self.config.sieve_ceiling)?;
        let primes = table.primes();
        Ok(self.map_survivors(survivors, |value| {
            primes
                .iter()
                .take_while(|&&q| q * q <= value)
                .all(|&q| value % q != 0)
        }))
    }

    fn binary_search_path(&self, survivors: &[Survivor]) -> Result<Vec<bool>, Error> {
        let max = survivors
            .iter()
            .map(|s| s.value)
            .max()
            .expect("array path requires survivors");
        let table = sieve::primes_up_to_bounded(max, self.config.sieve_ceiling)?;
        let values: Vec<u64> = survivors.iter().map(|s| s.value).collect();
        Ok(sieve::sorted_membership(&values, &table))
    }

    // Evaluates one pure predicate per survivor, optionally across threads.
    // Results keep survivor order either way, so the mask is deterministic.
    fn map_survivors<F>(&self, survivors: &[Survivor], verdict: F) -> Vec<bool>
    where
        F: Fn(u64) -> bool + Sync,
    {
        if self.config.parallel && survivors.len() >= 64 {
            survivors.par_iter().map(|s| verdict(s.value)).collect()
        } else {
            survivors.iter().map(|s| verdict(s.value)).collect()
        }
    }
}
