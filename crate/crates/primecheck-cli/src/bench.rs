//! Timing suites producing machine-readable CSV records.
//!
//! Every suite is deterministic for a given seed: all inputs are drawn from
//! a seeded generator in a fixed order, and the dispatcher runs
//! single-threaded so measurements stay comparable. Raw per-repeat rows are
//! emitted alongside one median row per group; the median row's checksum is
//! the total prime count across its repeats.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use primecheck::{is_prime_u64, Config, Dispatcher, Evaluation, ForcedPath};

pub const CSV_HEADER: &str = "label,element_count,max_value,path,wall_time_ns,checksum";

/// Bit widths mirroring the scalar measurement grid.
const BIT_SIZES: [u32; 14] = [4, 8, 16, 24, 32, 36, 40, 44, 48, 50, 52, 56, 60, 64];
const ARRAY_LENGTHS: [u64; 3] = [10_000, 100_000, 1_000_000];
const CROSSOVER_ELEMENTS: [usize; 6] = [1_000, 3_000, 10_000, 30_000, 100_000, 300_000];
const CROSSOVER_MAXIMA: [u64; 4] = [10_000, 100_000, 1_000_000, 10_000_000];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Scalar,
    Array,
    Crossover,
}

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub suite: Suite,
    pub repeats: usize,
    pub seed: u64,
    pub sieve_ceiling: u64,
}

/// One timing measurement (or a median aggregate of a group of them).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub label: String,
    pub element_count: u64,
    pub max_value: u64,
    pub path: String,
    pub wall_time_ns: u64,
    pub checksum: u64,
}

impl BenchRecord {
    pub fn to_csv_row(&self) -> String {
        assert!(
            !self.label.contains(',') && !self.path.contains(','),
            "CSV fields must not contain commas"
        );
        format!(
            "{},{},{},{},{},{}",
            self.label,
            self.element_count,
            self.max_value,
            self.path,
            self.wall_time_ns,
            self.checksum
        )
    }

    pub fn parse_csv_row(row: &str) -> Result<Self, String> {
        let fields: Vec<&str> = row.split(',').collect();
        if fields.len() != 6 {
            return Err(format!("expected 6 fields, got {}: '{row}'", fields.len()));
        }
        let number = |text: &str| {
            text.parse::<u64>()
                .map_err(|_| format!("'{text}' is not an unsigned integer in '{row}'"))
        };
        Ok(Self {
            label: fields[0].to_string(),
            element_count: number(fields[1])?,
            max_value: number(fields[2])?,
            path: fields[3].to_string(),
            wall_time_ns: number(fields[4])?,
            checksum: number(fields[5])?,
        })
    }
}

/// Renders records as CSV with a header line.
pub fn emit_csv(records: &[BenchRecord]) -> String {
    let mut text = String::from(CSV_HEADER);
    text.push('\n');
    for record in records {
        text.push_str(&record.to_csv_row());
        text.push('\n');
    }
    text
}

/// Parses CSV produced by [`emit_csv`] back into records.
pub fn parse_csv(text: &str) -> Result<Vec<BenchRecord>, String> {
    text.lines()
        .filter(|line| !line.is_empty() && *line != CSV_HEADER)
        .map(BenchRecord::parse_csv_row)
        .collect()
}

pub fn run_suite(options: &BenchOptions) -> Vec<BenchRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    match options.suite {
        Suite::Scalar => scalar_suite(options, &mut rng),
        Suite::Array => array_suite(options),
        Suite::Crossover => crossover_suite(options, &mut rng),
    }
}

fn dispatcher(options: &BenchOptions, forced_path: ForcedPath) -> Dispatcher {
    Dispatcher::new(Config {
        forced_path,
        sieve_ceiling: options.sieve_ceiling,
        parallel: false, // timings must not depend on thread scheduling
        ..Config::default()
    })
}

struct Run {
    max_value: u64,
    path: String,
    wall_time_ns: u64,
    checksum: u64,
}

fn timed(dispatcher: &Dispatcher, values: &[u64]) -> Run {
    let started = Instant::now();
    let Evaluation { mask, decision } = dispatcher
        .evaluate(values)
        .expect("bench inputs stay within the sieve ceiling");
    let wall_time_ns = started.elapsed().as_nanos() as u64;
    Run {
        max_value: values.iter().copied().max().unwrap_or(0),
        path: decision
            .map(|d| d.kind.as_str().to_string())
            .unwrap_or_else(|| "resolved".to_string()),
        wall_time_ns,
        checksum: mask.count_primes(),
    }
}

/// One row per repeat plus a median row; the median row carries the path of
/// the median-time repeat and sums the checksums.
fn record_group(label: &str, element_count: u64, runs: Vec<Run>) -> Vec<BenchRecord> {
    let mut records: Vec<BenchRecord> = runs
        .iter()
        .enumerate()
        .map(|(r, run)| BenchRecord {
            label: format!("{label}/rep{r}"),
            element_count,
            max_value: run.max_value,
            path: run.path.clone(),
            wall_time_ns: run.wall_time_ns,
            checksum: run.checksum,
        })
        .collect();
    let mut order: Vec<usize> = (0..runs.len()).collect();
    order.sort_by_key(|&i| runs[i].wall_time_ns);
    let median = &runs[order[runs.len() / 2]];
    records.push(BenchRecord {
        label: format!("{label}/median"),
        element_count,
        max_value: runs.iter().map(|r| r.max_value).max().unwrap_or(0),
        path: median.path.clone(),
        wall_time_ns: median.wall_time_ns,
        checksum: runs.iter().map(|r| r.checksum).sum(),
    });
    records
}

/// Uniform draw over the k-bit band [2^(k-1), 2^k - 1].
fn sample_bits(rng: &mut ChaCha8Rng, bits: u32) -> u64 {
    let low = 1u64 << (bits - 1);
    let high = if bits == 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    };
    rng.gen_range(low..=high)
}

fn sample_odd(rng: &mut ChaCha8Rng, bits: u32) -> u64 {
    sample_bits(rng, bits) | 1
}

/// Rejection-samples odd candidates in the band until one is prime.
fn sample_prime(rng: &mut ChaCha8Rng, bits: u32) -> u64 {
    loop {
        let candidate = sample_odd(rng, bits);
        if is_prime_u64(candidate) {
            return candidate;
        }
    }
}

fn scalar_suite(options: &BenchOptions, rng: &mut ChaCha8Rng) -> Vec<BenchRecord> {
    let auto = dispatcher(options, ForcedPath::Auto);
    let mut records = Vec::new();
    for bits in BIT_SIZES {
        for category in ["prime", "odd", "random"] {
            let samples: Vec<u64> = (0..options.repeats)
                .map(|_| match category {
                    "prime" => sample_prime(rng, bits),
                    "odd" => sample_odd(rng, bits),
                    _ => sample_bits(rng, bits),
                })
                .collect();
            let runs = samples.iter().map(|&v| timed(&auto, &[v])).collect();
            records.extend(record_group(
                &format!("scalar/{category}/bits{bits}"),
                1,
                runs,
            ));
        }
    }
    records
}

fn path_modes() -> [(&'static str, ForcedPath); 3] {
    [
        ("sqrt", ForcedPath::Sqrt),
        ("binsearch", ForcedPath::BinarySearch),
        ("auto", ForcedPath::Auto),
    ]
}

fn array_suite(options: &BenchOptions) -> Vec<BenchRecord> {
    let mut records = Vec::new();
    for n in ARRAY_LENGTHS {
        let values: Vec<u64> = (1..=n).collect();
        for (mode, forced) in path_modes() {
            let runner = dispatcher(options, forced);
            let runs = (0..options.repeats)
                .map(|_| timed(&runner, &values))
                .collect();
            records.extend(record_group(&format!("array/1:{n}/{mode}"), n, runs));
        }
    }
    records
}

fn crossover_suite(options: &BenchOptions, rng: &mut ChaCha8Rng) -> Vec<BenchRecord> {
    let mut records = Vec::new();
    for count in CROSSOVER_ELEMENTS {
        for maximum in CROSSOVER_MAXIMA {
            let values: Vec<u64> = (0..count).map(|_| rng.gen_range(2..=maximum)).collect();
            for (mode, forced) in path_modes() {
                let runner = dispatcher(options, forced);
                let runs = (0..options.repeats)
                    .map(|_| timed(&runner, &values))
                    .collect();
                records.extend(record_group(
                    &format!("crossover/e{count}/m{maximum}/{mode}"),
                    count as u64,
                    runs,
                ));
            }
        }
    }
    records
}
