//! Command-line front end: check numbers, print division-count tables, and
//! run the timing suites.

use primecheck_cli::{bench, input};

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use primecheck::{division_count, Config, Dispatcher, ForcedPath, HeuristicModel};

const CEILING_ENV_VAR: &str = "PRIMECHECK_SIEVE_CEILING";

#[derive(Parser)]
#[command(
    name = "primecheck",
    version,
    about = "Primality checks, division-count tables, and path benchmarks for 64-bit integers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check primality of numbers, a range, or a file of integers.
    Check(CheckArgs),
    /// Print the trial-division cost model for the input 1..=N.
    Divcount(DivcountArgs),
    /// Time the evaluation strategies and emit CSV records.
    Bench(BenchArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Numbers to test.
    values: Vec<String>,

    /// Inclusive range, written A:B or A:B:STEP.
    #[arg(long)]
    range: Option<String>,

    /// File with one integer per line; '#' starts a comment.
    #[arg(long)]
    file: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = OutputFormat::Mask)]
    format: OutputFormat,

    /// Pin array survivors to one evaluation path (never changes results).
    #[arg(long, value_enum, default_value_t = PathChoice::Auto)]
    force_path: PathChoice,

    /// Largest value the sieve may be asked to cover.
    #[arg(long)]
    sieve_ceiling: Option<u64>,

    /// Evaluate elements sequentially instead of across threads.
    #[arg(long)]
    no_parallel: bool,

    #[command(flatten)]
    heuristic: HeuristicArgs,
}

/// Overrides for the path-selection model (advanced).
#[derive(Args)]
struct HeuristicArgs {
    /// Element count where the crossover fit switches lines.
    #[arg(long)]
    regime_split: Option<u64>,
    #[arg(long)]
    small_slope: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    small_intercept: Option<i64>,
    #[arg(long)]
    large_slope: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    large_intercept: Option<i64>,
}

#[derive(Args)]
struct DivcountArgs {
    /// Upper end of the incrementing input 1..=N.
    #[arg(long)]
    n: Option<u64>,

    /// Print the full reference table (N = 10 through 10^8).
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    suite: SuiteChoice,

    /// Timed repeats per measurement group.
    #[arg(long, default_value_t = 5)]
    repeats: usize,

    /// Seed for all generated inputs.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Largest value the sieve may be asked to cover.
    #[arg(long)]
    sieve_ceiling: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Mask,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathChoice {
    Auto,
    Sqrt,
    Binsearch,
}

impl From<PathChoice> for ForcedPath {
    fn from(choice: PathChoice) -> Self {
        match choice {
            PathChoice::Auto => ForcedPath::Auto,
            PathChoice::Sqrt => ForcedPath::Sqrt,
            PathChoice::Binsearch => ForcedPath::BinarySearch,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteChoice {
    Scalar,
    Array,
    Crossover,
}

enum CliError {
    /// Exit code 2: the input itself is unusable.
    Input(String),
    /// Exit code 3: a file could not be read or written.
    Io(String),
}

impl CliError {
    fn report(&self) -> ExitCode {
        match self {
            CliError::Input(message) => {
                eprintln!("error: {message}");
                ExitCode::from(2)
            }
            CliError::Io(message) => {
                eprintln!("error: {message}");
                ExitCode::from(3)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check(args) => run_check(args),
        Command::Divcount(args) => run_divcount(args),
        Command::Bench(args) => run_bench(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => error.report(),
    }
}

fn resolve_ceiling(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(ceiling) = flag {
        return Ok(ceiling);
    }
    match std::env::var(CEILING_ENV_VAR) {
        Ok(text) => text.trim().parse().map_err(|_| {
            CliError::Input(format!(
                "{CEILING_ENV_VAR} must be an unsigned integer, got '{text}'"
            ))
        }),
        Err(_) => Ok(primecheck::DEFAULT_SIEVE_CEILING),
    }
}

fn build_heuristic(overrides: &HeuristicArgs) -> Result<HeuristicModel, CliError> {
    let defaults = HeuristicModel::default();
    let model = HeuristicModel {
        regime_split: overrides.regime_split.unwrap_or(defaults.regime_split),
        small_slope: overrides.small_slope.unwrap_or(defaults.small_slope),
        small_intercept: overrides
            .small_intercept
            .unwrap_or(defaults.small_intercept),
        large_slope: overrides.large_slope.unwrap_or(defaults.large_slope),
        large_intercept: overrides
            .large_intercept
            .unwrap_or(defaults.large_intercept),
    };
    if model.small_slope <= 0 || model.large_slope <= 0 {
        return Err(CliError::Input("slopes must be positive".to_string()));
    }
    if model.regime_split == 0 {
        return Err(CliError::Input(
            "--regime-split must be at least 1".to_string(),
        ));
    }
    Ok(model)
}

fn run_check(args: CheckArgs) -> Result<(), CliError> {
    let mut values: Vec<u64> = Vec::new();
    for token in &args.values {
        values.push(input::parse_token(token).map_err(CliError::Input)?);
    }
    if let Some(range) = &args.range {
        values.extend(input::parse_range(range).map_err(CliError::Input)?);
    }
    if let Some(path) = &args.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        for token in input::file_tokens(&text) {
            values.push(input::parse_token(token).map_err(CliError::Input)?);
        }
    }

    let dispatcher = Dispatcher::new(Config {
        heuristic: build_heuristic(&args.heuristic)?,
        sieve_ceiling: resolve_ceiling(args.sieve_ceiling)?,
        parallel: !args.no_parallel,
        forced_path: args.force_path.into(),
    });
    let mask = dispatcher
        .is_prime(&values)
        .map_err(|e| CliError::Input(e.to_string()))?;

    match args.format {
        OutputFormat::Mask => {
            let bits: Vec<&str> = mask
                .bits()
                .iter()
                .map(|&bit| if bit { "1" } else { "0" })
                .collect();
            println!("{}", bits.join(" "));
        }
        OutputFormat::Csv => {
            for (value, &bit) in values.iter().zip(mask.bits()) {
                println!("{value},{}", u8::from(bit));
            }
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = values
                .iter()
                .zip(mask.bits())
                .map(|(&value, &bit)| serde_json::json!({"value": value, "is_prime": bit}))
                .collect();
            println!("{}", serde_json::Value::Array(rows));
        }
    }
    Ok(())
}

fn divcount_row(n: u64) -> String {
    let divisions = division_count(n);
    // Ratio truncated to one decimal, in integer arithmetic.
    let tenths = (divisions as u128 * 10 / n as u128) as u64;
    format!("{n},{divisions},{}.{}", tenths / 10, tenths % 10)
}

fn run_divcount(args: DivcountArgs) -> Result<(), CliError> {
    match (args.n, args.table) {
        (Some(_), true) => Err(CliError::Input(
            "use either --n or --table, not both".to_string(),
        )),
        (None, false) => Err(CliError::Input(
            "one of --n or --table is required".to_string(),
        )),
        (Some(0), false) => Err(CliError::Input("--n must be at least 1".to_string())),
        (Some(n), false) => {
            println!("{}", divcount_row(n));
            Ok(())
        }
        (None, true) => {
            let mut n = 10u64;
            while n <= 100_000_000 {
                println!("{}", divcount_row(n));
                n *= 10;
            }
            Ok(())
        }
    }
}

fn run_bench(args: BenchArgs) -> Result<(), CliError> {
    let options = bench::BenchOptions {
        suite: match args.suite {
            SuiteChoice::Scalar => bench::Suite::Scalar,
            SuiteChoice::Array => bench::Suite::Array,
            SuiteChoice::Crossover => bench::Suite::Crossover,
        },
        repeats: args.repeats.max(1),
        seed: args.seed,
        sieve_ceiling: resolve_ceiling(args.sieve_ceiling)?,
    };
    let records = bench::run_suite(&options);
    let text = bench::emit_csv(&records);
    match &args.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
