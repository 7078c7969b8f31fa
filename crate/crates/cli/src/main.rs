//! `qwave`: exact q-partial fractions, Sylvester waves, Gaussian-Ramanujan
//! sums, and degenerate-number series from the command line.
//!
//! Every mathematical value in the output is exact: rationals render as
//! `p/q` strings, tables as integers of arbitrary size. Exit codes: 0 on
//! success, 1 when a mathematical consistency check fails, 2 on usage or
//! precondition errors.

mod bench;
mod output;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use qwave_core::degnum::{deg_series, Center, DegKind};
use qwave_core::grsum::sigma_table;
use qwave_core::oracle::{p_dp, verify_reconstruction};
use qwave_core::qpartial::{decompose, gamma_table, rademacher_top};
use qwave_core::waves::{partition_via_waves_with, wave_eval};

use output::OutputDocument;

#[derive(Parser)]
#[command(name = "qwave", version, about = "Exact q-partial fractions and Sylvester waves")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest N accepted by decomposition-driven commands.
    #[arg(long = "max-N", alias = "max-n", global = true, default_value_t = 30)]
    max_n: u32,

    /// Lift the --max-N guard (may be slow, never unsafe).
    #[arg(long, global = true, default_value_t = false)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full q-partial fraction table of F_N and its Gamma coefficients.
    Decompose { n: u32 },
    /// k x k table of Gaussian-Ramanujan sums sigma_k(t; j).
    Sigma { k: u32 },
    /// Top-level coefficient Gamma_{j,k,floor(N/k)}(N) from the sigma table.
    Gamma { j: u32, k: u32, n: u32 },
    /// Sylvester wave W_k(n; N).
    Wave { k: u32, n: u64, n_parts: u32 },
    /// Restricted partition count p_N(n) via the wave sum.
    Partition {
        n: u64,
        /// Largest allowed part N.
        #[arg(long)]
        max_part: u32,
    },
    /// Raw degenerate Bernoulli/Euler series coefficients.
    Degnum {
        kind: KindArg,
        m: u32,
        order: usize,
        /// Expansion center: about +1 or -1.
        #[arg(long, value_enum, default_value_t = CenterArg::Plus)]
        center: CenterArg,
    },
    /// Exact Rademacher top-multiplicity coefficient at the pole xi_k^h.
    Rademacher { h: u32, k: u32, n: u32 },
    /// Cross-validation suite up to N_MAX; exit 0 iff every check passes.
    Verify { n_max: u32 },
    /// Wall-clock comparison of algorithmic variants.
    Bench { suite: BenchSuite },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Bernoulli,
    Euler,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CenterArg {
    Plus,
    Minus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchSuite {
    Sigma,
    Decompose,
    Partition,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(&cli));
}

fn guard_n(cli: &Cli, n: u32) -> Result<(), String> {
    if n == 0 {
        return Err("N must be at least 1".into());
    }
    if !cli.force && n > cli.max_n {
        return Err(format!(
            "N={n} exceeds --max-N={} (pass --force to override; large N is slow, never unsafe)",
            cli.max_n
        ));
    }
    Ok(())
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

fn run(cli: &Cli) -> i32 {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Decompose { n } => {
            if let Err(msg) = guard_n(cli, *n) {
                return usage_error(&msg);
            }
            let d = match decompose(*n) {
                Ok(d) => d,
                Err(e) => return usage_error(&e.to_string()),
            };
            let check = verify_reconstruction(&d);
            OutputDocument::decompose(&d, &gamma_table(&d), check.passed).emit(json);
            if check.passed {
                0
            } else {
                eprintln!(
                    "error: reconstruction identity failed: {:?}",
                    check.first_mismatch
                );
                1
            }
        }
        Command::Sigma { k } => {
            if *k == 0 {
                return usage_error("k must be at least 1");
            }
            OutputDocument::sigma(&sigma_table(*k)).emit(json);
            0
        }
        Command::Gamma { j, k, n } => match qwave_core::grsum::gamma_top_fast(*j, *k, *n) {
            Ok(value) => {
                OutputDocument::gamma(*j, *k, *n, &value).emit(json);
                0
            }
            Err(e) => usage_error(&e.to_string()),
        },
        Command::Wave { k, n, n_parts } => {
            if let Err(msg) = guard_n(cli, *n_parts) {
                return usage_error(&msg);
            }
            let table = match decompose(*n_parts) {
                Ok(d) => gamma_table(&d),
                Err(e) => return usage_error(&e.to_string()),
            };
            match wave_eval(*k, *n, &table) {
                Ok(value) => {
                    OutputDocument::wave(*k, *n, *n_parts, &value).emit(json);
                    0
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Command::Partition { n, max_part } => {
            if let Err(msg) = guard_n(cli, *max_part) {
                return usage_error(&msg);
            }
            let table = match decompose(*max_part) {
                Ok(d) => gamma_table(&d),
                Err(e) => return usage_error(&e.to_string()),
            };
            match partition_via_waves_with(&table, *n) {
                Ok(count) => {
                    if *n <= 100_000 {
                        let dp = p_dp(*max_part, *n as usize);
                        if *dp.get(*n as usize) != count {
                            eprintln!("error: wave sum disagrees with DP oracle");
                            return 1;
                        }
                    }
                    OutputDocument::partition(*n, *max_part, &count).emit(json);
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    1
                }
            }
        }
        Command::Degnum {
            kind,
            m,
            order,
            center,
        } => {
            let kind = match kind {
                KindArg::Bernoulli => DegKind::Bernoulli,
                KindArg::Euler => DegKind::Euler,
            };
            let center = match center {
                CenterArg::Plus => Center::PlusOne,
                CenterArg::Minus => Center::MinusOne,
            };
            match deg_series(kind, center, *m, *order) {
                Ok(series) => {
                    OutputDocument::degnum(&series).emit(json);
                    0
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Command::Rademacher { h, k, n } => {
            if let Err(msg) = guard_n(cli, *n) {
                return usage_error(&msg);
            }
            match rademacher_top(*h, *k, *n) {
                Ok(top) => {
                    OutputDocument::rademacher(&top).emit(json);
                    0
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Command::Verify { n_max } => {
            if let Err(msg) = guard_n(cli, *n_max) {
                return usage_error(&msg);
            }
            verify::run_suite(*n_max, json)
        }
        Command::Bench { suite } => {
            bench::run(*suite, json);
            0
        }
    }
}
