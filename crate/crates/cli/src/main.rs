//! `quadisc`: exact quadratic discrepancy of codes and metric spaces.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quadisc::kernels::DEFAULT_ORACLE_LIMIT;

use output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "quadisc",
    version,
    about = "Exact quadratic discrepancy of binary codes and finite metric spaces"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Decimal places shown next to exact values (default 6, or 3 for tables).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=200))]
    pub digits: Option<u32>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Discrepancy of a code by every available route.
    Disc(DiscArgs),
    /// Energy and discrepancy bounds for codes of length n and size N.
    Bound(BoundArgs),
    /// Numeric tables.
    Table(TableArgs),
    /// Run the exact identity suite for n = 1..=N_MAX.
    Verify { n_max: usize },
    /// Seeded random-code experiment.
    Random(RandomArgs),
    /// Discrepancy of a subset of a finite metric space.
    Space(SpaceArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CodeInput {
    /// Named code: hamming:m, simplex:m, golay23, qr17, repetition:n, cube:n,
    /// subcube:n:m, random:n:N:seed, extend:<id>.
    #[arg(long)]
    pub code: Option<String>,

    /// File with one 0/1 word per line (`#` comments allowed).
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DiscArgs {
    #[command(flatten)]
    pub input: CodeInput,

    /// Treat the file rows as a generator matrix.
    #[arg(long, requires = "file")]
    pub generator: bool,

    /// Accept repeated words in the file.
    #[arg(long, requires = "file", conflicts_with = "generator")]
    pub multiset: bool,

    /// Also evaluate the definition directly.
    #[arg(long)]
    pub brute: bool,

    /// Largest length the direct evaluation will attempt.
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    pub oracle_limit: usize,

    /// Compare with the LP bound for codes of the same size.
    #[arg(long)]
    pub lp: bool,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    pub n: usize,
    #[arg(value_name = "N")]
    pub size: u64,

    /// Solve the linear program exactly.
    #[arg(long)]
    pub lp: bool,
    /// Constant certificate, E ≤ (N-1) λ(n).
    #[arg(long)]
    pub constant: bool,
    /// Two-term certificate (odd n).
    #[arg(long)]
    pub two_term: bool,
    /// Hamming-type certificate (odd n).
    #[arg(long)]
    pub hamming_type: bool,

    /// Write the selected certificate as JSON.
    #[arg(long, value_name = "PATH")]
    pub emit_cert: Option<PathBuf>,

    /// Check a certificate written by --emit-cert.
    #[arg(long, value_name = "PATH", conflicts_with = "emit_cert")]
    pub check_cert: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Hamming and Hadamard codes, m = 4..=10.
    Hamming,
    /// λ(w) for w = 0..=n.
    Lambda,
    /// K_k(x) for k, x = 0..=n.
    Krawtchouk,
    /// The Krawtchouk coefficients of λ.
    LambdaHat,
    /// Binomial-moment coefficients of λ.
    Moments,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub which: TableKind,
    /// Length, for every table except `hamming`.
    pub n: Option<usize>,
    /// Add exact columns to the Hamming table.
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    pub n: usize,
    #[arg(value_name = "N")]
    pub size: u64,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Trial i uses seed + i.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print the exact value of every trial instead of the summary.
    #[arg(long)]
    pub values: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SpaceInput {
    /// Distance-matrix file: header "P n", then P rows of P integers.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Built-in space: cube:n, cycle:m, path:m, johnson:v:k.
    #[arg(long)]
    pub space: Option<String>,
}

#[derive(Debug, Args)]
pub struct SpaceArgs {
    #[command(flatten)]
    pub input: SpaceInput,

    /// Comma-separated point indices; repeats allowed.
    #[arg(
        long,
        required_unless_present = "subset_code",
        conflicts_with = "subset_code"
    )]
    pub subset: Option<String>,

    /// Subset of a cube given by a named code; word x is point x.
    #[arg(long)]
    pub subset_code: Option<String>,

    /// Weight file with diameter+1 rationals.
    #[arg(long, value_name = "PATH")]
    pub weights: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                commands::EXIT_VALIDATION
            } else {
                0
            });
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(commands::EXIT_VALIDATION);
        }
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            for line in &out.stderr {
                eprintln!("{line}");
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
