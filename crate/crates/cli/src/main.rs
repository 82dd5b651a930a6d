//! `wreath`: build wreath products of complete schemes, verify the structure
//! of their Terwilliger algebras, recognize wreath products and dump matrices.
//!
//! Exit codes: 0 success, 1 a check failed or the input is not a wreath
//! product, 2 usage or input error, 3 I/O error.

mod commands;
mod error;
mod format;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wreath_algebra::wreath::WreathParams;

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "WREATH_OUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "wreath", version, about = "Exact Terwilliger algebras of wreath products of complete schemes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the adjacency matrices and relation matrix of K_{n_1} wr ... wr K_{n_d}
    Build(BuildArgs),
    /// Run every structural check on T(x) and report
    Verify(VerifyArgs),
    /// Decide whether a scheme file is a wreath product of complete schemes
    Recognize(RecognizeArgs),
    /// Write a family of matrices of T(x)
    Dump(DumpArgs),
}

fn parse_factors(s: &str) -> Result<WreathParams, String> {
    s.parse::<WreathParams>().map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct BuildArgs {
    /// Comma-separated factor orders, each at least 2, e.g. `2,3`
    #[arg(long, value_parser = parse_factors)]
    factors: WreathParams,
    /// Output file; defaults to `$WREATH_OUT_DIR/scheme-<factors>.json`, else stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_factors)]
    factors: WreathParams,
    /// Base point x, in 0..v
    #[arg(long, default_value_t = 0)]
    base: usize,
    /// Report file; defaults to `$WREATH_OUT_DIR/report-<factors>-x<base>.json` if set
    #[arg(long)]
    out: Option<PathBuf>,
    /// Lift the size limits (v <= 512, and v <= 36 for triple regularity)
    #[arg(long)]
    force: bool,
    /// Leave `timings_ms` empty so reports are byte-identical across runs
    #[arg(long)]
    no_timings: bool,
}

#[derive(Debug, Args)]
struct RecognizeArgs {
    /// Scheme file in the format written by `build`
    input: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DumpWhat {
    /// Nonzero E_i* A_j E_h*
    TripleProducts,
    /// All G_ij
    GBasis,
    /// Nonzero F_ih
    FIdempotents,
    /// Subconstituent ordering, block checks and reordered A_j
    BlockForm,
}

#[derive(Debug, Args)]
struct DumpArgs {
    #[arg(long, value_parser = parse_factors)]
    factors: WreathParams,
    #[arg(long, default_value_t = 0)]
    base: usize,
    #[arg(long, value_enum)]
    what: DumpWhat,
    /// Output file; defaults to `$WREATH_OUT_DIR/<what>-<factors>-x<base>.json`, else stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Lift the v <= 512 limit
    #[arg(long)]
    force: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(a) => commands::build(&a.factors, a.out),
        Command::Verify(a) => commands::verify(&a.factors, a.base, a.out, a.force, a.no_timings),
        Command::Recognize(a) => commands::recognize(&a.input),
        Command::Dump(a) => commands::dump(&a.factors, a.base, a.what, a.out, a.force),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
