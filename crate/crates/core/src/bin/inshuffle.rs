use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use inshuffle::cli::{self, ApplyOptions, CliError, RecordFileSpec};
use inshuffle::ShuffleKind;

#[derive(Parser)]
#[command(
    name = "inshuffle",
    version,
    about = "In-place perfect shuffles of record files"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Permute the fixed-size records of a file in place.
    Apply {
        /// Shuffle kind: `in`, `out` or `k:<k>` (2 <= k <= 9).
        #[arg(long)]
        kind: ShuffleKind,
        /// Apply the inverse permutation.
        #[arg(long)]
        inverse: bool,
        /// Check against the out-of-place reference before writing.
        #[arg(long)]
        verify: bool,
        /// Bytes per record.
        #[arg(long)]
        record_size: usize,
        path: PathBuf,
    },
    /// Print the cycle decomposition of a shuffle permutation.
    Cycles {
        #[arg(long)]
        kind: ShuffleKind,
        order: usize,
    },
    /// Print how many in-shuffles restore a deck of `order` cards.
    Order { order: usize },
    /// Time the in-shuffle over a geometric range of sizes; CSV on stdout.
    ///
    /// Sizes start at MIN and grow by FACTOR (rounded up), each rounded down
    /// to an even count; a size that would repeat the previous one is bumped
    /// to the next even count.
    Bench {
        #[arg(long)]
        min: usize,
        #[arg(long)]
        max: usize,
        #[arg(long)]
        factor: f64,
    },
}

fn run(command: Command) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Apply {
            kind,
            inverse,
            verify,
            record_size,
            path,
        } => cli::cmd_apply(&ApplyOptions {
            file: RecordFileSpec { path, record_size },
            kind,
            inverse,
            verify,
        }),
        Command::Cycles { kind, order } => cli::cmd_cycles(order, kind, &mut out),
        Command::Order { order } => cli::cmd_order(order, &mut out),
        Command::Bench { min, max, factor } => cli::cmd_bench(min, max, factor, &mut out),
    }?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("inshuffle: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
