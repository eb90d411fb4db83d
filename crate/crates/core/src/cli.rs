//! Command implementations behind the `inshuffle` binary.
//!
//! Each command writes its report to the given writer and returns a
//! [`CliError`] that maps onto the process exit code.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use thiserror::Error;

use crate::buffer::RecordBuffer;
use crate::meter::{Instrumentation, NoMeter};
use crate::oracle::{oracle_shuffle, oracle_unshuffle};
use crate::permcore::{cycle_decomposition, permutation_order, ShuffleKind};
use crate::shuffle::{in_shuffle, shuffle, unshuffle};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("verification failed: in-place result differs from the reference at record {0}")]
    VerifyMismatch(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Io(_) => 3,
            CliError::VerifyMismatch(_) => 4,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

/// A file of equal-size records with no header or padding.
#[derive(Debug, Clone)]
pub struct RecordFileSpec {
    pub path: PathBuf,
    pub record_size: usize,
}

#[derive(Debug, Clone)]
pub struct ApplyOptions {
    pub file: RecordFileSpec,
    pub kind: ShuffleKind,
    pub inverse: bool,
    pub verify: bool,
}

/// Compares `result` record by record with the reference permutation of
/// `original`. Returns the first differing record index.
pub fn verify_against_oracle(
    original: &[u8],
    result: &[u8],
    record_size: usize,
    kind: ShuffleKind,
    inverse: bool,
) -> Result<(), CliError> {
    let records: Vec<&[u8]> = original.chunks_exact(record_size).collect();
    let expected = if records.is_empty() {
        Vec::new()
    } else if inverse {
        oracle_unshuffle(&records, kind)?
    } else {
        oracle_shuffle(&records, kind)?
    };
    let actual = result.chunks_exact(record_size);
    match expected.iter().zip(actual).position(|(e, a)| *e != a) {
        Some(i) => Err(CliError::VerifyMismatch(i)),
        None if expected.len() * record_size != result.len() => {
            Err(CliError::VerifyMismatch(expected.len()))
        }
        None => Ok(()),
    }
}

/// Shuffles the records of a file in place and replaces the file atomically.
pub fn cmd_apply(opts: &ApplyOptions) -> Result<(), CliError> {
    let RecordFileSpec { path, record_size } = &opts.file;
    let record_size = *record_size;
    if record_size == 0 {
        return Err(CliError::Invalid("record size must be at least 1".into()));
    }
    let mut bytes = fs::read(path)?;
    if bytes.len() % record_size != 0 {
        return Err(CliError::Invalid(format!(
            "file size {} is not a multiple of the record size {record_size}",
            bytes.len()
        )));
    }
    let original = opts.verify.then(|| bytes.clone());

    let mut records = RecordBuffer::new(&mut bytes, record_size)?;
    if opts.inverse {
        unshuffle(&mut records, opts.kind, &mut NoMeter)?;
    } else {
        shuffle(&mut records, opts.kind, &mut NoMeter)?;
    }

    if let Some(original) = original {
        verify_against_oracle(&original, &bytes, record_size, opts.kind, opts.inverse)?;
    }
    replace_file(path, &bytes)
}

fn replace_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let permissions = fs::metadata(path)?.permissions();
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.as_file().set_permissions(permissions)?;
    tmp.persist(path).map_err(|e| CliError::Io(e.error))?;
    Ok(())
}

/// Prints each cycle as `(<p1> <p2> ...) len=<L>` followed by
/// `cycles=<count> order=<permutation order>`.
pub fn cmd_cycles<W: Write>(order: usize, kind: ShuffleKind, out: &mut W) -> Result<(), CliError> {
    let decomposition = cycle_decomposition(kind, order)?;
    for cycle in &decomposition.cycles {
        let members: Vec<String> = cycle.iter().map(usize::to_string).collect();
        writeln!(out, "({}) len={}", members.join(" "), cycle.len())?;
    }
    writeln!(
        out,
        "cycles={} order={}",
        decomposition.len(),
        decomposition.lcm()
    )?;
    Ok(())
}

/// Prints the number of in-shuffles of `order` cards that restore the deck.
pub fn cmd_order<W: Write>(order: usize, out: &mut W) -> Result<(), CliError> {
    writeln!(out, "{}", permutation_order(ShuffleKind::InShuffle, order)?)?;
    Ok(())
}

/// Sizes visited by `bench`: start at `min`, multiply by `factor` and round
/// up, stop past `max`. Each size is rounded down to an even number; if that
/// would repeat the previous size, the next even size is used instead.
pub fn bench_sizes(min: usize, max: usize, factor: f64) -> Result<Vec<usize>, CliError> {
    if min < 2 || min > max {
        return Err(CliError::Invalid(format!(
            "size range must satisfy 2 <= min <= max, got {min}..{max}"
        )));
    }
    if !(factor.is_finite() && factor > 1.0) {
        return Err(CliError::Invalid(format!(
            "factor must exceed 1, got {factor}"
        )));
    }
    let mut sizes = Vec::new();
    let mut raw = min as f64;
    let mut prev = 0usize;
    loop {
        let mut size = (raw as usize) & !1;
        if size <= prev {
            size = prev + 2;
        }
        if size > max {
            break;
        }
        sizes.push(size);
        prev = size;
        raw = (raw * factor).ceil();
    }
    Ok(sizes)
}

pub const BENCH_HEADER: &str = "size,nanos,moves,aux_words";

/// Times the instrumented in-shuffle over a geometric range of sizes and
/// writes one CSV row per size.
pub fn cmd_bench<W: Write>(
    min: usize,
    max: usize,
    factor: f64,
    out: &mut W,
) -> Result<(), CliError> {
    let sizes = bench_sizes(min, max, factor)?;
    writeln!(out, "{BENCH_HEADER}")?;
    for size in sizes {
        let mut data: Vec<u64> = (0..size as u64).collect();
        let mut meter = Instrumentation::new();
        let start = Instant::now();
        in_shuffle(&mut data[..], &mut meter)?;
        let nanos = start.elapsed().as_nanos();
        writeln!(
            out,
            "{size},{nanos},{},{}",
            meter.moves, meter.aux_words_peak
        )?;
    }
    Ok(())
}
