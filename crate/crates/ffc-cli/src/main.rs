//! `ffc` — encode, decode, generate, benchmark, and inspect Fibonacci-coded
//! number streams.
//!
//! Exit codes: 0 success, 1 usage error, 2 data/format error, 3 internal
//! invariant failure (a decoder produced wrong output during a benchmark).

mod archive;
mod raw;

use std::fmt;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use ffc_core::bench::{run_benchmark, BenchReport};
use ffc_core::collections::{generate, Kind, Preset, DEFAULT_LENGTH, DEFAULT_SEED, PRNG_ALGORITHM};
use ffc_core::fast::{decode_fast, MappingTables};
use ffc_core::naive::{decode_naive, encode_stream};

#[derive(Parser)]
#[command(name = "ffc", version, about = "Fibonacci-coding compression toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compress a raw number file into an ffc archive
    Encode {
        /// Input file in the raw number format (u64 count, then u64 values,
        /// all little-endian)
        input: PathBuf,
        /// Archive to write
        output: PathBuf,
    },
    /// Decompress an ffc archive into a raw number file
    Decode {
        /// Archive to read
        archive: PathBuf,
        /// Raw number file to write
        output: PathBuf,
        /// Decoder to run
        #[arg(long, value_enum, default_value_t = Algo::Fast)]
        algo: Algo,
    },
    /// Generate a benchmark collection in the raw number format
    Gen {
        /// Collection preset, e.g. SEQ_ALL or RAND_VerySmall
        #[arg(long)]
        kind: Preset,
        /// PRNG seed for RAND collections
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of values to generate
        #[arg(long, default_value_t = DEFAULT_LENGTH)]
        length: u64,
        /// Output file
        output: PathBuf,
    },
    /// Time the naive and fast decoders and report the speedup
    Bench {
        /// Preset name or "all" for the whole suite (default)
        #[arg(long, conflicts_with = "input")]
        kind: Option<String>,
        /// Benchmark an existing raw number file instead of a preset
        #[arg(long)]
        input: Option<PathBuf>,
        /// Timed runs per decoder (plus one discarded warm-up)
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        repeats: u32,
        /// Values per generated collection
        #[arg(long, default_value_t = DEFAULT_LENGTH)]
        length: u64,
        /// PRNG seed for RAND collections
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Also write the report as CSV
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print one mapping-table record
    Table {
        /// Which table, 1 or 2
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        map: u8,
        /// Segment value, 0..=255
        #[arg(long)]
        index: u8,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Fast,
    Naive,
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algo::Fast => "fast",
            Algo::Naive => "naive",
        })
    }
}

enum CliError {
    Usage(String),
    Data(String),
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Data(msg) | CliError::Internal(msg) => {
                f.write_str(msg)
            }
        }
    }
}

impl From<ffc_core::Error> for CliError {
    fn from(err: ffc_core::Error) -> Self {
        match err {
            ffc_core::Error::DecoderMismatch { .. } => CliError::Internal(err.to_string()),
            ffc_core::Error::ZeroRepeats => CliError::Usage(err.to_string()),
            _ => CliError::Data(err.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Data(err.to_string())
    }
}

impl From<archive::ArchiveError> for CliError {
    fn from(err: archive::ArchiveError) -> Self {
        CliError::Data(err.to_string())
    }
}

impl From<raw::RawError> for CliError {
    fn from(err: raw::RawError) -> Self {
        CliError::Data(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            // clap renders its own help/usage text
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("ffc: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Encode { input, output } => cmd_encode(&input, &output),
        Command::Decode {
            archive,
            output,
            algo,
        } => cmd_decode(&archive, &output, algo),
        Command::Gen {
            kind,
            seed,
            length,
            output,
        } => cmd_gen(kind, seed, length, &output),
        Command::Bench {
            kind,
            input,
            repeats,
            length,
            seed,
            report,
        } => cmd_bench(
            kind.as_deref(),
            input.as_deref(),
            repeats,
            length,
            seed,
            report.as_deref(),
        ),
        Command::Table { map, index } => cmd_table(map, index),
    }
}

fn cmd_encode(input: &Path, output: &Path) -> Result<(), CliError> {
    let numbers = raw::read_raw(&mut BufReader::new(File::open(input)?))?;
    let stream = encode_stream(&numbers)?;
    let mut writer = BufWriter::new(File::create(output)?);
    archive::write_archive(&mut writer, &stream)?;
    writer.flush()?;
    let raw_bytes = 8 + 8 * stream.count;
    let compressed_bytes = 22 + stream.bytes.len() as u64;
    println!(
        "encoded {} numbers: {} -> {} bytes (ratio {:.3})",
        stream.count,
        raw_bytes,
        compressed_bytes,
        compressed_bytes as f64 / raw_bytes as f64
    );
    Ok(())
}

fn cmd_decode(archive_path: &Path, output: &Path, algo: Algo) -> Result<(), CliError> {
    let stream = archive::read_archive(&mut BufReader::new(File::open(archive_path)?))?;
    let numbers = match algo {
        Algo::Fast => {
            let tables = MappingTables::build(8)?;
            decode_fast(&stream.bytes, stream.count, &tables)?
        }
        Algo::Naive => decode_naive(&stream.bytes, stream.bit_len, stream.count)?,
    };
    let mut writer = BufWriter::new(File::create(output)?);
    raw::write_raw(&mut writer, &numbers)?;
    writer.flush()?;
    println!("decoded {} numbers ({algo})", numbers.len());
    Ok(())
}

fn cmd_gen(kind: Preset, seed: u64, length: u64, output: &Path) -> Result<(), CliError> {
    let spec = kind.spec(length, seed);
    let numbers = generate(&spec)?;
    let mut writer = BufWriter::new(File::create(output)?);
    raw::write_raw(&mut writer, &numbers)?;
    writer.flush()?;
    match spec.kind {
        Kind::Seq => println!(
            "wrote {kind}: {length} values cycling {}..={}",
            spec.lo, spec.hi
        ),
        Kind::Rand => println!(
            "wrote {kind}: {length} values uniform in {}..={} (prng={PRNG_ALGORITHM}, seed={seed})",
            spec.lo, spec.hi
        ),
    }
    Ok(())
}

fn cmd_bench(
    kind: Option<&str>,
    input: Option<&Path>,
    repeats: u32,
    length: u64,
    seed: u64,
    report_path: Option<&Path>,
) -> Result<(), CliError> {
    let presets: Vec<Preset> = match (kind, input) {
        (_, Some(_)) => Vec::new(),
        (None, None) => Preset::ALL.to_vec(),
        (Some(name), None) if name.eq_ignore_ascii_case("all") => Preset::ALL.to_vec(),
        (Some(name), None) => {
            vec![Preset::from_str(name).map_err(CliError::Usage)?]
        }
    };

    let tables = MappingTables::build(8)?;
    let mut report = BenchReport::new(repeats);
    if let Some(path) = input {
        let numbers = raw::read_raw(&mut BufReader::new(File::open(path)?))?;
        let label = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        report
            .rows
            .push(run_benchmark(&label, &numbers, repeats, &tables)?);
    }
    for preset in presets {
        let numbers = generate(&preset.spec(length, seed))?;
        report
            .rows
            .push(run_benchmark(preset.name(), &numbers, repeats, &tables)?);
    }
    print!("{}", report.text_table());
    if let Some(path) = report_path {
        std::fs::write(path, report.csv())?;
        println!("csv report written to {}", path.display());
    }
    Ok(())
}

fn cmd_table(map: u8, index: u8) -> Result<(), CliError> {
    let tables = MappingTables::build(8)?;
    let record = match map {
        1 => tables.map1(index as usize)?,
        _ => tables.map2(index as usize)?,
    };
    println!(
        "MAP{map}[{index}] = {record} first_shifted={}",
        record.first_shifted()
    );
    Ok(())
}
