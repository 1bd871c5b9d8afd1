//! Wall-clock comparison of the two decoders over whole collections.
//!
//! Protocol: encode once, run each decoder through one untimed warm-up, then
//! take the median of `repeats` timed runs on a monotonic clock. Every run's
//! output is compared against the source numbers; a mismatch aborts the
//! benchmark, so timings are never reported for a wrong decoder.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::fast::{decode_fast, MappingTables};
use crate::naive::{decode_naive, encode_stream};

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub label: String,
    /// Numbers in the collection.
    pub count: u64,
    pub encoded_bytes: u64,
    pub naive_ms: f64,
    pub fast_ms: f64,
}

impl BenchRow {
    pub fn speedup(&self) -> f64 {
        self.naive_ms / self.fast_ms
    }
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub repeats: u32,
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn new(repeats: u32) -> Self {
        BenchReport {
            repeats,
            rows: Vec::new(),
        }
    }

    /// Ratio of the column averages, the same way a summary row of per-run
    /// times would be read.
    pub fn average_speedup(&self) -> Option<f64> {
        if self.rows.is_empty() {
            return None;
        }
        let naive: f64 = self.rows.iter().map(|r| r.naive_ms).sum();
        let fast: f64 = self.rows.iter().map(|r| r.fast_ms).sum();
        Some(naive / fast)
    }

    /// Human-readable table with the measurement protocol in the header and
    /// an averages row when there is more than one collection.
    pub fn text_table(&self) -> String {
        let mut out = format!(
            "decode timing: median of {} runs per decoder, 1 warm-up discarded, \
             monotonic clock, outputs verified\n",
            self.repeats
        );
        out.push_str(&format!(
            "{:<16} {:>12} {:>12} {:>12} {:>9}\n",
            "collection", "count", "naive [ms]", "fast [ms]", "speedup"
        ));
        for row in &self.rows {
            out.push_str(&format!(
                "{:<16} {:>12} {:>12.2} {:>12.2} {:>8.2}x\n",
                row.label,
                row.count,
                row.naive_ms,
                row.fast_ms,
                row.speedup()
            ));
        }
        if self.rows.len() > 1 {
            let naive: f64 =
                self.rows.iter().map(|r| r.naive_ms).sum::<f64>() / self.rows.len() as f64;
            let fast: f64 =
                self.rows.iter().map(|r| r.fast_ms).sum::<f64>() / self.rows.len() as f64;
            out.push_str(&format!(
                "{:<16} {:>12} {:>12.2} {:>12.2} {:>8.2}x\n",
                "Avg.",
                "",
                naive,
                fast,
                naive / fast
            ));
        }
        out
    }

    /// Machine-readable form: `collection,naive_ms,fast_ms,speedup`.
    pub fn csv(&self) -> String {
        let mut out = String::from("collection,naive_ms,fast_ms,speedup\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{:.4},{:.4},{:.4}\n",
                row.label,
                row.naive_ms,
                row.fast_ms,
                row.speedup()
            ));
        }
        out
    }
}

/// Times both decoders on one collection.
pub fn run_benchmark(
    label: &str,
    numbers: &[u64],
    repeats: u32,
    tables: &MappingTables,
) -> Result<BenchRow> {
    if repeats == 0 {
        return Err(Error::ZeroRepeats);
    }
    let stream = encode_stream(numbers)?;
    let naive_ms = time_decoder("naive", repeats, numbers, || {
        decode_naive(&stream.bytes, stream.bit_len, stream.count)
    })?;
    let fast_ms = time_decoder("fast", repeats, numbers, || {
        decode_fast(&stream.bytes, stream.count, tables)
    })?;
    Ok(BenchRow {
        label: label.to_string(),
        count: stream.count,
        encoded_bytes: stream.bytes.len() as u64,
        naive_ms,
        fast_ms,
    })
}

/// Times both decoders on a stream of `copies` repetitions of each value,
/// one row per value. Useful for plotting decode cost against magnitude.
pub fn per_value_profile(
    values: &[u64],
    copies: usize,
    repeats: u32,
    tables: &MappingTables,
) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::with_capacity(values.len());
    for &value in values {
        let numbers = vec![value; copies];
        rows.push(run_benchmark(
            &value.to_string(),
            &numbers,
            repeats,
            tables,
        )?);
    }
    Ok(rows)
}

fn time_decoder(
    decoder: &'static str,
    repeats: u32,
    expected: &[u64],
    run: impl Fn() -> Result<Vec<u64>>,
) -> Result<f64> {
    let verify = |out: Vec<u64>| -> Result<()> {
        if out != expected {
            return Err(Error::DecoderMismatch { decoder });
        }
        Ok(())
    };
    verify(run()?)?; // warm-up, excluded from the median
    let mut samples = Vec::with_capacity(repeats as usize);
    for _ in 0..repeats {
        let start = Instant::now();
        let out = run()?;
        samples.push(start.elapsed());
        verify(out)?;
    }
    Ok(median_ms(&mut samples))
}

fn median_ms(samples: &mut [Duration]) -> f64 {
    samples.sort();
    let n = samples.len();
    let median = if n % 2 == 1 {
        samples[n / 2]
    } else {
        (samples[n / 2 - 1] + samples[n / 2]) / 2
    };
    median.as_secs_f64() * 1e3
}
