//! Bindings behind the demo page in `www/`.
//!
//! Three interactive operations are exposed: an encode explorer (numbers ->
//! codewords -> packed segments), a mapping-table explorer, and a
//! segment-by-segment decode trace that mirrors the fast decoder's loop.
//! [`BenchSession`] additionally lets the page time both decoders on a
//! generated collection; the page does the timing, the session only runs
//! the work.
//!
//! Everything crosses the JS boundary as JSON strings. Inputs are capped at
//! 2^53 - 1 so every value in the JSON survives JS number precision.

use serde::Serialize;
use std::sync::OnceLock;
use wasm_bindgen::prelude::*;

use ffc_core::collections::{generate, CollectionSpec, Kind};
use ffc_core::fast::{decode_fast, MappingTables};
use ffc_core::fib;
use ffc_core::naive::{decode_naive, encode_stream, EncodedStream};

const MAX_INPUT: u64 = (1 << 53) - 1;

fn tables() -> &'static MappingTables {
    static TABLES: OnceLock<MappingTables> = OnceLock::new();
    TABLES.get_or_init(|| MappingTables::build(8).expect("8 is a valid segment size"))
}

fn parse_numbers(input: &str) -> Result<Vec<u64>, String> {
    let mut numbers = Vec::new();
    for token in input.split(|c: char| c == ',' || c.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        let n: u64 = token
            .parse()
            .map_err(|_| format!("'{token}' is not an unsigned integer"))?;
        if n == 0 {
            return Err("0 cannot be encoded; values start at 1".to_string());
        }
        if n > MAX_INPUT {
            return Err(format!("{n} exceeds the demo limit of 2^53 - 1"));
        }
        numbers.push(n);
    }
    Ok(numbers)
}

/// Stream-order bits of one segment value (LSB of the byte first).
fn segment_bit_string(value: u8) -> String {
    (0..8)
        .map(|j| if value >> j & 1 == 1 { '1' } else { '0' })
        .collect()
}

#[derive(Serialize)]
struct CodeDetail {
    value: u64,
    code: String,
}

#[derive(Serialize)]
struct SegmentDetail {
    value: u8,
    bits: String,
}

#[derive(Serialize)]
struct EncodeInfo {
    count: u64,
    bit_len: u64,
    raw_bytes: u64,
    encoded_bytes: u64,
    bits_per_value: f64,
    codes: Vec<CodeDetail>,
    segments: Vec<SegmentDetail>,
}

fn encode_info_impl(input: &str) -> Result<EncodeInfo, String> {
    let numbers = parse_numbers(input)?;
    let codes = numbers
        .iter()
        .map(|&n| {
            Ok(CodeDetail {
                value: n,
                code: fib::encode_number(n)
                    .map_err(|e| e.to_string())?
                    .to_string(),
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    let stream = encode_stream(&numbers).map_err(|e| e.to_string())?;
    let segments = stream
        .bytes
        .iter()
        .map(|&b| SegmentDetail {
            value: b,
            bits: segment_bit_string(b),
        })
        .collect();
    Ok(EncodeInfo {
        count: stream.count,
        bit_len: stream.bit_len,
        raw_bytes: 8 * stream.count,
        encoded_bytes: stream.bytes.len() as u64,
        bits_per_value: if stream.count == 0 {
            0.0
        } else {
            stream.bit_len as f64 / stream.count as f64
        },
        codes,
        segments,
    })
}

#[derive(Serialize)]
struct RecordView {
    map: u8,
    index: u8,
    /// Bits of the whole segment, stream order.
    segment_bits: String,
    /// Bits the record actually decodes (drops the first one for odd MAP2
    /// entries).
    decoded_bits: String,
    aliases_map1: bool,
    count: u8,
    numbers: Vec<u64>,
    shift: u8,
    end_with_zero: bool,
    start_with_zero: bool,
    first_shifted: u64,
    tuple: String,
}

fn record_view(map: u8, index: u8) -> Result<RecordView, String> {
    let tables = tables();
    let record = match map {
        1 => tables.map1(index as usize),
        2 => tables.map2(index as usize),
        other => return Err(format!("map must be 1 or 2, got {other}")),
    }
    .map_err(|e| e.to_string())?;
    let segment_bits = segment_bit_string(index);
    let odd_map2 = map == 2 && index % 2 == 1;
    let decoded_bits = if odd_map2 {
        segment_bits[1..].to_string()
    } else {
        segment_bits.clone()
    };
    Ok(RecordView {
        map,
        index,
        segment_bits,
        decoded_bits,
        aliases_map1: map == 2 && !odd_map2,
        count: record.count(),
        numbers: record.numbers().to_vec(),
        shift: record.shift(),
        end_with_zero: record.end_with_zero(),
        start_with_zero: record.start_with_zero(),
        first_shifted: record.first_shifted(),
        tuple: record.to_string(),
    })
}

#[derive(Serialize)]
struct TraceStep {
    index: usize,
    segment: u8,
    bits: String,
    table: &'static str,
    record: String,
    /// True when the segment's dropped first bit terminated the pending
    /// number right at the boundary.
    boundary_completed: bool,
    /// Value added to the pending number by the O(1) splice, when one ran.
    spliced: Option<u64>,
    emitted: Vec<u64>,
    /// Pending-partial state after the segment.
    shift: usize,
    last_number: u64,
}

#[derive(Serialize)]
struct DecodeTrace {
    numbers: Vec<u64>,
    bit_len: u64,
    segments: Vec<SegmentDetail>,
    steps: Vec<TraceStep>,
    result: Vec<u64>,
}

/// Runs the fast decoder's loop step by step, recording the table choice,
/// record, splice, and emissions per segment. Mirrors
/// `ffc_core::fast::decode_fast`; the test suite holds the two together.
fn decode_trace_impl(input: &str) -> Result<DecodeTrace, String> {
    let numbers = parse_numbers(input)?;
    let stream = encode_stream(&numbers).map_err(|e| e.to_string())?;
    let tables = tables();
    let want = numbers.len();

    let mut steps = Vec::with_capacity(stream.bytes.len());
    let mut result = Vec::with_capacity(want);
    let mut shift: usize = 0;
    let mut last_number: u64 = 0;
    let mut prev_end_with_zero = false;

    'segments: for (index, &segment) in stream.bytes.iter().enumerate() {
        let mut step = TraceStep {
            index,
            segment,
            bits: segment_bit_string(segment),
            table: "MAP1",
            record: String::new(),
            boundary_completed: false,
            spliced: None,
            emitted: Vec::new(),
            shift: 0,
            last_number: 0,
        };
        macro_rules! emit {
            ($n:expr) => {{
                let n = $n;
                step.emitted.push(n);
                result.push(n);
                if result.len() == want {
                    step.shift = 0;
                    step.last_number = 0;
                    steps.push(step);
                    break 'segments;
                }
            }};
        }

        let record = if shift == 0 || prev_end_with_zero {
            tables.map1(segment as usize).map_err(|e| e.to_string())?
        } else {
            step.table = "MAP2";
            let record = tables.map2(segment as usize).map_err(|e| e.to_string())?;
            if !record.start_with_zero() {
                step.boundary_completed = true;
                emit!(last_number);
                shift = 0;
            }
            record
        };
        step.record = record.to_string();

        if shift == 0 {
            let numbers = record.numbers();
            let complete = if record.shift() == 0 {
                numbers
            } else {
                &numbers[..numbers.len() - 1]
            };
            for &n in complete {
                emit!(n);
            }
            if record.shift() != 0 {
                last_number = *numbers.last().expect("partial entry");
            }
            shift = record.shift() as usize;
        } else {
            let numbers = record.numbers();
            let spliced = fib::shift_left_value(numbers[0], record.first_shifted(), shift)
                .map_err(|e| e.to_string())?;
            step.spliced = Some(spliced);
            last_number = last_number
                .checked_add(spliced)
                .ok_or_else(|| "pending value overflowed".to_string())?;
            if record.shift() == 0 {
                emit!(last_number);
                shift = 0;
                for &n in &numbers[1..] {
                    emit!(n);
                }
            } else if record.count() == 1 {
                shift += record.shift() as usize;
            } else {
                emit!(last_number);
                for &n in &numbers[1..numbers.len() - 1] {
                    emit!(n);
                }
                last_number = *numbers.last().expect("partial entry");
                shift = record.shift() as usize;
            }
        }
        prev_end_with_zero = record.end_with_zero();
        step.shift = shift;
        step.last_number = if shift == 0 { 0 } else { last_number };
        steps.push(step);
    }

    let segments = stream
        .bytes
        .iter()
        .map(|&b| SegmentDetail {
            value: b,
            bits: segment_bit_string(b),
        })
        .collect();
    Ok(DecodeTrace {
        numbers,
        bit_len: stream.bit_len,
        segments,
        steps,
        result,
    })
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// Numbers -> codewords -> packed segments, as JSON.
#[wasm_bindgen]
pub fn encode_info(input: &str) -> Result<String, JsError> {
    encode_info_impl(input)
        .and_then(|info| to_json(&info))
        .map_err(|e| JsError::new(&e))
}

/// One mapping-table record with its bit patterns, as JSON.
#[wasm_bindgen]
pub fn table_record(map: u8, index: u8) -> Result<String, JsError> {
    record_view(map, index)
        .and_then(|view| to_json(&view))
        .map_err(|e| JsError::new(&e))
}

/// Segment-by-segment decode trace of the encoded input, as JSON.
#[wasm_bindgen]
pub fn decode_trace(input: &str) -> Result<String, JsError> {
    decode_trace_impl(input)
        .and_then(|trace| to_json(&trace))
        .map_err(|e| JsError::new(&e))
}

/// A generated collection held encoded in memory so the page can time
/// repeated decodes of the same stream.
#[wasm_bindgen]
pub struct BenchSession {
    source: Vec<u64>,
    stream: EncodedStream,
}

#[wasm_bindgen]
impl BenchSession {
    /// `count` uniform values in `1..=max_value`, deterministic per seed.
    #[wasm_bindgen(constructor)]
    pub fn new(count: u32, max_value: u32, seed: u32) -> Result<BenchSession, JsError> {
        if max_value == 0 {
            return Err(JsError::new("max_value must be at least 1"));
        }
        let spec = CollectionSpec {
            kind: Kind::Rand,
            lo: 1,
            hi: u64::from(max_value),
            length: u64::from(count),
            seed: u64::from(seed),
        };
        let source = generate(&spec).map_err(|e| JsError::new(&e.to_string()))?;
        let stream = encode_stream(&source).map_err(|e| JsError::new(&e.to_string()))?;
        Ok(BenchSession { source, stream })
    }

    pub fn count(&self) -> u32 {
        self.stream.count as u32
    }

    pub fn encoded_bytes(&self) -> u32 {
        self.stream.bytes.len() as u32
    }

    /// One bit-by-bit decode; returns a checksum so the work is observable.
    pub fn run_naive(&self) -> Result<u32, JsError> {
        let out = decode_naive(&self.stream.bytes, self.stream.bit_len, self.stream.count)
            .map_err(|e| JsError::new(&e.to_string()))?;
        if out != self.source {
            return Err(JsError::new("naive decoder mismatch"));
        }
        Ok(checksum(&out))
    }

    /// One table-driven decode; returns the same checksum.
    pub fn run_fast(&self) -> Result<u32, JsError> {
        let out = decode_fast(&self.stream.bytes, self.stream.count, tables())
            .map_err(|e| JsError::new(&e.to_string()))?;
        if out != self.source {
            return Err(JsError::new("fast decoder mismatch"));
        }
        Ok(checksum(&out))
    }
}

fn checksum(values: &[u64]) -> u32 {
    values
        .iter()
        .fold(0u64, |acc, &v| acc.wrapping_mul(31).wrapping_add(v)) as u32
}
