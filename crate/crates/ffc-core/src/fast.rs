//! Segment-at-a-time decoding through precomputed mapping tables.
//!
//! Instead of pulling the stream apart bit by bit, the fast decoder treats
//! each byte (more generally, each `S`-bit segment) as an index into a table
//! whose records memoize what the bit-by-bit decoder would have done with
//! that exact bit pattern: the fully decoded numbers, the value and bit
//! length of an unterminated tail, and whether the segment starts/ends with
//! a 0-bit.
//!
//! Two tables are needed because a segment's first 1-bit may be the
//! terminator of a number begun in the previous segment. `MAP1` decodes all
//! `S` bits; `MAP2` is consulted instead when a number is pending and the
//! previous segment ended in a 1-bit, and its odd records (first bit is a 1
//! that gets consumed as the boundary terminator) decode only the top `S-1`
//! bits. Even `MAP2` entries are shared with `MAP1` rather than copied,
//! which halves the table memory.
//!
//! A number spanning segments is carried as `(last_number, shift)` and each
//! continuation fragment is spliced on in O(1) via
//! [`fib::shift_left_value`]; the `first_shifted` field of each record
//! exists precisely so that splice needs no code reconstruction at decode
//! time.

use std::fmt;

use crate::error::{Error, Result};
use crate::fib;

/// What the bit-by-bit decoder produces for one segment's bit pattern.
///
/// `numbers` holds the fully decoded values in order; when `shift != 0` the
/// last entry is the *partial* value of the unterminated tail (possibly 0
/// for an all-zero tail) and `shift` is that tail's bit length. A record for
/// an `S`-bit pattern never holds more than `ceil(S / 2)` numbers, since
/// every complete codeword occupies at least two bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapRecord {
    count: u8,
    shift: u8,
    end_with_zero: bool,
    start_with_zero: bool,
    numbers: Vec<u64>,
    first_shifted: u64,
}

impl MapRecord {
    /// Numbers decoded from the segment, trailing partial included.
    pub fn count(&self) -> u8 {
        self.count
    }

    pub fn numbers(&self) -> &[u64] {
        &self.numbers
    }

    /// Bit length of the unterminated tail, 0 if the segment's last number
    /// completed (i.e. the segment ends with two 1-bits).
    pub fn shift(&self) -> u8 {
        self.shift
    }

    pub fn end_with_zero(&self) -> bool {
        self.end_with_zero
    }

    pub fn start_with_zero(&self) -> bool {
        self.start_with_zero
    }

    /// Precomputed `shift_right_value(numbers[0], 1)`, 0 for a zero-valued
    /// first entry. Feeds the O(1) splice of a continuation fragment.
    pub fn first_shifted(&self) -> u64 {
        self.first_shifted
    }
}

impl fmt::Display for MapRecord {
    /// `{count,(numbers),shift,end_with_zero,start_with_zero}` with
    /// `True`/`False` flags.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},(", self.count)?;
        for (i, n) in self.numbers.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(
            f,
            "),{},{},{}}}",
            self.shift,
            if self.end_with_zero { "True" } else { "False" },
            if self.start_with_zero {
                "True"
            } else {
                "False"
            },
        )
    }
}

/// Decodes one segment's bits exactly as the naive decoder would and records
/// the outcome. Every bit pattern is a valid input.
pub fn build_record(bits: &[bool]) -> MapRecord {
    assert!(!bits.is_empty(), "a segment has at least one bit");
    let table = fib::table();
    let mut numbers = Vec::new();
    let mut acc: u64 = 0;
    let mut pos: usize = 0;
    let mut prev = false;
    for &bit in bits {
        if prev && bit {
            numbers.push(acc);
            acc = 0;
            pos = 0;
            prev = false;
            continue;
        }
        pos += 1;
        if bit {
            // Segments are at most 16 bits, far inside the table.
            acc += table.get(pos).expect("segment fits the table");
        }
        prev = bit;
    }
    let shift = pos as u8;
    if shift != 0 {
        numbers.push(acc); // the partial, even when its value is 0
    }
    let first_shifted = match numbers.first() {
        Some(&n) if n > 0 => fib::shift_right_value(n, 1).expect("n > 0 and in range"),
        _ => 0,
    };
    MapRecord {
        count: numbers.len() as u8,
        shift,
        end_with_zero: !bits[bits.len() - 1],
        start_with_zero: !bits[0],
        numbers,
        first_shifted,
    }
}

/// `MAP1` and `MAP2` for one segment size.
///
/// `map2` is exposed through [`MappingTables::map2`]; its even entries
/// resolve to the corresponding `map1` record, so only the odd records are
/// stored.
#[derive(Debug, Clone)]
pub struct MappingTables {
    segment_size: u32,
    map1: Vec<MapRecord>,
    map2_odd: Vec<MapRecord>,
}

impl MappingTables {
    /// Builds both tables for `segment_size`-bit segments. The tables have
    /// `2^S` records, so sizes above 16 bits are refused.
    pub fn build(segment_size: u32) -> Result<Self> {
        if !(2..=16).contains(&segment_size) {
            return Err(Error::SegmentSize(segment_size));
        }
        let records = 1usize << segment_size;
        let mut map1 = Vec::with_capacity(records);
        for i in 0..records {
            map1.push(build_record(&segment_bits(i, segment_size)));
        }
        let mut map2_odd = Vec::with_capacity(records / 2);
        for i in (1..records).step_by(2) {
            // Drop the lowest bit: it is consumed as the terminator of the
            // number pending from the previous segment. The record's start
            // flag refers to that original 1-bit.
            let mut record = build_record(&segment_bits(i >> 1, segment_size - 1));
            record.start_with_zero = false;
            map2_odd.push(record);
        }
        Ok(MappingTables {
            segment_size,
            map1,
            map2_odd,
        })
    }

    pub fn segment_size(&self) -> u32 {
        self.segment_size
    }

    pub fn map1(&self, index: usize) -> Result<&MapRecord> {
        self.map1.get(index).ok_or(Error::RecordIndex {
            index,
            len: self.map1.len(),
        })
    }

    pub fn map2(&self, index: usize) -> Result<&MapRecord> {
        if index >= self.map1.len() {
            return Err(Error::RecordIndex {
                index,
                len: self.map1.len(),
            });
        }
        if index % 2 == 1 {
            Ok(&self.map2_odd[index / 2])
        } else {
            Ok(&self.map1[index]) // even records alias MAP1
        }
    }
}

/// Stream order bits of `value`, LSB first, `len` of them.
fn segment_bits(value: usize, len: u32) -> Vec<bool> {
    (0..len).map(|j| value >> j & 1 == 1).collect()
}

/// Decodes `count` numbers from byte segments using 8-bit tables.
pub fn decode_fast(segments: &[u8], count: u64, tables: &MappingTables) -> Result<Vec<u64>> {
    assert_eq!(
        tables.segment_size(),
        8,
        "byte segments require 8-bit tables"
    );
    decode_segment_values(segments.iter().map(|&s| usize::from(s)), count, tables)
}

/// Segment-size-agnostic core of the fast decoder; `segments` are the
/// stream's consecutive `S`-bit values.
pub fn decode_segment_values<I>(segments: I, count: u64, tables: &MappingTables) -> Result<Vec<u64>>
where
    I: IntoIterator<Item = usize>,
{
    let iter = segments.into_iter();
    // Two bits minimum per codeword bounds how many numbers the stream can
    // actually hold, whatever the header claims. Counts are compared in u64
    // so an oversized header cannot wrap on 32-bit targets.
    let cap = count.min(
        iter.size_hint()
            .0
            .saturating_mul(tables.segment_size() as usize) as u64
            / 2,
    ) as usize;
    let mut out: Vec<u64> = Vec::with_capacity(cap);
    if count == 0 {
        return Ok(out);
    }
    let max_shift = fib::table().max_index();
    let mut shift: usize = 0;
    let mut last_number: u64 = 0;
    let mut prev_end_with_zero = false;

    'segments: for segment in iter {
        let record = if shift == 0 || prev_end_with_zero {
            tables.map1(segment)?
        } else {
            let record = tables.map2(segment)?;
            if !record.start_with_zero {
                // The odd record's dropped first bit, together with the
                // previous segment's final 1-bit, terminated the pending
                // number right at the boundary.
                out.push(last_number);
                if out.len() as u64 == count {
                    break 'segments;
                }
                shift = 0;
            }
            record
        };

        if shift == 0 {
            // No pending number: the record's numbers stand on their own.
            let complete = if record.shift == 0 {
                &record.numbers[..]
            } else {
                &record.numbers[..record.numbers.len() - 1]
            };
            for &n in complete {
                out.push(n);
                if out.len() as u64 == count {
                    break 'segments;
                }
            }
            if record.shift != 0 {
                last_number = *record.numbers.last().expect("partial entry");
            }
            shift = record.shift as usize;
        } else {
            // The record's first number is the continuation of the pending
            // one; splice it on at the accumulated offset.
            let spliced = fib::shift_left_value(record.numbers[0], record.first_shifted, shift)?;
            last_number = last_number.checked_add(spliced).ok_or(Error::Overflow)?;
            if record.shift == 0 {
                out.push(last_number);
                if out.len() as u64 == count {
                    break 'segments;
                }
                shift = 0;
                for &n in &record.numbers[1..] {
                    out.push(n);
                    if out.len() as u64 == count {
                        break 'segments;
                    }
                }
            } else if record.count == 1 {
                // The whole segment extends the pending number.
                shift += record.shift as usize;
                if shift > max_shift {
                    return Err(Error::Overflow);
                }
            } else {
                out.push(last_number);
                if out.len() as u64 == count {
                    break 'segments;
                }
                for &n in &record.numbers[1..record.numbers.len() - 1] {
                    out.push(n);
                    if out.len() as u64 == count {
                        break 'segments;
                    }
                }
                last_number = *record.numbers.last().expect("partial entry");
                shift = record.shift as usize;
            }
        }
        prev_end_with_zero = record.end_with_zero;
    }

    if (out.len() as u64) < count {
        return Err(Error::Truncated {
            expected: count,
            got: out.len() as u64,
        });
    }
    Ok(out)
}
