//! Reference codec: the stream encoder and the bit-by-bit decoder every
//! fast-path result is checked against.
//!
//! The decoder walks the stream one bit at a time, adding `F_i` for each set
//! bit at position `i` of the current codeword. Two consecutive 1-bits mark a
//! terminator: the accumulated value is emitted as-is (the terminator itself
//! contributes nothing) and the position resets. Tracking "previous bit was
//! one" instead of looking ahead means codes spanning byte boundaries need no
//! special cases.

use crate::bitstream::{BitReader, BitWriter};
use crate::error::{Error, Result};
use crate::fib;

/// A compressed sequence: packed codewords plus the framing the decoders
/// need. Padding bits in the final byte are zero and carry no data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedStream {
    pub bytes: Vec<u8>,
    pub bit_len: u64,
    pub count: u64,
}

impl EncodedStream {
    pub fn decode_naive(&self) -> Result<Vec<u64>> {
        decode_naive(&self.bytes, self.bit_len, self.count)
    }
}

/// Concatenates the codewords of `numbers` into a packed stream.
pub fn encode_stream(numbers: &[u64]) -> Result<EncodedStream> {
    let mut writer = BitWriter::new();
    for &n in numbers {
        writer.write_code(&fib::encode_number(n)?);
    }
    Ok(EncodedStream {
        bit_len: writer.bit_len(),
        bytes: writer.into_bytes(),
        count: numbers.len() as u64,
    })
}

/// Decodes exactly `count` numbers bit by bit; bits past the final
/// terminator are never inspected.
pub fn decode_naive(bytes: &[u8], bit_len: u64, count: u64) -> Result<Vec<u64>> {
    let table = fib::table();
    let mut reader = BitReader::new(bytes, bit_len);
    // Every codeword needs at least two bits, which bounds any trustworthy
    // count and keeps a hostile header from reserving unbounded memory.
    let mut out = Vec::with_capacity(count.min(bit_len / 2) as usize);
    let mut acc: u64 = 0;
    let mut pos: usize = 0;
    let mut prev = false;
    while (out.len() as u64) < count {
        let bit = reader.read_bit().map_err(|_| Error::Truncated {
            expected: count,
            got: out.len() as u64,
        })?;
        if prev && bit {
            // Terminator: recognized, not summed.
            out.push(acc);
            acc = 0;
            pos = 0;
            prev = false;
            continue;
        }
        pos += 1;
        if bit {
            let f = table.get(pos).ok_or(Error::Overflow)?;
            acc = acc.checked_add(f).ok_or(Error::Overflow)?;
        }
        prev = bit;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn worked_example_stream() {
        let stream = encode_stream(&[4, 7, 86]).unwrap();
        assert_eq!(stream.bytes, vec![173, 165, 6]);
        assert_eq!(stream.bit_len, 19);
        assert_eq!(stream.count, 3);
        assert_eq!(stream.decode_naive().unwrap(), vec![4, 7, 86]);
    }

    #[test]
    fn single_value_stream() {
        let stream = encode_stream(&[1]).unwrap();
        assert_eq!(stream.bytes, vec![0b0000_0011]);
        assert_eq!(stream.bit_len, 2);
        assert_eq!(stream.count, 1);
    }

    #[test]
    fn empty_stream() {
        let stream = encode_stream(&[]).unwrap();
        assert!(stream.bytes.is_empty());
        assert_eq!(stream.count, 0);
        assert_eq!(stream.decode_naive().unwrap(), Vec::<u64>::new());
    }

    #[test]
    fn zero_value_is_rejected() {
        assert_eq!(encode_stream(&[3, 0, 5]), Err(Error::ZeroUnencodable));
    }

    #[test]
    fn decodes_known_table_of_codes() {
        let numbers: Vec<u64> = (1..=8).collect();
        let stream = encode_stream(&numbers).unwrap();
        assert_eq!(stream.decode_naive().unwrap(), numbers);
    }

    #[test]
    fn truncated_stream_errors() {
        let stream = encode_stream(&[4, 7]).unwrap();
        let err = decode_naive(&stream.bytes, stream.bit_len, 3).unwrap_err();
        assert_eq!(
            err,
            Error::Truncated {
                expected: 3,
                got: 2
            }
        );
    }

    #[test]
    fn decoding_ignores_bits_after_last_terminator() {
        let mut stream = encode_stream(&[4, 7]).unwrap();
        // Garbage beyond the declared stream must not change the result.
        stream.bytes.extend_from_slice(&[0xAB, 0xCD]);
        let bit_len = stream.bytes.len() as u64 * 8;
        assert_eq!(decode_naive(&stream.bytes, bit_len, 2).unwrap(), vec![4, 7]);
    }

    #[test]
    fn overflowing_code_is_detected() {
        // A single set bit past the table's end cannot be a 64-bit value.
        let mut bits = vec![false; 100];
        bits[99] = true;
        let mut w = BitWriter::new();
        for &b in &bits {
            w.push_bit(b);
        }
        w.push_bit(true);
        w.push_bit(true);
        let bit_len = w.bit_len();
        assert_eq!(decode_naive(w.as_bytes(), bit_len, 1), Err(Error::Overflow));
    }

    proptest! {
        #[test]
        fn prop_encode_decode_inverse(
            numbers in proptest::collection::vec(1u64..=u32::MAX as u64, 0..200)
        ) {
            let stream = encode_stream(&numbers).unwrap();
            prop_assert_eq!(stream.decode_naive().unwrap(), numbers);
        }

        #[test]
        fn prop_encoding_is_deterministic(
            numbers in proptest::collection::vec(1u64..=u32::MAX as u64, 0..100)
        ) {
            prop_assert_eq!(
                encode_stream(&numbers).unwrap(),
                encode_stream(&numbers).unwrap()
            );
        }
    }
}
