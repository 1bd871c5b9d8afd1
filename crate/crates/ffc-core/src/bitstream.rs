//! LSB-first bit packing over byte buffers.
//!
//! Stream bit `j` (0-based) lives in byte `j / 8` at weight `2^(j % 8)`, so
//! the least-significant bit of each byte is the earliest in stream order.
//! This layout is load-bearing: each payload byte, read as an integer, is
//! exactly the segment value the fast decoder uses as a table index.

use crate::error::{Error, Result};
use crate::fib::FibCode;

/// Append-only bit sink. The unwritten tail of the final byte stays zero;
/// the declared number count, not the padding, terminates decoding.
#[derive(Debug, Default)]
pub struct BitWriter {
    buf: Vec<u8>,
    bit_len: u64,
}

impl BitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn push_bit(&mut self, bit: bool) {
        let slot = (self.bit_len % 8) as u32;
        if slot == 0 {
            self.buf.push(0);
        }
        if bit {
            *self.buf.last_mut().expect("byte pushed above") |= 1 << slot;
        }
        self.bit_len += 1;
    }

    /// Appends `a_1..a_p` followed by the 1-bit terminator.
    pub fn write_code(&mut self, code: &FibCode) {
        assert!(code.is_terminated(), "only terminated codes are emitted");
        for &bit in code.bits() {
            self.push_bit(bit);
        }
        self.push_bit(true);
    }

    pub fn bit_len(&self) -> u64 {
        self.bit_len
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.buf
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.buf
    }
}

/// Cursor over a bit sequence with a declared valid length.
#[derive(Debug)]
pub struct BitReader<'a> {
    buf: &'a [u8],
    bit_len: u64,
    cursor: u64,
}

impl<'a> BitReader<'a> {
    pub fn new(buf: &'a [u8], bit_len: u64) -> Self {
        assert!(
            bit_len <= buf.len() as u64 * 8,
            "declared bit length exceeds the buffer"
        );
        BitReader {
            buf,
            bit_len,
            cursor: 0,
        }
    }

    #[inline]
    pub fn read_bit(&mut self) -> Result<bool> {
        if self.cursor == self.bit_len {
            return Err(Error::EndOfStream);
        }
        let byte = self.buf[(self.cursor / 8) as usize];
        let bit = byte >> (self.cursor % 8) & 1 == 1;
        self.cursor += 1;
        Ok(bit)
    }

    pub fn remaining(&self) -> u64 {
        self.bit_len - self.cursor
    }
}

/// Each byte of the compressed stream, in order, is one 8-bit segment value.
pub fn segments(bytes: &[u8]) -> impl Iterator<Item = u8> + '_ {
    bytes.iter().copied()
}
