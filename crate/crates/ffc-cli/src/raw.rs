//! Raw number interchange format: a little-endian u64 count followed by that
//! many little-endian u64 values. Used both for generated collections and
//! for decoder output, so encode/decode round trips can be compared byte
//! for byte.

use std::io::{Read, Write};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RawError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("raw number file truncated: expected {expected} values, found {got}")]
    Truncated { expected: u64, got: u64 },
}

pub fn write_raw(writer: &mut impl Write, numbers: &[u64]) -> std::io::Result<()> {
    writer.write_all(&(numbers.len() as u64).to_le_bytes())?;
    for &n in numbers {
        writer.write_all(&n.to_le_bytes())?;
    }
    Ok(())
}

pub fn read_raw(reader: &mut impl Read) -> Result<Vec<u64>, RawError> {
    let mut word = [0u8; 8];
    reader.read_exact(&mut word)?;
    let count = u64::from_le_bytes(word);
    // Grow instead of trusting the header with one huge allocation.
    let mut numbers = Vec::with_capacity(count.min(1 << 20) as usize);
    for got in 0..count {
        if reader.read_exact(&mut word).is_err() {
            return Err(RawError::Truncated {
                expected: count,
                got,
            });
        }
        numbers.push(u64::from_le_bytes(word));
    }
    Ok(numbers)
}
