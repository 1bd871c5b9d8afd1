//! On-disk archive layout, fixed-endian and bit-exact across platforms:
//!
//! ```text
//! offset  size  field
//!      0     4  magic "FFC1"
//!      4     1  format version (1)
//!      5     1  segment size in bits (8)
//!      6     8  number count, little-endian u64
//!     14     8  payload bit length, little-endian u64
//!     22     -  payload, ceil(bits / 8) bytes, LSB-first bit order
//! ```

use std::io::{Read, Write};

use ffc_core::naive::EncodedStream;
use thiserror::Error;

pub const MAGIC: [u8; 4] = *b"FFC1";
pub const VERSION: u8 = 1;
pub const SEGMENT_SIZE: u8 = 8;

#[derive(Debug, Error)]
pub enum ArchiveError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("not an ffc archive (bad magic)")]
    BadMagic,
    #[error("unsupported archive version {0}")]
    BadVersion(u8),
    #[error("unsupported segment size {0}")]
    BadSegmentSize(u8),
    #[error("archive payload truncated: expected {expected} bytes, found {got}")]
    TruncatedPayload { expected: u64, got: u64 },
}

pub fn write_archive(writer: &mut impl Write, stream: &EncodedStream) -> std::io::Result<()> {
    debug_assert_eq!(stream.bytes.len() as u64, stream.bit_len.div_ceil(8));
    writer.write_all(&MAGIC)?;
    writer.write_all(&[VERSION, SEGMENT_SIZE])?;
    writer.write_all(&stream.count.to_le_bytes())?;
    writer.write_all(&stream.bit_len.to_le_bytes())?;
    writer.write_all(&stream.bytes)?;
    Ok(())
}

pub fn read_archive(reader: &mut impl Read) -> Result<EncodedStream, ArchiveError> {
    let mut header = [0u8; 22];
    reader.read_exact(&mut header)?;
    if header[..4] != MAGIC {
        return Err(ArchiveError::BadMagic);
    }
    if header[4] != VERSION {
        return Err(ArchiveError::BadVersion(header[4]));
    }
    if header[5] != SEGMENT_SIZE {
        return Err(ArchiveError::BadSegmentSize(header[5]));
    }
    let count = u64::from_le_bytes(header[6..14].try_into().unwrap());
    let bit_len = u64::from_le_bytes(header[14..22].try_into().unwrap());
    let payload_len = bit_len.div_ceil(8);
    let mut bytes = Vec::with_capacity(payload_len.min(1 << 20) as usize);
    let got = reader
        .take(payload_len)
        .read_to_end(&mut bytes)
        .map_err(ArchiveError::Io)? as u64;
    if got < payload_len {
        return Err(ArchiveError::TruncatedPayload {
            expected: payload_len,
            got,
        });
    }
    Ok(EncodedStream {
        bytes,
        bit_len,
        count,
    })
}
