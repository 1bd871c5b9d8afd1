use thiserror::Error;

/// Errors shared by the codecs, the table builder, and the benchmark harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Fibonacci codes exist for positive integers only.
    #[error("zero is not encodable")]
    ZeroUnencodable,
    /// A value or Fibonacci index left the 64-bit range. On decode this means
    /// the stream is malformed or oversized, never silent wraparound.
    #[error("64-bit overflow while evaluating a Fibonacci code")]
    Overflow,
    #[error("read past the end of the bit stream")]
    EndOfStream,
    #[error("stream ended after {got} of {expected} numbers")]
    Truncated { expected: u64, got: u64 },
    #[error("segment size {0} is outside the supported range 2..=16")]
    SegmentSize(u32),
    #[error("record index {index} out of range for a table of {len} records")]
    RecordIndex { index: usize, len: usize },
    #[error("invalid value range {lo}..={hi}; bounds must satisfy 1 <= lo <= hi")]
    InvalidRange { lo: u64, hi: u64 },
    #[error("benchmark repeats must be at least 1")]
    ZeroRepeats,
    #[error("{decoder} decoder output differs from the source collection")]
    DecoderMismatch { decoder: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
