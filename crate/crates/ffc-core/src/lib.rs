//! Fibonacci-coding compression toolkit.
//!
//! The pieces, bottom up:
//!
//! - [`fib`] — Fibonacci numbers, Zeckendorf codewords, and the code-shift
//!   arithmetic that lets a codeword fragment be re-based in O(1).
//! - [`bitstream`] — LSB-first bit packing, so each payload byte doubles as
//!   a table index.
//! - [`naive`] — the stream encoder and the reference bit-by-bit decoder.
//! - [`fast`] — precomputed segment mapping tables and the
//!   segment-at-a-time decoder built on them.
//! - [`collections`] — deterministic generators for the ten benchmark
//!   collections.
//! - [`bench`] — the decoder timing harness.
//!
//! Mapping tables are immutable once built and safe to share across
//! threads; all codec entry points are pure functions of their inputs.

pub mod bench;
pub mod bitstream;
pub mod collections;
mod error;
pub mod fast;
pub mod fib;
pub mod naive;

pub use error::{Error, Result};
