//! Fibonacci numbers, Zeckendorf codewords, and code-value arithmetic.
//!
//! Indexing convention used throughout the crate: `F_0 = 1`, `F_1 = 1`,
//! `F_2 = 2`, `F_3 = 3`, `F_4 = 5`, ... and `F_i = 0` for `i < 0`. A codeword
//! for `n >= 1` is the bit string `a_1..a_p` with `n = sum(a_i * F_i)`, no two
//! adjacent 1-bits, and `a_p = 1`; the emitted form appends one more 1-bit as
//! a terminator, so every codeword on the wire ends in `11`.
//!
//! Besides encoding, this module provides the *offset valuation* of a bit
//! string, `value(bits, k) = sum(a_i * F_{i-k})`, and the two code shifts
//! built on it. Prepending `k` zeros to a codeword multiplies its value in a
//! structured way:
//!
//! ```text
//! shifted_value(n, k) = F_k * n + F_{k-1} * value(bits(n), 1)
//! ```
//!
//! which is what lets the fast decoder splice a code fragment onto a pending
//! partial number with two multiplications instead of a bit loop. The
//! brute-force form ([`shift_left_value_brute`]) stays around as the
//! independent oracle for that identity.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Precomputed Fibonacci numbers, one entry per index starting at `F_0 = 1`,
/// extended as far as 64 bits allow (93 entries). Immutable once built, so a
/// single instance is shared by every codec in the process.
#[derive(Debug, Clone)]
pub struct FibTable {
    values: Vec<u64>,
}

impl FibTable {
    pub fn new() -> Self {
        let mut values = vec![1u64, 1];
        while let Some(next) = values[values.len() - 1].checked_add(values[values.len() - 2]) {
            values.push(next);
        }
        FibTable { values }
    }

    /// `F_index`, or `None` past the 64-bit range. Negative indices never
    /// reach the table; callers drop those terms as zero.
    #[inline]
    pub fn get(&self, index: usize) -> Option<u64> {
        self.values.get(index).copied()
    }

    /// Largest index stored; any shift that would need more is an overflow.
    #[inline]
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Index of the largest `F_i <= n`, searched over `i >= 1` so the answer
    /// is unique. This is also the value-bit length of the codeword for `n`.
    pub fn largest_index_at_most(&self, n: u64) -> usize {
        debug_assert!(n >= 1);
        // values[1..] is strictly increasing, so binary search applies.
        match self.values[1..].binary_search(&n) {
            Ok(pos) => pos + 1,
            Err(pos) => pos,
        }
    }
}

impl Default for FibTable {
    fn default() -> Self {
        Self::new()
    }
}

static TABLE: OnceLock<FibTable> = OnceLock::new();

/// The process-wide table behind the free functions of this module.
pub fn table() -> &'static FibTable {
    TABLE.get_or_init(FibTable::new)
}

/// A Fibonacci codeword: value bits `a_1..a_p` in stream order plus a flag
/// recording whether the trailing 1-bit terminator is logically present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibCode {
    bits: Vec<bool>,
    terminated: bool,
}

impl FibCode {
    /// The value bits `a_1..a_p`; the terminator is never part of this slice.
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn is_terminated(&self) -> bool {
        self.terminated
    }

    /// Number of bits the codeword occupies on the wire (terminator included
    /// when present).
    pub fn emitted_len(&self) -> usize {
        self.bits.len() + usize::from(self.terminated)
    }
}

impl fmt::Display for FibCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &bit in &self.bits {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        if self.terminated {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Zeckendorf representation of `n`: the unique expression of a positive
/// integer as a sum of non-adjacent Fibonacci numbers, returned as an
/// unterminated codeword. Built greedily from the largest `F_i <= n` down.
pub fn zeckendorf(n: u64) -> Result<FibCode> {
    if n == 0 {
        return Err(Error::ZeroUnencodable);
    }
    let table = table();
    let width = table.largest_index_at_most(n);
    let mut bits = vec![false; width];
    let mut rest = n;
    for i in (1..=width).rev() {
        let f = table.get(i).expect("index bounded by the search above");
        if f <= rest {
            bits[i - 1] = true;
            rest -= f;
        }
    }
    // Greedy choice cannot pick adjacent indices: after taking F_i the
    // remainder is below F_{i-1}.
    debug_assert_eq!(rest, 0);
    Ok(FibCode {
        bits,
        terminated: false,
    })
}

/// The emitted codeword for `n`: Zeckendorf bits plus the terminator.
pub fn encode_number(n: u64) -> Result<FibCode> {
    let mut code = zeckendorf(n)?;
    code.terminated = true;
    Ok(code)
}

/// Valuation of a bit string under index offset `k`:
/// `sum(a_i * F_{i-k})` with `F_0 = 1` and `F_i = 0` for `i < 0`.
/// The terminator bit must not be part of `bits`. The empty string is 0.
pub fn value(bits: &[bool], offset: usize) -> Result<u64> {
    let table = table();
    let mut sum: u64 = 0;
    for (pos, &bit) in bits.iter().enumerate() {
        if !bit {
            continue;
        }
        let i = pos + 1;
        if i < offset {
            continue; // F_{i-k} = 0 below index zero
        }
        let f = table.get(i - offset).ok_or(Error::Overflow)?;
        sum = sum.checked_add(f).ok_or(Error::Overflow)?;
    }
    Ok(sum)
}

/// Drops the first `k` bit positions of `n`'s codeword from the valuation:
/// `sum(a_i * F_{i-k})`.
pub fn shift_right_value(n: u64, k: usize) -> Result<u64> {
    value(zeckendorf(n)?.bits(), k)
}

/// Value of `n`'s codeword with `k` zeros prepended, computed without
/// touching the bits: `F_k * n + F_{k-1} * first_shifted`, where
/// `first_shifted` must be `shift_right_value(n, 1)` (or 0 for the degenerate
/// empty code of a zero-valued partial, which shifts to 0 at any `k`).
pub fn shift_left_value(n: u64, first_shifted: u64, k: usize) -> Result<u64> {
    if k == 0 {
        return Ok(n); // the F_{-1} term vanishes
    }
    let table = table();
    let f_k = table.get(k).ok_or(Error::Overflow)?;
    let f_k1 = table.get(k - 1).ok_or(Error::Overflow)?;
    let whole = f_k.checked_mul(n).ok_or(Error::Overflow)?;
    let carry = f_k1.checked_mul(first_shifted).ok_or(Error::Overflow)?;
    whole.checked_add(carry).ok_or(Error::Overflow)
}

/// Oracle for [`shift_left_value`]: literally prepend `k` zeros to the
/// codeword of `n` and evaluate the plain sum `sum(a_i * F_{k+i})`.
pub fn shift_left_value_brute(n: u64, k: usize) -> Result<u64> {
    let code = zeckendorf(n)?;
    let mut bits = vec![false; k];
    bits.extend_from_slice(code.bits());
    value(&bits, 0)
}
