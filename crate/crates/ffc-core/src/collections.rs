//! Deterministic generators for the ten benchmark collections: sequential
//! and uniform-random numbers over the byte/16-bit/24-bit/32-bit value
//! ranges, 2^22 values each by default.

use std::fmt;
use std::str::FromStr;

use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Values per collection unless overridden.
pub const DEFAULT_LENGTH: u64 = 1 << 22;

pub const DEFAULT_SEED: u64 = 42;

/// Identifier of the generator behind [`Kind::Rand`], so runs can name the
/// exact algorithm they used.
pub const PRNG_ALGORITHM: &str = "chacha8";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Cycles the range in ascending order until `length` values exist.
    Seq,
    /// Uniform draws from the range, deterministic per seed.
    Rand,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollectionSpec {
    pub kind: Kind,
    /// Inclusive value interval; the lower bound must be at least 1.
    pub lo: u64,
    pub hi: u64,
    pub length: u64,
    /// Only [`Kind::Rand`] consumes the seed.
    pub seed: u64,
}

pub fn generate(spec: &CollectionSpec) -> Result<Vec<u64>> {
    if spec.lo == 0 || spec.lo > spec.hi {
        return Err(Error::InvalidRange {
            lo: spec.lo,
            hi: spec.hi,
        });
    }
    let length = spec.length as usize;
    let mut out = Vec::with_capacity(length);
    match spec.kind {
        Kind::Seq => {
            let mut v = spec.lo;
            for _ in 0..length {
                out.push(v);
                v = if v == spec.hi { spec.lo } else { v + 1 };
            }
        }
        Kind::Rand => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            let values = Uniform::new_inclusive(spec.lo, spec.hi);
            out.extend(values.sample_iter(&mut rng).take(length));
        }
    }
    Ok(out)
}

/// The ten named collections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    SeqAll,
    SeqVerySmall,
    SeqSmall,
    SeqLarge,
    SeqVeryLarge,
    RandAll,
    RandVerySmall,
    RandSmall,
    RandLarge,
    RandVeryLarge,
}

impl Preset {
    pub const ALL: [Preset; 10] = [
        Preset::SeqAll,
        Preset::SeqVerySmall,
        Preset::SeqSmall,
        Preset::SeqLarge,
        Preset::SeqVeryLarge,
        Preset::RandAll,
        Preset::RandVerySmall,
        Preset::RandSmall,
        Preset::RandLarge,
        Preset::RandVeryLarge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::SeqAll => "SEQ_ALL",
            Preset::SeqVerySmall => "SEQ_VerySmall",
            Preset::SeqSmall => "SEQ_Small",
            Preset::SeqLarge => "SEQ_Large",
            Preset::SeqVeryLarge => "SEQ_VeryLarge",
            Preset::RandAll => "RAND_ALL",
            Preset::RandVerySmall => "RAND_VerySmall",
            Preset::RandSmall => "RAND_Small",
            Preset::RandLarge => "RAND_Large",
            Preset::RandVeryLarge => "RAND_VeryLarge",
        }
    }

    pub fn kind(self) -> Kind {
        match self {
            Preset::SeqAll
            | Preset::SeqVerySmall
            | Preset::SeqSmall
            | Preset::SeqLarge
            | Preset::SeqVeryLarge => Kind::Seq,
            _ => Kind::Rand,
        }
    }

    /// Inclusive value range. "VerySmall" through "VeryLarge" cover the
    /// 8/16/24/32-bit value maxima; the two ALL presets differ because the
    /// sequential one enumerates exactly one collection's worth of values.
    pub fn range(self) -> (u64, u64) {
        match self {
            Preset::SeqAll => (1, 4_194_304),
            Preset::RandAll => (1, 4_294_967_295),
            Preset::SeqVerySmall | Preset::RandVerySmall => (1, 255),
            Preset::SeqSmall | Preset::RandSmall => (256, 65_535),
            Preset::SeqLarge | Preset::RandLarge => (65_536, 16_777_215),
            Preset::SeqVeryLarge | Preset::RandVeryLarge => (16_777_216, 4_294_967_295),
        }
    }

    pub fn spec(self, length: u64, seed: u64) -> CollectionSpec {
        let (lo, hi) = self.range();
        CollectionSpec {
            kind: self.kind(),
            lo,
            hi,
            length,
            seed,
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Preset::ALL
            .iter()
            .copied()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown collection preset '{s}'"))
    }
}
