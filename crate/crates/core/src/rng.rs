//! Seeded, splittable random streams.
//!
//! Every random draw in the crate comes from a [`SplitMix64`] generator whose
//! initial state is derived from an [`RngSeed`]:
//!
//! ```text
//! state0 = master_seed XOR mix64(stream_index + 0x9E3779B97F4A7C15)
//! ```
//!
//! where `mix64` is the SplitMix64 output finalizer (Stafford variant 13):
//!
//! ```text
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! z =  z ^ (z >> 31)
//! ```
//!
//! Each call to `next_u64` adds `0x9E3779B97F4A7C15` to the state (wrapping)
//! and returns `mix64(state)`. All arithmetic is wrapping 64-bit, so streams
//! are bit-identical on every platform.

use rand_core::RngCore;

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output finalizer.
#[inline]
pub const fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Identifies one independent random stream.
///
/// The pair `(master_seed, stream_index)` fully determines every draw of a
/// trial. Sweeps pack the row and trial into the index as
/// `(row << 32) | trial`, see [`RngSeed::for_row_trial`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RngSeed {
    pub master_seed: u64,
    pub stream_index: u64,
}

impl RngSeed {
    pub const fn new(master_seed: u64, stream_index: u64) -> Self {
        Self {
            master_seed,
            stream_index,
        }
    }

    pub const fn for_row_trial(master_seed: u64, row: u32, trial: u32) -> Self {
        Self::new(master_seed, ((row as u64) << 32) | trial as u64)
    }

    pub fn rng(&self) -> SplitMix64 {
        SplitMix64::from_state(self.master_seed ^ mix64(self.stream_index.wrapping_add(GAMMA)))
    }
}

/// A SplitMix64 generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub const fn from_state(state: u64) -> Self {
        Self { state }
    }

    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix64(self.state)
    }

    /// Uniform draw on the 2^53-point grid in `[0, 1)`.
    #[inline]
    pub fn next_unit(&mut self) -> f64 {
        (self.next() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform draw on the 2^53-point grid in `(0, 1]`.
    #[inline]
    pub fn next_unit_open0(&mut self) -> f64 {
        ((self.next() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

impl RngCore for SplitMix64 {
    fn next_u32(&mut self) -> u32 {
        (self.next() >> 32) as u32
    }

    fn next_u64(&mut self) -> u64 {
        self.next()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        for chunk in dst.chunks_mut(8) {
            let bytes = self.next().to_le_bytes();
            chunk.copy_from_slice(&bytes[..chunk.len()]);
        }
    }
}
