//! Seeded, splittable random streams.
//!
//! Every randomized routine in the crate takes a `u64` seed and derives its
//! generators through [`stream`], so that a run is reproducible bit-for-bit
//! and independent streams (one per refreshed sketch, one per Monte-Carlo
//! trial) can be consumed in parallel without sharing state.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer; decorrelates nearby `(seed, stream)` pairs.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derived seed for the `stream_id`-th member of the family rooted at
/// `seed`. Refreshed sketches at iteration `t` use `derive(seed, t)`.
pub fn derive(seed: u64, stream_id: u64) -> u64 {
    mix(seed).wrapping_add(mix(stream_id ^ 0xa5a5_a5a5_5a5a_5a5a))
}

/// The `stream_id`-th generator of the family rooted at `seed`.
pub fn stream(seed: u64, stream_id: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive(seed, stream_id))
}

// Stream-id namespaces, one per subsystem. The same raw seed passed to a
// problem generator and a sketch draw must never replay the same normal
// sequence: a sketch built from the bytes that formed U would contain U's
// column space and silently bias every spectrum downstream.
pub(crate) const STREAM_PROBLEM: u64 = 0x7072_6f62;
pub(crate) const STREAM_SKETCH: u64 = 0x736b_6574;
pub(crate) const STREAM_MC_BASIS: u64 = 0x6d63_6261;
pub(crate) const STREAM_RHS: u64 = 0x7268_7379;
