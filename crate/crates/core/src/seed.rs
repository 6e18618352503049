//! Seed derivation.
//!
//! Every random stream is a ChaCha8 generator keyed by a 64-bit seed. Child
//! seeds are derived from a parent with SplitMix64 over `parent ^ rotl(stream *
//! GOLDEN, 17)`, so repetition `i` of a run with master seed `s` always sees the
//! same stream, independent of thread scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

pub fn rng_from_seed(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of child stream `stream` under `parent`.
pub fn derive(parent: u64, stream: u64) -> u64 {
    splitmix64(parent ^ stream.wrapping_mul(GOLDEN).rotate_left(17))
}

/// Named sub-streams used inside one run.
pub mod streams {
    pub const SAMPLE: u64 = 1;
    pub const REDUCE: u64 = 2;
    pub const FOREST: u64 = 3;
    pub const REPETITION: u64 = 0x100;
}
