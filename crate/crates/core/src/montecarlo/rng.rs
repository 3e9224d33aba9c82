//! Counter-addressed random streams.
//!
//! Replicate `r` of row `n` in study `study` under `root_seed` draws from
//! ChaCha8 keyed by
//!
//! ```text
//! row_seed = splitmix64(splitmix64(splitmix64(root_seed) ^ study) ^ n)
//! key      = four successive outputs of the SplitMix64 generator started at row_seed
//! ```
//!
//! with the ChaCha stream id set to `r`. Any stream is reachable in O(1), so
//! results do not depend on how replicates are scheduled across threads.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stable 64-bit identifier for a study label (FNV-1a).
pub fn study_id(label: &str) -> u64 {
    label.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// Seed shared by all replicates of one `(study, n)` row.
pub fn row_seed(root_seed: u64, study: u64, n: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(root_seed) ^ study) ^ n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StreamKey {
    pub study: u64,
    pub n: u64,
    pub replicate: u64,
}

/// One independent substream; implements [`RngCore`].
#[derive(Debug, Clone)]
pub struct RngStream {
    root_seed: u64,
    key: StreamKey,
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(root_seed: u64, key: StreamKey) -> Self {
        let mut state = row_seed(root_seed, key.study, key.n);
        let mut seed = [0u8; 32];
        for chunk in seed.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(state).to_le_bytes());
            state = state.wrapping_add(GOLDEN_GAMMA);
        }
        let mut rng = ChaCha8Rng::from_seed(seed);
        rng.set_stream(key.replicate);
        Self {
            root_seed,
            key,
            rng,
        }
    }

    pub fn root_seed(&self) -> u64 {
        self.root_seed
    }

    pub fn key(&self) -> StreamKey {
        self.key
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.rng.fill_bytes(dst)
    }
}
