//! Deterministic, labeled randomness streams.
//!
//! Every source of randomness in a scenario run is a [`RngStream`] derived
//! from the scenario seed by a path of `(label, index)` pairs, e.g.
//! `seed -> ("trial", 17) -> ("client", 0)`. Parties, the adversary, and the
//! noise model each get their own stream, so changing one strategy never
//! perturbs the draws of the others. Derivation is pure: the same path always
//! yields the same stream, independent of draw order elsewhere.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// splitmix64 finalizer; used only to expand derivation keys.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn hash_label(label: &str) -> u64 {
    // FNV-1a, stable across platforms.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// A seedable ChaCha-backed random stream with pure child derivation.
#[derive(Debug, Clone)]
pub struct RngStream {
    key: u64,
    rng: ChaCha12Rng,
}

impl RngStream {
    pub fn from_seed(seed: u64) -> Self {
        Self::from_key(mix(seed))
    }

    fn from_key(key: u64) -> Self {
        let mut bytes = [0u8; 32];
        for (i, chunk) in bytes.chunks_exact_mut(8).enumerate() {
            chunk.copy_from_slice(&mix(key ^ mix(i as u64 + 1)).to_le_bytes());
        }
        RngStream {
            key,
            rng: ChaCha12Rng::from_seed(bytes),
        }
    }

    /// Derive an independent child stream. Purely a function of this
    /// stream's key and `(label, index)`; never consumes randomness.
    pub fn derive(&self, label: &str, index: u64) -> Self {
        Self::from_key(mix(self.key ^ hash_label(label).rotate_left(17) ^ mix(index)))
    }

    /// One uniform bit.
    pub fn bit(&mut self) -> u8 {
        (self.rng.next_u32() >> 17) as u8 & 1
    }

    /// Uniform in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        rand::Rng::random_range(&mut self.rng, 0..n)
    }

    /// Bernoulli draw.
    pub fn chance(&mut self, p: f64) -> bool {
        rand::Rng::random_bool(&mut self.rng, p.clamp(0.0, 1.0))
    }

    /// Uniform in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        rand::Rng::random(&mut self.rng)
    }

    /// A uniformly random subset of `amount` distinct indices from `0..len`,
    /// returned sorted.
    pub fn distinct_indices(&mut self, len: usize, amount: usize) -> Vec<usize> {
        assert!(amount <= len);
        let mut picked = rand::seq::index::sample(&mut self.rng, len, amount).into_vec();
        picked.sort_unstable();
        picked
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.rng.fill_bytes(dest)
    }
}
