//! Seeded random streams.
//!
//! Every trial owns exactly one [`RngStream`]. Streams are derived from a
//! master seed with [`derive_trial_seed`], so trials can run in any order or
//! in parallel and still replay bit-identically.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use sha2::{Digest, Sha256};

/// A single-owner stream of pseudo-random numbers.
///
/// Backed by ChaCha20, whose output is specified independently of platform
/// and word size.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    inner: ChaCha20Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self { seed, inner: ChaCha20Rng::seed_from_u64(seed) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform sample on `[0, 1)`.
    #[inline]
    pub fn uniform(&mut self) -> f64 {
        self.inner.random::<f64>()
    }

    /// Uniform sample on `[-1, 1]`.
    #[inline]
    pub fn uniform_signed(&mut self) -> f64 {
        2.0 * self.uniform() - 1.0
    }

    /// Uniform sample on `[low, high)`.
    #[inline]
    pub fn uniform_in(&mut self, low: f64, high: f64) -> f64 {
        low + (high - low) * self.uniform()
    }

    /// Uniform integer in `0..n`. Panics if `n == 0`.
    #[inline]
    pub fn integer(&mut self, n: usize) -> usize {
        assert!(n > 0, "integer(0) has an empty range");
        self.inner.random_range(0..n)
    }

    /// Uniform index in `0..n` other than `exclude`. Requires `n >= 2`.
    #[inline]
    pub fn index_excluding(&mut self, n: usize, exclude: usize) -> usize {
        assert!(n >= 2, "need at least two indices to exclude one");
        let k = self.integer(n - 1);
        if k >= exclude {
            k + 1
        } else {
            k
        }
    }

    /// Standard normal sample.
    #[inline]
    pub fn normal(&mut self) -> f64 {
        self.inner.sample(StandardNormal)
    }

    /// Fisher-Yates permutation of `0..n`.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.integer(i + 1);
            p.swap(i, j);
        }
        p
    }
}

/// Derive the seed of one trial from the master seed and the trial's identity.
///
/// All four inputs are fed through SHA-256 with length prefixes, so distinct
/// `(algo, problem)` pairs cannot alias by concatenation.
pub fn derive_trial_seed(master_seed: u64, algo_id: &str, problem_id: &str, trial_index: u64) -> u64 {
    let mut h = Sha256::new();
    h.update(b"batopt/trial-seed/v1");
    h.update(master_seed.to_le_bytes());
    h.update((algo_id.len() as u64).to_le_bytes());
    h.update(algo_id.as_bytes());
    h.update((problem_id.len() as u64).to_le_bytes());
    h.update(problem_id.as_bytes());
    h.update(trial_index.to_le_bytes());
    let digest = h.finalize();
    let mut bytes = [0u8; 8];
    bytes.copy_from_slice(&digest[..8]);
    u64::from_le_bytes(bytes)
}
