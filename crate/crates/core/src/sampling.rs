//! Seeded integer sample points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Default seed for every randomized check.
pub const DEFAULT_SEED: u64 = 0xF8F7;

/// Sample entries are drawn uniformly from `[-SAMPLE_BOUND, SAMPLE_BOUND]`.
pub const SAMPLE_BOUND: i64 = 9;

/// Deterministic stream of integer points; trial `i` is always the `i`-th draw.
pub struct PointSampler {
    rng: ChaCha8Rng,
    dim: usize,
}

impl PointSampler {
    pub fn new(dim: usize, seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            dim,
        }
    }

    pub fn next_point(&mut self) -> Vec<i64> {
        (0..self.dim)
            .map(|_| self.rng.random_range(-SAMPLE_BOUND..=SAMPLE_BOUND))
            .collect()
    }

    /// Like [`Self::next_point`] but never the zero vector.
    pub fn next_nonzero_point(&mut self) -> Vec<i64> {
        loop {
            let p = self.next_point();
            if p.iter().any(|&v| v != 0) {
                return p;
            }
        }
    }
}

pub fn sample_points(dim: usize, count: usize, seed: u64) -> Vec<Vec<i64>> {
    let mut s = PointSampler::new(dim, seed);
    (0..count).map(|_| s.next_point()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_bounded() {
        let a = sample_points(32, 10, 7);
        let b = sample_points(32, 10, 7);
        assert_eq!(a, b);
        assert!(a.iter().flatten().all(|v| v.abs() <= SAMPLE_BOUND));
        assert_ne!(a, sample_points(32, 10, 8));
    }
}
