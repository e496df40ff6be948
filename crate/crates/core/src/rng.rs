//! Deterministic random streams.
//!
//! Every trial owns a small set of independent streams keyed by
//! `(seed, purpose)`. The trial seed itself is derived from a master seed and
//! the trial index, so output never depends on which worker ran a trial or
//! in which order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

/// What a stream is used for. Distinct purposes never share draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Purpose {
    Exploration,
    Exploitation,
    Baseline,
    Concentration,
}

impl Purpose {
    fn tag(self) -> u64 {
        match self {
            Purpose::Exploration => 0x0e,
            Purpose::Exploitation => 0x0f,
            Purpose::Baseline => 0xba,
            Purpose::Concentration => 0xc0,
        }
    }
}

/// SplitMix64 finalizer.
fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of trial `trial` under `master`.
pub fn trial_seed(master: u64, trial: u64) -> u64 {
    mix64(master ^ mix64(trial))
}

/// A seeded stream of uniforms and standard normals.
///
/// Normals come from the Box-Muller transform. Each transform yields a pair;
/// the sine half is cached and returned by the next call, so the n-th normal
/// of a stream is a fixed function of its first `2 * ceil(n / 2)` uniforms.
#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    purpose: Purpose,
    rng: ChaCha8Rng,
    spare: Option<f64>,
}

impl RandomStream {
    pub fn new(seed: u64, purpose: Purpose) -> Self {
        let rng = ChaCha8Rng::seed_from_u64(mix64(seed ^ mix64(purpose.tag())));
        Self {
            seed,
            purpose,
            rng,
            spare: None,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn purpose(&self) -> Purpose {
        self.purpose
    }

    /// Uniform on `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    pub fn standard_normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        // u1 in (0, 1] keeps the log finite.
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let (s, c) = (TAU * u2).sin_cos();
        self.spare = Some(r * s);
        r * c
    }

    /// A fresh stream for sub-task `index` (e.g. one simulated path).
    pub fn child(&self, index: u64) -> RandomStream {
        RandomStream::new(trial_seed(self.seed, index), self.purpose)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_and_purpose_repeat() {
        let mut a = RandomStream::new(42, Purpose::Exploration);
        let mut b = RandomStream::new(42, Purpose::Exploration);
        for _ in 0..1000 {
            assert_eq!(a.standard_normal().to_bits(), b.standard_normal().to_bits());
        }
    }

    #[test]
    fn purposes_are_disjoint() {
        let mut a = RandomStream::new(42, Purpose::Exploration);
        let mut b = RandomStream::new(42, Purpose::Exploitation);
        let xs: Vec<f64> = (0..16).map(|_| a.uniform()).collect();
        let ys: Vec<f64> = (0..16).map(|_| b.uniform()).collect();
        assert_ne!(xs, ys);
    }

    #[test]
    fn trial_seeds_differ() {
        let seeds: std::collections::HashSet<u64> = (0..10_000).map(|i| trial_seed(7, i)).collect();
        assert_eq!(seeds.len(), 10_000);
    }

    #[test]
    fn normal_moments() {
        let mut s = RandomStream::new(3, Purpose::Baseline);
        let n = 200_000;
        let (mut sum, mut sq) = (0.0, 0.0);
        for _ in 0..n {
            let z = s.standard_normal();
            sum += z;
            sq += z * z;
        }
        let mean = sum / n as f64;
        let var = sq / n as f64 - mean * mean;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 1.0).abs() < 0.02, "var {var}");
    }
}
