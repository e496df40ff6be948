use crate::error::{Error, Result};
use crate::rng::RandomStream;
use std::fmt;

/// Reward noise around each arm's mean. Every variant is 1-sub-Gaussian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NoiseModel {
    /// `N(0, 1)`.
    GaussianUnit,
    /// Zero noise: every pull returns the mean exactly.
    Constant,
    /// `N(0, sigma^2)` with `sigma <= 1`.
    GaussianScaled(f64),
}

impl NoiseModel {
    fn validate(self) -> Result<Self> {
        if let NoiseModel::GaussianScaled(sigma) = self {
            if !(0.0..=1.0).contains(&sigma) {
                return Err(Error::NoiseScale(sigma));
            }
        }
        Ok(self)
    }

    pub fn sigma(self) -> f64 {
        match self {
            NoiseModel::GaussianUnit => 1.0,
            NoiseModel::Constant => 0.0,
            NoiseModel::GaussianScaled(s) => s,
        }
    }
}

/// Whether some arm's mean exceeds the threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

/// What an algorithm answers: an arm it believes qualified, or that none is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Arm(usize),
    None,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Arm(a) => write!(f, "arm:{a}"),
            Verdict::None => f.write_str("none"),
        }
    }
}

/// The ground truth: per-arm means, the threshold `mu0`, and the noise model.
///
/// Arms are 0-based. Construction rejects instances whose best mean equals
/// the threshold, so every valid instance is either positive or negative.
#[derive(Debug, Clone, PartialEq)]
pub struct BanditInstance {
    means: Vec<f64>,
    threshold: f64,
    noise: NoiseModel,
    label: String,
}

impl BanditInstance {
    pub fn new(
        means: Vec<f64>,
        threshold: f64,
        noise: NoiseModel,
        label: impl Into<String>,
    ) -> Result<Self> {
        if means.is_empty() {
            return Err(Error::NoArms);
        }
        if let Some(&value) = means.iter().find(|m| !m.is_finite()) {
            return Err(Error::NonFinite {
                what: "means",
                value,
            });
        }
        if !threshold.is_finite() {
            return Err(Error::NonFinite {
                what: "threshold",
                value: threshold,
            });
        }
        let best = means.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if best == threshold {
            return Err(Error::ThresholdTie { threshold });
        }
        Ok(Self {
            means,
            threshold,
            noise: noise.validate()?,
            label: label.into(),
        })
    }

    pub fn means(&self) -> &[f64] {
        &self.means
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn noise(&self) -> NoiseModel {
        self.noise
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn num_arms(&self) -> usize {
        self.means.len()
    }

    pub fn best_mean(&self) -> f64 {
        self.means.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn classify(&self) -> Sign {
        if self.best_mean() > self.threshold {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    /// Every answer that counts as correct: the arms at or above the threshold
    /// on a positive instance, `{None}` on a negative one.
    pub fn correct_answers(&self) -> Vec<Verdict> {
        match self.classify() {
            Sign::Negative => vec![Verdict::None],
            Sign::Positive => self
                .means
                .iter()
                .enumerate()
                .filter(|(_, &m)| m >= self.threshold)
                .map(|(a, _)| Verdict::Arm(a))
                .collect(),
        }
    }

    pub fn is_correct(&self, verdict: Verdict) -> bool {
        match (self.classify(), verdict) {
            (Sign::Negative, Verdict::None) => true,
            (Sign::Positive, Verdict::Arm(a)) => {
                self.means.get(a).is_some_and(|&m| m >= self.threshold)
            }
            _ => false,
        }
    }

    pub fn sample(&self, arm: usize, stream: &mut RandomStream) -> Result<f64> {
        let mean = *self.means.get(arm).ok_or(Error::ArmOutOfRange {
            arm,
            arms: self.means.len(),
        })?;
        Ok(self.draw(mean, stream))
    }

    /// Unchecked draw for hot loops that already validated `arm`.
    #[inline]
    pub(crate) fn sample_unchecked(&self, arm: usize, stream: &mut RandomStream) -> f64 {
        self.draw(self.means[arm], stream)
    }

    #[inline]
    fn draw(&self, mean: f64, stream: &mut RandomStream) -> f64 {
        match self.noise {
            NoiseModel::Constant => mean,
            NoiseModel::GaussianUnit => mean + stream.standard_normal(),
            NoiseModel::GaussianScaled(s) => mean + s * stream.standard_normal(),
        }
    }
}

pub(crate) fn check_delta(delta: f64) -> Result<f64> {
    if delta > 0.0 && delta < 1.0 {
        Ok(delta)
    } else {
        Err(Error::Delta(delta))
    }
}
