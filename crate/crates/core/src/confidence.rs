//! The dyadic LIL-style confidence radius and a Monte-Carlo check of the
//! concentration event behind it.
//!
//! For `t >= 1` samples at confidence `delta`,
//!
//! ```text
//! j = max(ceil(log2 t), 1)
//! U(t, delta) = sqrt(2 * 2^j * ln(2 j^2 / delta)) / t
//! ```
//!
//! The numerator is constant on each bracket `t in (2^(j-1), 2^j]`.

use crate::error::{Error, Result};
use crate::instance::check_delta;
use crate::rng::RandomStream;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `max(ceil(log2 t), 1)`, computed from the bit length of `t - 1`.
pub fn ceil_log2_plus(t: u64) -> Result<u32> {
    if t == 0 {
        return Err(Error::ZeroCount);
    }
    Ok(bracket(t))
}

#[inline]
fn bracket(t: u64) -> u32 {
    (u64::BITS - (t - 1).leading_zeros()).max(1)
}

/// A validated `(t, delta)` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusQuery {
    t: u64,
    delta: f64,
}

impl RadiusQuery {
    pub fn new(t: u64, delta: f64) -> Result<Self> {
        if t == 0 {
            return Err(Error::ZeroCount);
        }
        Ok(Self {
            t,
            delta: check_delta(delta)?,
        })
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }
}

pub fn radius(q: RadiusQuery) -> f64 {
    radius_unchecked(q.t, q.delta)
}

/// `U(t, delta)` without validation. Callers guarantee `t >= 1`; `delta` may
/// underflow to zero deep into a schedule, which yields `+inf`.
#[inline]
pub fn radius_unchecked(t: u64, delta: f64) -> f64 {
    let j = bracket(t);
    (boundary_squared(j, delta)).sqrt() / t as f64
}

/// `2 * 2^j * ln(2 j^2 / delta)`: the squared partial-sum boundary for bracket `j`.
#[inline]
fn boundary_squared(j: u32, delta: f64) -> f64 {
    let jf = j as f64;
    2.0 * (j as f64).exp2() * (2.0 * jf * jf / delta).ln()
}

/// Fraction of `sequences` zero-mean `N(0, sigma^2)` paths of length `horizon`
/// on which some partial sum satisfies
/// `|S_t| > sqrt(2 sigma^2 2^j ln(2 j^2 / delta))`.
///
/// The boundary is constant within a bracket, so each path is checked once
/// per bracket against the running maximum of `|S_t|` over it. Paths use
/// independent child streams of `stream`.
pub fn simulate_concentration_violation(
    sigma: f64,
    delta: f64,
    horizon: u64,
    sequences: u64,
    stream: &RandomStream,
) -> Result<ViolationReport> {
    check_delta(delta)?;
    if horizon < 2 {
        return Err(Error::Config(format!(
            "horizon must be at least 2, got {horizon}"
        )));
    }
    if sequences == 0 {
        return Err(Error::ZeroCount);
    }
    if !(sigma.is_finite() && sigma >= 0.0) {
        return Err(Error::Config(format!(
            "sigma must be finite and non-negative, got {sigma}"
        )));
    }

    let path = |i: u64| {
        let mut s = stream.child(i);
        path_crosses_by_bracket(sigma, delta, horizon, &mut s)
    };
    #[cfg(feature = "parallel")]
    let violations = (0..sequences).into_par_iter().filter(|&i| path(i)).count() as u64;
    #[cfg(not(feature = "parallel"))]
    let violations = (0..sequences).filter(|&i| path(i)).count() as u64;

    Ok(ViolationReport {
        delta,
        horizon,
        sequences,
        violations,
    })
}

fn path_crosses_by_bracket(sigma: f64, delta: f64, horizon: u64, s: &mut RandomStream) -> bool {
    let var = sigma * sigma;
    let mut sum = 0.0f64;
    let mut peak = 0.0f64;
    let mut j = 1u32;
    for t in 1..=horizon {
        sum += sigma * s.standard_normal();
        peak = peak.max(sum.abs());
        // t closes bracket j when t == 2^j, or at the horizon.
        let closes = t == (1u64 << j) || t == horizon;
        if closes {
            if peak * peak > var * boundary_squared(j, delta) {
                return true;
            }
            peak = 0.0;
            if t == (1u64 << j) {
                j += 1;
            }
        }
    }
    false
}

/// Outcome of [`simulate_concentration_violation`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViolationReport {
    pub delta: f64,
    pub horizon: u64,
    pub sequences: u64,
    pub violations: u64,
}

impl ViolationReport {
    pub fn fraction(&self) -> f64 {
        self.violations as f64 / self.sequences as f64
    }

    /// Binomial standard error of [`fraction`](Self::fraction).
    pub fn standard_error(&self) -> f64 {
        let p = self.fraction();
        (p * (1.0 - p) / self.sequences as f64).sqrt()
    }

    /// `pi^2 delta / 6`.
    pub fn bound(&self) -> f64 {
        std::f64::consts::PI.powi(2) * self.delta / 6.0
    }
}
