//! Inverse-squared-gap hardness quantities and lower-bound calculators.
//!
//! With means sorted so that `mu_1 >= ... >= mu_K` and gaps
//! `D(i, j) = |mu_i - mu_j|` (index 0 is the threshold):
//!
//! | field    | definition                                   |
//! |----------|----------------------------------------------|
//! | `h`      | `2 / D(0,1)^2`                               |
//! | `h1`     | `sum_{a>=2} 2 / D(1,a)^2`                    |
//! | `h0`     | `sum_{mu_a >= mu0} 2 / D(0,a)^2`             |
//! | `h1_neg` | `sum_a 2 / D(0,a)^2`                         |
//! | `h1_low` | `sum_{mu_a < mu0} 2 / D(1,a)^2`              |
//! | `h1_pos` | `sum_a 2 / max(D(0,a)^2, D(1,a)^2)`          |
//! | `h1_bai` | `h + h1`                                     |
//!
//! A zero gap makes its term, and the sum, `+inf`. The lower bounds carry the
//! explicit constants of their change-of-measure proofs; they are annotations
//! for experiments, not tight values.

use crate::error::{Error, Result};
use crate::instance::{check_delta, BanditInstance, Sign};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HardnessProfile {
    pub h: f64,
    pub h1: f64,
    pub h0: f64,
    pub h1_neg: f64,
    pub h1_low: f64,
    pub h1_pos: f64,
    pub h1_bai: f64,
}

fn sorted_desc(instance: &BanditInstance) -> Vec<f64> {
    let mut m = instance.means().to_vec();
    m.sort_by(|a, b| b.total_cmp(a));
    m
}

fn inv2(gap: f64) -> f64 {
    2.0 / (gap * gap)
}

// `Iterator::sum` of no floats is -0.0.
fn total(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(0.0, |a, b| a + b)
}

pub fn profile(instance: &BanditInstance) -> HardnessProfile {
    let m = sorted_desc(instance);
    let mu0 = instance.threshold();
    let best = m[0];
    let d0 = |x: f64| (x - mu0).abs();
    let d1 = |x: f64| (best - x).abs();

    let h = inv2(d0(best));
    let h1 = total(m[1..].iter().map(|&x| inv2(d1(x))));
    let h0 = total(m.iter().filter(|&&x| x >= mu0).map(|&x| inv2(d0(x))));
    let h1_neg = total(m.iter().map(|&x| inv2(d0(x))));
    let h1_low = total(m.iter().filter(|&&x| x < mu0).map(|&x| inv2(d1(x))));
    let h1_pos = total(m.iter().map(|&x| inv2(d0(x).max(d1(x)))));
    HardnessProfile {
        h,
        h1,
        h0,
        h1_neg,
        h1_low,
        h1_pos,
        h1_bai: h + h1,
    }
}

/// `kl(delta, 1 - delta) = (1 - 2 delta) ln((1 - delta) / delta)`.
pub fn kl_bernoulli(delta: f64) -> Result<f64> {
    check_delta(delta)?;
    Ok(delta * (delta / (1.0 - delta)).ln() + (1.0 - delta) * ((1.0 - delta) / delta).ln())
}

/// `kl(delta, 1 - delta) * h1_neg` for negative Gaussian instances.
pub fn lower_bound_negative(instance: &BanditInstance, delta: f64) -> Result<f64> {
    if instance.classify() != Sign::Negative {
        return Err(Error::WrongInstanceSign {
            expected: "negative",
        });
    }
    Ok(kl_bernoulli(delta)? * profile(instance).h1_neg)
}

/// `2 kl(delta, 1 - delta) / D(0,1)^2` for positive instances.
pub fn lower_bound_positive_delta(instance: &BanditInstance, delta: f64) -> Result<f64> {
    if instance.classify() != Sign::Positive {
        return Err(Error::WrongInstanceSign {
            expected: "positive",
        });
    }
    let gap = instance.best_mean() - instance.threshold();
    Ok(2.0 * kl_bernoulli(delta)? / (gap * gap))
}

/// A bound together with whether its hypothesis held.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Annotated {
    pub value: f64,
    pub hypothesis_holds: bool,
}

/// `max(0, (1/64) (-1/D(1,2)^2 + sum_{a>=3} 1/D(1,a)^2))`, the
/// delta-independent bound for some permutation of the means.
///
/// Requires exactly one arm strictly above the threshold; otherwise returns
/// zero with `hypothesis_holds = false`.
pub fn lower_bound_positive_free(instance: &BanditInstance) -> Annotated {
    let mu0 = instance.threshold();
    let above = instance.means().iter().filter(|&&x| x > mu0).count();
    if above != 1 {
        return Annotated {
            value: 0.0,
            hypothesis_holds: false,
        };
    }
    let m = sorted_desc(instance);
    let inv = |x: f64| 1.0 / ((m[0] - x) * (m[0] - x));
    let raw = match m.len() {
        1 => 0.0,
        _ => (-inv(m[1]) + m[2..].iter().map(|&x| inv(x)).sum::<f64>()) / 64.0,
    };
    Annotated {
        value: raw.max(0.0),
        hypothesis_holds: true,
    }
}

/// Proof constant `M1 = 8 * 1536` of the suboptimal-arm bound.
pub const SUBOPTIMAL_M1: f64 = 8.0 * 1536.0;

/// `ln(1 / D(0,1)^2) / (M1 D(1,arm)^2)`.
///
/// The underlying statement needs a small enough gap and `delta < e^-8`;
/// neither is checked, so the value is regime-conditional.
pub fn lower_bound_suboptimal_pulls(instance: &BanditInstance, arm: usize) -> Result<f64> {
    let k = instance.num_arms();
    if arm >= k {
        return Err(Error::ArmOutOfRange { arm, arms: k });
    }
    if instance.classify() != Sign::Positive {
        return Err(Error::WrongInstanceSign {
            expected: "positive",
        });
    }
    let mu0 = instance.threshold();
    let means = instance.means();
    let above = means.iter().filter(|&&x| x > mu0).count();
    if means[arm] > mu0 {
        return Err(Error::QualifiedArm(arm));
    }
    if above != 1 {
        return Err(Error::NotUniquelyQualified(above));
    }
    let best = instance.best_mean();
    let d01 = best - mu0;
    let d1a = best - means[arm];
    Ok((1.0 / (d01 * d01)).ln() / (SUBOPTIMAL_M1 * d1a * d1a))
}
