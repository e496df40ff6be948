//! Comparison algorithms: LUCB_G, HDoC and lilHDoC.
//!
//! LUCB_G and HDoC identify with the anytime union-bound width
//! [`union_width`] at `delta / K`; lilHDoC replaces it by the dyadic radius
//! from [`crate::confidence`] and starts with a uniform warm-up.
//!
//! HDoC's elimination rule (drop an arm once its identification UCB falls
//! below `mu0`) follows one reading of its description; other sources omit
//! elimination. With elimination HDoC can fail to stop on positive
//! instances whose qualified arm gets eliminated early.

use crate::confidence::radius_unchecked;
use crate::error::{Error, Result};
use crate::instance::{check_delta, BanditInstance, Verdict};
use crate::record::{Outcome, PullCounts, RunRecord, Stopwatch};
use crate::rng::{Purpose, RandomStream};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaselineAlgo {
    LucbG,
    Hdoc,
    LilHdoc,
}

impl BaselineAlgo {
    pub fn name(self) -> &'static str {
        match self {
            BaselineAlgo::LucbG => "lucb_g",
            BaselineAlgo::Hdoc => "hdoc",
            BaselineAlgo::LilHdoc => "lil_hdoc",
        }
    }
}

impl fmt::Display for BaselineAlgo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BaselineAlgo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "lucb_g" | "lucbg" => Ok(BaselineAlgo::LucbG),
            "hdoc" => Ok(BaselineAlgo::Hdoc),
            "lil_hdoc" | "lilhdoc" => Ok(BaselineAlgo::LilHdoc),
            _ => Err(Error::Parse(format!("unknown baseline algorithm {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BaselineConfig {
    pub algo: BaselineAlgo,
    /// Uniform pulls per arm before lilHDoC starts adaptive sampling.
    pub warmup_pulls: u64,
    pub forced_cap: u64,
}

impl BaselineConfig {
    pub fn new(algo: BaselineAlgo) -> Self {
        Self {
            algo,
            warmup_pulls: 200,
            forced_cap: 100_000_000,
        }
    }

    pub fn with_cap(mut self, forced_cap: u64) -> Self {
        self.forced_cap = forced_cap;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.algo == BaselineAlgo::LilHdoc && self.warmup_pulls == 0 {
            return Err(Error::Config(
                "lilHDoC needs at least one warm-up pull".into(),
            ));
        }
        if self.forced_cap == 0 {
            return Err(Error::Config("forced_cap must be at least 1".into()));
        }
        Ok(())
    }
}

/// `sqrt(2 ln(4 n^2 / delta) / n)`.
///
/// For 1-sub-Gaussian rewards a deviation of this size at a fixed `n` has
/// probability at most `delta / (2 n^2)`, so over all `n` the failure
/// probability stays below `delta`.
#[inline]
pub fn union_width(n: u64, delta: f64) -> f64 {
    let nf = n as f64;
    (2.0 * (4.0 * nf * nf / delta).ln() / nf).sqrt()
}

pub fn run_baseline(
    instance: &BanditInstance,
    delta: f64,
    cfg: &BaselineConfig,
    seed: u64,
) -> Result<RunRecord> {
    match cfg.algo {
        BaselineAlgo::LucbG => run_lucb_g(instance, delta, cfg, seed),
        BaselineAlgo::Hdoc => run_hdoc(instance, delta, cfg, seed),
        BaselineAlgo::LilHdoc => run_lil_hdoc(instance, delta, cfg, seed),
    }
}

#[derive(Debug, Clone)]
struct Arms {
    count: Vec<u64>,
    sum: Vec<f64>,
}

impl Arms {
    fn new(k: usize) -> Self {
        Self {
            count: vec![0; k],
            sum: vec![0.0; k],
        }
    }

    fn total(&self) -> u64 {
        self.count.iter().sum()
    }

    fn pull(&mut self, arm: usize, instance: &BanditInstance, stream: &mut RandomStream) {
        self.count[arm] += 1;
        self.sum[arm] += instance.sample_unchecked(arm, stream);
    }

    fn mean(&self, arm: usize) -> f64 {
        self.sum[arm] / self.count[arm] as f64
    }

    fn into_record(
        self,
        instance: &BanditInstance,
        outcome: Outcome,
        seed: u64,
        clock: Stopwatch,
    ) -> RunRecord {
        let counts = PullCounts {
            ee: self.total(),
            et: 0,
            per_arm_et: vec![0; self.count.len()],
            per_arm_ee: self.count,
        };
        RunRecord::finish(instance, outcome, counts, 1, seed, clock.elapsed())
    }
}

/// Pull the arm with the highest UCB; stop on the first LCB above `mu0`,
/// or with `None` once every UCB is at or below it.
pub fn run_lucb_g(
    instance: &BanditInstance,
    delta: f64,
    cfg: &BaselineConfig,
    seed: u64,
) -> Result<RunRecord> {
    check_delta(delta)?;
    cfg.validate()?;
    let clock = Stopwatch::start();
    let k = instance.num_arms();
    let mu0 = instance.threshold();
    let d = delta / k as f64;
    let mut stream = RandomStream::new(seed, Purpose::Baseline);
    let mut arms = Arms::new(k);
    let mut ucb = vec![f64::INFINITY; k];
    let mut total = 0u64;

    let outcome = loop {
        let a = argmax_first(&ucb);
        if total >= cfg.forced_cap {
            break Outcome::ForcedStop;
        }
        arms.pull(a, instance, &mut stream);
        total += 1;
        let (m, w) = (arms.mean(a), union_width(arms.count[a], d));
        ucb[a] = m + w;
        if m - w > mu0 {
            break Outcome::Answer(Verdict::Arm(a));
        }
        if ucb.iter().all(|&u| u <= mu0) {
            break Outcome::Answer(Verdict::None);
        }
    };
    Ok(arms.into_record(instance, outcome, seed, clock))
}

pub fn run_hdoc(
    instance: &BanditInstance,
    delta: f64,
    cfg: &BaselineConfig,
    seed: u64,
) -> Result<RunRecord> {
    check_delta(delta)?;
    cfg.validate()?;
    hdoc_core(instance, delta, cfg.forced_cap, 0, union_width, seed)
}

pub fn run_lil_hdoc(
    instance: &BanditInstance,
    delta: f64,
    cfg: &BaselineConfig,
    seed: u64,
) -> Result<RunRecord> {
    check_delta(delta)?;
    cfg.validate()?;
    hdoc_core(
        instance,
        delta,
        cfg.forced_cap,
        cfg.warmup_pulls,
        radius_unchecked,
        seed,
    )
}

/// HDoC loop. Sampling uses the index `mean + sqrt(ln t / (2 N))` over
/// surviving arms, where `t` is the global round. Identification uses
/// `width(N, delta / K)` on both sides.
fn hdoc_core(
    instance: &BanditInstance,
    delta: f64,
    cap: u64,
    warmup: u64,
    width: fn(u64, f64) -> f64,
    seed: u64,
) -> Result<RunRecord> {
    let clock = Stopwatch::start();
    let k = instance.num_arms();
    let mu0 = instance.threshold();
    let d = delta / k as f64;
    let mut stream = RandomStream::new(seed, Purpose::Baseline);
    let mut arms = Arms::new(k);
    let mut active = vec![true; k];
    let mut total = 0u64;

    let decided = 'warm: {
        if warmup == 0 {
            break 'warm None;
        }
        for _ in 0..warmup {
            for a in 0..k {
                if total >= cap {
                    break 'warm Some(Outcome::ForcedStop);
                }
                arms.pull(a, instance, &mut stream);
                total += 1;
            }
        }
        for (a, live) in active.iter_mut().enumerate() {
            let (m, w) = (arms.mean(a), width(arms.count[a], d));
            if m - w > mu0 {
                break 'warm Some(Outcome::Answer(Verdict::Arm(a)));
            }
            if m + w < mu0 {
                *live = false;
            }
        }
        None
    };
    if let Some(outcome) = decided {
        return Ok(arms.into_record(instance, outcome, seed, clock));
    }

    let outcome = loop {
        let mut best: Option<(usize, f64)> = None;
        let ln_t = ((total + 1) as f64).ln();
        for a in (0..k).filter(|&a| active[a]) {
            let idx = match arms.count[a] {
                0 => f64::INFINITY,
                n => arms.mean(a) + (ln_t / (2.0 * n as f64)).sqrt(),
            };
            if best.is_none_or(|(_, v)| idx > v) {
                best = Some((a, idx));
            }
        }
        let Some((a, _)) = best else {
            break Outcome::Answer(Verdict::None);
        };
        if total >= cap {
            break Outcome::ForcedStop;
        }
        arms.pull(a, instance, &mut stream);
        total += 1;
        let (m, w) = (arms.mean(a), width(arms.count[a], d));
        if m - w > mu0 {
            break Outcome::Answer(Verdict::Arm(a));
        }
        if m + w < mu0 {
            active[a] = false;
        }
    };
    Ok(arms.into_record(instance, outcome, seed, clock))
}

#[inline]
fn argmax_first(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v > values[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::NoiseModel;

    fn constant(means: &[f64]) -> BanditInstance {
        BanditInstance::new(means.to_vec(), 0.0, NoiseModel::Constant, "").unwrap()
    }

    /// First n where `pred(n)` holds.
    fn scan(pred: impl Fn(u64) -> bool) -> u64 {
        (1..).find(|&n| pred(n)).unwrap()
    }

    fn cfg(algo: BaselineAlgo) -> BaselineConfig {
        BaselineConfig::new(algo)
    }

    #[test]
    fn width_values() {
        // 2 ln(4 / 0.3) = 5.1805...
        assert!((union_width(1, 0.3) - (2.0f64 * (4.0f64 / 0.3).ln()).sqrt()).abs() < 1e-15);
        assert!(union_width(100, 0.01) < union_width(10, 0.01));
    }

    #[test]
    fn lucb_g_constant_single_arm() {
        let stop = scan(|n| 1.0 - union_width(n, 0.3) > 0.0);
        assert_eq!(stop, 17);
        let r = run_lucb_g(&constant(&[1.0]), 0.3, &cfg(BaselineAlgo::LucbG), 0).unwrap();
        assert_eq!(r.outcome, Outcome::Answer(Verdict::Arm(0)));
        assert_eq!(r.pulls_total, stop);

        let stop = scan(|n| -1.0 + union_width(n, 0.3) <= 0.0);
        let r = run_lucb_g(&constant(&[-1.0]), 0.3, &cfg(BaselineAlgo::LucbG), 0).unwrap();
        assert_eq!(r.outcome, Outcome::Answer(Verdict::None));
        assert_eq!(r.pulls_total, stop);
        assert_eq!(r.pulls_et, 0);
    }

    #[test]
    fn hdoc_constant_examples() {
        let r = run_hdoc(&constant(&[1.0]), 0.3, &cfg(BaselineAlgo::Hdoc), 0).unwrap();
        assert_eq!(r.outcome, Outcome::Answer(Verdict::Arm(0)));

        let r = run_hdoc(&constant(&[0.8, -0.8]), 0.3, &cfg(BaselineAlgo::Hdoc), 0).unwrap();
        assert_eq!(r.outcome, Outcome::Answer(Verdict::Arm(0)));
        let arm0 = scan(|n| 0.8 - union_width(n, 0.15) > 0.0);
        assert_eq!(arm0, 32);
        assert_eq!(r.per_arm_ee[0], arm0);
        // Arm 1 needs the same count to be eliminated, it never gets there.
        assert!(r.per_arm_ee[1] < arm0);
    }

    #[test]
    fn hdoc_eliminates_then_answers_none() {
        let r = run_hdoc(&constant(&[-0.8, -0.8]), 0.3, &cfg(BaselineAlgo::Hdoc), 0).unwrap();
        assert_eq!(r.outcome, Outcome::Answer(Verdict::None));
        let each = scan(|n| -0.8 + union_width(n, 0.15) < 0.0);
        assert_eq!(r.per_arm_ee, vec![each, each]);
    }

    #[test]
    fn lil_hdoc_warmup() {
        let inst = BanditInstance::new(vec![0.25; 10], 0.5, NoiseModel::GaussianUnit, "").unwrap();
        let r = run_lil_hdoc(&inst, 0.01, &cfg(BaselineAlgo::LilHdoc), 5).unwrap();
        assert!(r.pulls_total >= 2000);
        assert!(r.per_arm_ee.iter().all(|&n| n >= 200));

        // LIL LCB at N = 200 is 1 - U(200, 0.3) > 0: stop right after warm-up.
        assert!(1.0 - radius_unchecked(200, 0.3) > 0.0);
        let r = run_lil_hdoc(&constant(&[1.0]), 0.3, &cfg(BaselineAlgo::LilHdoc), 0).unwrap();
        assert_eq!(r.outcome, Outcome::Answer(Verdict::Arm(0)));
        assert_eq!(r.pulls_total, 200);

        let small = BaselineConfig {
            warmup_pulls: 3,
            ..cfg(BaselineAlgo::LilHdoc)
        };
        let stop = scan(|n| n >= 3 && 1.0 - radius_unchecked(n, 0.3) > 0.0);
        let r = run_lil_hdoc(&constant(&[1.0]), 0.3, &small, 0).unwrap();
        assert_eq!(r.pulls_total, stop);

        let zero = BaselineConfig {
            warmup_pulls: 0,
            ..cfg(BaselineAlgo::LilHdoc)
        };
        assert!(run_lil_hdoc(&constant(&[1.0]), 0.3, &zero, 0).is_err());
    }

    #[test]
    fn caps_are_respected() {
        let inst =
            BanditInstance::new(vec![0.55, 0.5], 0.5 - 1e-9, NoiseModel::GaussianUnit, "").unwrap();
        for algo in [
            BaselineAlgo::LucbG,
            BaselineAlgo::Hdoc,
            BaselineAlgo::LilHdoc,
        ] {
            let r = run_baseline(&inst, 0.01, &cfg(algo).with_cap(25), 1).unwrap();
            assert_eq!(r.outcome, Outcome::ForcedStop, "{algo}");
            assert_eq!(r.pulls_total, 25, "{algo}");
        }
    }

    #[test]
    fn lucb_and_hdoc_coincide_on_one_arm() {
        for seed in 0..50 {
            for mean in [0.9, 0.2, 0.6] {
                let inst =
                    BanditInstance::new(vec![mean], 0.5, NoiseModel::GaussianUnit, "").unwrap();
                let a = run_lucb_g(&inst, 0.05, &cfg(BaselineAlgo::LucbG), seed).unwrap();
                let b = run_hdoc(&inst, 0.05, &cfg(BaselineAlgo::Hdoc), seed).unwrap();
                assert_eq!(a, b, "seed {seed}, mean {mean}");
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for algo in [
            BaselineAlgo::LucbG,
            BaselineAlgo::Hdoc,
            BaselineAlgo::LilHdoc,
        ] {
            assert_eq!(algo.name().parse::<BaselineAlgo>().unwrap(), algo);
        }
        assert!("tas".parse::<BaselineAlgo>().is_err());
    }
}
