use crate::instance::{BanditInstance, Verdict};
use std::fmt;
use std::time::Duration;

/// How a run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Answer(Verdict),
    /// The pull cap was reached before the algorithm stopped.
    ForcedStop,
}

impl Outcome {
    pub fn verdict(self) -> Option<Verdict> {
        match self {
            Outcome::Answer(v) => Some(v),
            Outcome::ForcedStop => None,
        }
    }

    pub fn is_forced_stop(self) -> bool {
        matches!(self, Outcome::ForcedStop)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Answer(v) => v.fmt(f),
            Outcome::ForcedStop => f.write_str("forced_stop"),
        }
    }
}

/// One trial's result.
///
/// For SEE, `pulls_ee` counts every fresh exploration draw including one
/// parked in the container at termination, while `per_arm_ee` counts only
/// the samples in the exploration history; the gap is the container size.
/// Baselines report all pulls as exploration and leave `pulls_et` at zero.
///
/// Equality ignores `wall_time`.
#[derive(Debug, Clone)]
pub struct RunRecord {
    pub outcome: Outcome,
    pub correct: bool,
    pub pulls_total: u64,
    pub pulls_ee: u64,
    pub pulls_et: u64,
    pub per_arm_ee: Vec<u64>,
    pub per_arm_et: Vec<u64>,
    pub phases: u32,
    pub seed: u64,
    pub wall_time: Duration,
}

impl RunRecord {
    pub(crate) fn finish(
        instance: &BanditInstance,
        outcome: Outcome,
        counts: PullCounts,
        phases: u32,
        seed: u64,
        wall_time: Duration,
    ) -> Self {
        let correct = outcome.verdict().is_some_and(|v| instance.is_correct(v));
        Self {
            outcome,
            correct,
            pulls_total: counts.ee + counts.et,
            pulls_ee: counts.ee,
            pulls_et: counts.et,
            per_arm_ee: counts.per_arm_ee,
            per_arm_et: counts.per_arm_et,
            phases,
            seed,
            wall_time,
        }
    }
}

impl PartialEq for RunRecord {
    fn eq(&self, other: &Self) -> bool {
        self.outcome == other.outcome
            && self.correct == other.correct
            && self.pulls_total == other.pulls_total
            && self.pulls_ee == other.pulls_ee
            && self.pulls_et == other.pulls_et
            && self.per_arm_ee == other.per_arm_ee
            && self.per_arm_et == other.per_arm_et
            && self.phases == other.phases
            && self.seed == other.seed
    }
}

pub(crate) struct PullCounts {
    pub ee: u64,
    pub et: u64,
    pub per_arm_ee: Vec<u64>,
    pub per_arm_et: Vec<u64>,
}

/// Wall-clock timer; reads zero on targets without a monotonic clock.
pub(crate) struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
}

impl Stopwatch {
    pub(crate) fn start() -> Self {
        Self {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
        }
    }

    pub(crate) fn elapsed(&self) -> Duration {
        #[cfg(not(target_arch = "wasm32"))]
        return self.start.elapsed();
        #[cfg(target_arch = "wasm32")]
        return Duration::ZERO;
    }
}
