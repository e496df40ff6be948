//! Sequential Explore-Exploit (SEE).
//!
//! Each phase `k` runs a UCB-driven exploration at tolerance `delta_k` over a
//! history shared by all phases. If exploration nominates a candidate arm,
//! an exploitation period re-tests it on fresh samples at the target
//! tolerance `delta`. A `None` answer from exploration is trusted only once
//! `delta_k < delta / 3`.
//!
//! When exploration nominates an arm, the sample that triggered the
//! nomination is parked in a per-arm container instead of the history. The
//! next time that arm is chosen the parked sample is consumed without a new
//! pull, so each arm's exploration samples stay a gap-free sequence.

use crate::confidence::radius_unchecked;
use crate::error::{Error, Result};
use crate::instance::{check_delta, BanditInstance, Verdict};
use crate::record::{Outcome, PullCounts, RunRecord, Stopwatch};
use crate::rng::{Purpose, RandomStream};

/// Tunables of SEE.
///
/// Schedules are geometric: `delta_k = delta_base^k`, `alpha_k = alpha_base^k`,
/// `beta_k = beta_scale * beta_base^k`. Budgets per phase are
///
/// ```text
/// T_ee(k) = budget_coeff * (c + 1)^2 * K * beta_k * ln(4 K / delta_k)
/// T_et(k) = budget_coeff * beta_k * ln(4 alpha_k K / delta)
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct SeeConfig {
    /// LCB widening factor, `> 1`.
    pub c: f64,
    pub delta_base: f64,
    pub alpha_base: f64,
    pub beta_base: f64,
    pub beta_scale: f64,
    pub budget_coeff: f64,
    /// Total pulls after which a run is abandoned as a forced stop.
    pub forced_cap: u64,
    /// Keep full sample lists in the histories (for invariant tests).
    pub retain_samples: bool,
}

impl Default for SeeConfig {
    fn default() -> Self {
        Self {
            c: 1.01,
            delta_base: 1.0 / 3.0,
            alpha_base: 5.0,
            beta_base: 2.0,
            beta_scale: 1.0,
            budget_coeff: 1000.0,
            forced_cap: 100_000_000,
            retain_samples: false,
        }
    }
}

impl SeeConfig {
    /// The setting used for the published experiments: `beta_k = 2^k / 4`.
    pub fn paper() -> Self {
        Self {
            beta_scale: 0.25,
            ..Self::default()
        }
    }

    pub fn with_cap(mut self, forced_cap: u64) -> Self {
        self.forced_cap = forced_cap;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if !(self.c.is_finite() && self.c > 1.0) {
            return bad(format!("c must exceed 1, got {}", self.c));
        }
        if !(self.delta_base > 0.0 && self.delta_base < 1.0) {
            return bad(format!(
                "delta_base must lie in (0, 1), got {}",
                self.delta_base
            ));
        }
        if !(self.alpha_base.is_finite() && self.alpha_base > 1.0) {
            return bad(format!("alpha_base must exceed 1, got {}", self.alpha_base));
        }
        // beta_{k+1} >= 2 beta_k
        if !(self.beta_base.is_finite() && self.beta_base >= 2.0) {
            return bad(format!(
                "beta_base must be at least 2, got {}",
                self.beta_base
            ));
        }
        if !(self.beta_scale.is_finite() && self.beta_scale > 0.0) {
            return bad(format!(
                "beta_scale must be positive, got {}",
                self.beta_scale
            ));
        }
        if !(self.budget_coeff.is_finite() && self.budget_coeff > 0.0) {
            return bad(format!(
                "budget_coeff must be positive, got {}",
                self.budget_coeff
            ));
        }
        if self.forced_cap == 0 {
            return bad("forced_cap must be at least 1".into());
        }
        let inv_alpha_sum: f64 = (1..=64).map(|k| self.alpha_base.powi(-k)).sum();
        if inv_alpha_sum > 0.25 + 1e-12 {
            return bad(format!(
                "sum of 1/alpha_k is {inv_alpha_sum}, must not exceed 1/4"
            ));
        }
        Ok(())
    }
}

/// Schedule values of one phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSchedule {
    pub k: u32,
    pub delta_k: f64,
    pub alpha_k: f64,
    pub beta_k: f64,
    pub t_ee: f64,
    pub t_et: f64,
    /// A budget exceeded `forced_cap` (or overflowed) and was clamped to it.
    pub clamped: bool,
}

pub fn schedule(k: u32, arms: usize, delta: f64, cfg: &SeeConfig) -> Result<PhaseSchedule> {
    if k == 0 {
        return Err(Error::Config("phase index starts at 1".into()));
    }
    if arms == 0 {
        return Err(Error::NoArms);
    }
    check_delta(delta)?;
    let kf = arms as f64;
    let exp = k as i32;
    let delta_k = cfg.delta_base.powi(exp);
    let alpha_k = cfg.alpha_base.powi(exp);
    let beta_k = cfg.beta_scale * cfg.beta_base.powi(exp);
    let t_ee = cfg.budget_coeff * (cfg.c + 1.0).powi(2) * kf * beta_k * (4.0 * kf / delta_k).ln();
    let t_et = cfg.budget_coeff * beta_k * (4.0 * alpha_k * kf / delta).ln();

    let cap = cfg.forced_cap as f64;
    let mut clamped = false;
    let mut clamp = |v: f64| {
        if v.is_nan() || v > cap {
            clamped = true;
            cap
        } else {
            v
        }
    };
    let (t_ee, t_et) = (clamp(t_ee), clamp(t_et));
    Ok(PhaseSchedule {
        k,
        delta_k,
        alpha_k,
        beta_k,
        t_ee,
        t_et,
        clamped,
    })
}

/// Sufficient statistics of one arm's samples in one history.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ArmHistory {
    count: u64,
    sum: f64,
    last_value: Option<f64>,
    samples: Option<Vec<f64>>,
}

impl ArmHistory {
    fn new(retain: bool) -> Self {
        Self {
            samples: retain.then(Vec::new),
            ..Self::default()
        }
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn sum(&self) -> f64 {
        self.sum
    }

    pub fn last_value(&self) -> Option<f64> {
        self.last_value
    }

    pub fn mean(&self) -> Option<f64> {
        (self.count > 0).then(|| self.sum / self.count as f64)
    }

    /// Full sample list, when retained.
    pub fn samples(&self) -> Option<&[f64]> {
        self.samples.as_deref()
    }

    fn push(&mut self, x: f64) {
        self.count += 1;
        self.sum += x;
        self.last_value = Some(x);
        if let Some(s) = &mut self.samples {
            s.push(x);
        }
    }

    fn retract_last(&mut self) -> Option<f64> {
        let x = self.last_value.take()?;
        self.count -= 1;
        self.sum -= x;
        if let Some(s) = &mut self.samples {
            s.pop();
            self.last_value = s.last().copied();
        }
        Some(x)
    }

    /// `mean + U(N, delta)`; `+inf` while unvisited.
    fn ucb(&self, delta: f64) -> f64 {
        match self.count {
            0 => f64::INFINITY,
            n => self.sum / n as f64 + radius_unchecked(n, delta),
        }
    }

    /// `mean - c * U(N, delta)`; `-inf` while unvisited.
    fn lcb(&self, delta: f64, c: f64) -> f64 {
        match self.count {
            0 => f64::NEG_INFINITY,
            n => self.sum / n as f64 - c * radius_unchecked(n, delta),
        }
    }
}

/// Per-arm parking slot for at most one exploration sample.
#[derive(Debug, Clone, PartialEq)]
pub struct Container {
    held: Vec<Option<f64>>,
}

impl Container {
    pub fn new(arms: usize) -> Self {
        Self {
            held: vec![None; arms],
        }
    }

    pub fn len(&self) -> usize {
        self.held.iter().filter(|h| h.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.held.iter().all(Option::is_none)
    }

    pub fn capacity(&self) -> usize {
        self.held.len()
    }

    pub fn get(&self, arm: usize) -> Option<f64> {
        self.held.get(arm).copied().flatten()
    }

    pub fn holds(&self, arm: usize) -> bool {
        self.get(arm).is_some()
    }

    pub fn take(&mut self, arm: usize) -> Option<f64> {
        self.held.get_mut(arm).and_then(Option::take)
    }

    /// Parks `x` for `arm`. Returns the sample it displaced, which SEE's
    /// control flow never produces.
    pub fn put(&mut self, arm: usize, x: f64) -> Option<f64> {
        self.held[arm].replace(x)
    }
}

/// A sample produced by [`sample_with_container`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Draw {
    pub value: f64,
    /// `true` for a new pull, `false` when the parked sample was consumed.
    pub fresh: bool,
}

/// Returns the parked sample of `arm` if there is one, otherwise pulls.
pub fn sample_with_container(
    arm: usize,
    q: &mut Container,
    instance: &BanditInstance,
    stream: &mut RandomStream,
) -> Result<Draw> {
    if arm >= instance.num_arms() {
        return Err(Error::ArmOutOfRange {
            arm,
            arms: instance.num_arms(),
        });
    }
    Ok(match q.take(arm) {
        Some(value) => Draw {
            value,
            fresh: false,
        },
        None => Draw {
            value: instance.sample_unchecked(arm, stream),
            fresh: true,
        },
    })
}

/// Mutable state of one SEE run.
#[derive(Debug, Clone)]
pub struct SeeState {
    pub hee: Vec<ArmHistory>,
    pub het: Vec<ArmHistory>,
    pub q: Container,
    pub tau_ee: u64,
    pub tau_et: u64,
    pub phase: u32,
    /// Every fresh exploration draw per arm, in order (retained runs only).
    fresh_ee: Option<Vec<Vec<f64>>>,
    ucb: Vec<f64>,
}

impl SeeState {
    pub fn new(arms: usize, retain_samples: bool) -> Self {
        Self {
            hee: (0..arms).map(|_| ArmHistory::new(retain_samples)).collect(),
            het: (0..arms).map(|_| ArmHistory::new(retain_samples)).collect(),
            q: Container::new(arms),
            tau_ee: 0,
            tau_et: 0,
            phase: 0,
            fresh_ee: retain_samples.then(|| vec![Vec::new(); arms]),
            ucb: vec![f64::INFINITY; arms],
        }
    }

    pub fn num_arms(&self) -> usize {
        self.hee.len()
    }

    pub fn total_pulls(&self) -> u64 {
        self.tau_ee + self.tau_et
    }

    pub fn history_size(&self) -> u64 {
        self.hee.iter().map(ArmHistory::count).sum()
    }

    /// Fresh exploration draws of `arm` in pull order, when retained.
    pub fn fresh_draws(&self, arm: usize) -> Option<&[f64]> {
        self.fresh_ee.as_ref().map(|f| f[arm].as_slice())
    }
}

/// Result of one exploration period.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExplorationOutcome {
    /// The just-pulled arm's widened LCB cleared the threshold.
    Candidate(usize),
    /// Every arm's UCB is at or below the threshold.
    NoneAnswer,
    /// The phase budget ran out.
    NotComplete,
    /// The run-level pull cap was reached.
    ForcedStop,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exploration {
    pub outcome: ExplorationOutcome,
    /// Fresh pulls taken during this call.
    pub pulls: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExploitOutcome {
    Qualified,
    Unqualified,
    ForcedStop,
}

/// Hooks into a running SEE trial, used by the invariant audit.
pub trait SeeObserver {
    fn after_explore_step(&mut self, _state: &SeeState) {}
    fn after_phase(&mut self, _state: &SeeState, _schedule: &PhaseSchedule) {}
}

/// Observer that does nothing.
pub struct Unobserved;

impl SeeObserver for Unobserved {}

/// Runs exploration until a stopping branch fires.
///
/// Branches are tested after each step in the order: budget reached, every
/// UCB at or below `mu0`, LCB of the pulled arm above `mu0`.
#[allow(clippy::too_many_arguments)]
pub fn explore(
    state: &mut SeeState,
    instance: &BanditInstance,
    delta_k: f64,
    c: f64,
    budget: f64,
    forced_cap: u64,
    stream: &mut RandomStream,
    observer: &mut dyn SeeObserver,
) -> Result<Exploration> {
    let arms = instance.num_arms();
    if state.num_arms() != arms {
        return Err(Error::Config(format!(
            "state has {} arms, instance has {arms}",
            state.num_arms()
        )));
    }
    let mu0 = instance.threshold();
    let delta = delta_k / arms as f64;
    for (u, h) in state.ucb.iter_mut().zip(&state.hee) {
        *u = h.ucb(delta);
    }

    let start = state.tau_ee;
    let done = |state: &SeeState, outcome| Exploration {
        outcome,
        pulls: state.tau_ee - start,
    };
    loop {
        let arm = argmax_first(&state.ucb);
        if !state.q.holds(arm) && state.total_pulls() >= forced_cap {
            return Ok(done(state, ExplorationOutcome::ForcedStop));
        }
        let draw = sample_with_container(arm, &mut state.q, instance, stream)?;
        if draw.fresh {
            state.tau_ee += 1;
            if let Some(f) = &mut state.fresh_ee {
                f[arm].push(draw.value);
            }
        }
        state.hee[arm].push(draw.value);
        state.ucb[arm] = state.hee[arm].ucb(delta);

        let outcome = if state.tau_ee as f64 >= budget {
            Some(ExplorationOutcome::NotComplete)
        } else if state.ucb.iter().all(|&u| u <= mu0) {
            Some(ExplorationOutcome::NoneAnswer)
        } else if state.hee[arm].lcb(delta, c) > mu0 {
            let x = state.hee[arm]
                .retract_last()
                .expect("sample was just appended");
            let displaced = state.q.put(arm, x);
            debug_assert!(
                displaced.is_none(),
                "container slot {arm} already held a sample"
            );
            state.ucb[arm] = state.hee[arm].ucb(delta);
            Some(ExplorationOutcome::Candidate(arm))
        } else {
            None
        };

        debug_assert_eq!(
            state.q.len() as u64 + state.history_size(),
            state.tau_ee,
            "container plus history must equal exploration pulls"
        );
        observer.after_explore_step(state);
        if let Some(outcome) = outcome {
            return Ok(done(state, outcome));
        }
    }
}

/// Re-tests `arm` on exploitation samples at tolerance `delta / (K alpha_k)`
/// while its cumulative exploitation count is below `budget`.
#[allow(clippy::too_many_arguments)]
pub fn exploit(
    state: &mut SeeState,
    arm: usize,
    instance: &BanditInstance,
    delta: f64,
    alpha_k: f64,
    budget: f64,
    forced_cap: u64,
    stream: &mut RandomStream,
) -> Result<ExploitOutcome> {
    let arms = instance.num_arms();
    if arm >= arms || arm >= state.num_arms() {
        return Err(Error::ArmOutOfRange { arm, arms });
    }
    let mu0 = instance.threshold();
    let delta = delta / (arms as f64 * alpha_k);
    while (state.het[arm].count() as f64) < budget {
        if state.total_pulls() >= forced_cap {
            return Ok(ExploitOutcome::ForcedStop);
        }
        let x = instance.sample_unchecked(arm, stream);
        let h = &mut state.het[arm];
        h.push(x);
        state.tau_et += 1;
        if h.sum / h.count as f64 - radius_unchecked(h.count, delta) > mu0 {
            return Ok(ExploitOutcome::Qualified);
        }
    }
    Ok(ExploitOutcome::Unqualified)
}

pub fn run_see(
    instance: &BanditInstance,
    delta: f64,
    cfg: &SeeConfig,
    seed: u64,
) -> Result<RunRecord> {
    run_see_observed(instance, delta, cfg, seed, &mut Unobserved)
}

pub fn run_see_observed(
    instance: &BanditInstance,
    delta: f64,
    cfg: &SeeConfig,
    seed: u64,
    observer: &mut dyn SeeObserver,
) -> Result<RunRecord> {
    let (record, _) = run_see_with_state(instance, delta, cfg, seed, observer)?;
    Ok(record)
}

/// Like [`run_see_observed`], also returning the final state.
pub fn run_see_with_state(
    instance: &BanditInstance,
    delta: f64,
    cfg: &SeeConfig,
    seed: u64,
    observer: &mut dyn SeeObserver,
) -> Result<(RunRecord, SeeState)> {
    check_delta(delta)?;
    cfg.validate()?;
    let clock = Stopwatch::start();
    let arms = instance.num_arms();
    let mut state = SeeState::new(arms, cfg.retain_samples);
    let mut ee_stream = RandomStream::new(seed, Purpose::Exploration);
    let mut et_stream = RandomStream::new(seed, Purpose::Exploitation);

    let outcome = loop {
        state.phase += 1;
        let sched = schedule(state.phase, arms, delta, cfg)?;
        let ex = explore(
            &mut state,
            instance,
            sched.delta_k,
            cfg.c,
            sched.t_ee,
            cfg.forced_cap,
            &mut ee_stream,
            observer,
        )?;
        let decided = match ex.outcome {
            ExplorationOutcome::ForcedStop => Some(Outcome::ForcedStop),
            ExplorationOutcome::Candidate(arm) => {
                match exploit(
                    &mut state,
                    arm,
                    instance,
                    delta,
                    sched.alpha_k,
                    sched.t_et,
                    cfg.forced_cap,
                    &mut et_stream,
                )? {
                    ExploitOutcome::Qualified => Some(Outcome::Answer(Verdict::Arm(arm))),
                    ExploitOutcome::ForcedStop => Some(Outcome::ForcedStop),
                    ExploitOutcome::Unqualified => None,
                }
            }
            ExplorationOutcome::NoneAnswer if sched.delta_k < delta / 3.0 => {
                Some(Outcome::Answer(Verdict::None))
            }
            ExplorationOutcome::NoneAnswer | ExplorationOutcome::NotComplete => None,
        };
        observer.after_phase(&state, &sched);
        if let Some(outcome) = decided {
            break outcome;
        }
    };

    let counts = PullCounts {
        ee: state.tau_ee,
        et: state.tau_et,
        per_arm_ee: state.hee.iter().map(ArmHistory::count).collect(),
        per_arm_et: state.het.iter().map(ArmHistory::count).collect(),
    };
    let record = RunRecord::finish(
        instance,
        outcome,
        counts,
        state.phase,
        seed,
        clock.elapsed(),
    );
    Ok((record, state))
}

/// Index of the largest value; ties go to the lowest index.
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

/// Counts violations of SEE's certainty invariants.
///
/// After every exploration step: at most one parked sample per arm, and
/// parked plus history samples equal `tau_ee`. After every phase `k`:
/// `tau_ee <= ceil(T_ee(k))` and `tau_et <= sum_{p<=k} ceil(T_et(p))`.
/// Budgets are real-valued while pulls are whole, and a loop that pulls
/// before testing `t >= T` first stops at `ceil(T)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InvariantAudit {
    pub steps: u64,
    pub phases: u64,
    pub container_overflow: u64,
    pub accounting: u64,
    pub ee_budget: u64,
    pub et_budget: u64,
    et_allowance: u64,
}

impl InvariantAudit {
    pub fn violations(&self) -> u64 {
        self.container_overflow + self.accounting + self.ee_budget + self.et_budget
    }
}

impl SeeObserver for InvariantAudit {
    fn after_explore_step(&mut self, state: &SeeState) {
        self.steps += 1;
        if state.q.len() > state.q.capacity() || state.q.capacity() != state.num_arms() {
            self.container_overflow += 1;
        }
        if state.q.len() as u64 + state.history_size() != state.tau_ee {
            self.accounting += 1;
        }
    }

    fn after_phase(&mut self, state: &SeeState, schedule: &PhaseSchedule) {
        self.phases += 1;
        self.et_allowance += schedule.t_et.ceil() as u64;
        if state.tau_ee > schedule.t_ee.ceil() as u64 {
            self.ee_budget += 1;
        }
        if state.tau_et > self.et_allowance {
            self.et_budget += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::NoiseModel;

    fn constant(means: &[f64], mu0: f64) -> BanditInstance {
        BanditInstance::new(means.to_vec(), mu0, NoiseModel::Constant, "const").unwrap()
    }

    #[test]
    fn schedule_examples() {
        let cfg = SeeConfig::default();
        let s = schedule(1, 10, 0.001, &cfg).unwrap();
        assert!((s.t_ee - 386_838.907_800_274_9).abs() < 1e-6);
        assert!((s.t_et - 24_412.145_291_060_35).abs() < 1e-6);
        assert_eq!((s.delta_k, s.alpha_k, s.beta_k), (1.0 / 3.0, 5.0, 2.0));
        assert!(!s.clamped);

        let s2 = schedule(2, 10, 0.001, &cfg).unwrap();
        assert!(s2.t_ee >= 2.0 * s.t_ee);

        let s = schedule(1, 1, 0.3, &cfg).unwrap();
        assert!((s.t_ee - 20_078.542_711_617).abs() < 1e-6);
        assert!((s.t_et - 8_399.410_155_759_854).abs() < 1e-6);
    }

    #[test]
    fn schedule_clamps_to_cap() {
        let cfg = SeeConfig::default().with_cap(1000);
        let s = schedule(1, 10, 0.001, &cfg).unwrap();
        assert!(s.clamped);
        assert_eq!(s.t_ee, 1000.0);
        // Far enough out that delta_k underflows to zero.
        let s = schedule(900, 10, 0.001, &cfg).unwrap();
        assert!(s.clamped && s.t_ee == 1000.0 && s.t_et == 1000.0);
    }

    #[test]
    fn config_validation() {
        assert!(SeeConfig::default().validate().is_ok());
        assert!(SeeConfig::paper().validate().is_ok());
        let bad = [
            SeeConfig {
                c: 1.0,
                ..SeeConfig::default()
            },
            SeeConfig {
                delta_base: 1.0,
                ..SeeConfig::default()
            },
            SeeConfig {
                alpha_base: 4.0,
                ..SeeConfig::default()
            },
            SeeConfig {
                beta_base: 1.5,
                ..SeeConfig::default()
            },
            SeeConfig {
                beta_scale: 0.0,
                ..SeeConfig::default()
            },
            SeeConfig {
                forced_cap: 0,
                ..SeeConfig::default()
            },
        ];
        for cfg in bad {
            assert!(cfg.validate().is_err(), "{cfg:?}");
        }
    }

    #[test]
    fn container_sampling_rule() {
        let inst = constant(&[0.65, 0.1, 0.2], 0.5);
        let mut s = RandomStream::new(0, Purpose::Exploration);

        let mut q = Container::new(3);
        q.put(2, 0.7);
        let d = sample_with_container(2, &mut q, &inst, &mut s).unwrap();
        assert_eq!(
            d,
            Draw {
                value: 0.7,
                fresh: false
            }
        );
        assert!(q.is_empty());

        let d = sample_with_container(0, &mut q, &inst, &mut s).unwrap();
        assert_eq!(
            d,
            Draw {
                value: 0.65,
                fresh: true
            }
        );

        let mut q = Container::new(3);
        q.put(1, 0.3);
        let d = sample_with_container(0, &mut q, &inst, &mut s).unwrap();
        assert!(d.fresh);
        assert_eq!(q.get(1), Some(0.3));
        assert!(sample_with_container(3, &mut q, &inst, &mut s).is_err());
    }

    #[test]
    fn explore_positive_single_arm() {
        let inst = constant(&[1.0], 0.0);
        let mut st = SeeState::new(1, true);
        let mut s = RandomStream::new(0, Purpose::Exploration);
        let ex = explore(
            &mut st,
            &inst,
            0.3,
            1.01,
            20_078.0,
            u64::MAX,
            &mut s,
            &mut Unobserved,
        )
        .unwrap();
        assert_eq!(ex.outcome, ExplorationOutcome::Candidate(0));
        assert_eq!((ex.pulls, st.tau_ee), (13, 13));
        assert_eq!(st.hee[0].count(), 12);
        assert_eq!(st.q.get(0), Some(1.0));
    }

    #[test]
    fn explore_negative_single_arm() {
        let inst = constant(&[-1.0], 0.0);
        let mut st = SeeState::new(1, false);
        let mut s = RandomStream::new(0, Purpose::Exploration);
        let ex = explore(
            &mut st,
            &inst,
            0.3,
            1.01,
            20_078.0,
            u64::MAX,
            &mut s,
            &mut Unobserved,
        )
        .unwrap();
        assert_eq!(ex.outcome, ExplorationOutcome::NoneAnswer);
        assert_eq!(st.tau_ee, 13);
        assert!(st.q.is_empty());
    }

    #[test]
    fn explore_budget_takes_precedence() {
        let inst = constant(&[1.0, 0.9], 0.0);
        let mut st = SeeState::new(2, false);
        let mut s = RandomStream::new(0, Purpose::Exploration);
        let ex = explore(
            &mut st,
            &inst,
            0.3,
            1.01,
            3.0,
            u64::MAX,
            &mut s,
            &mut Unobserved,
        )
        .unwrap();
        assert_eq!(ex.outcome, ExplorationOutcome::NotComplete);
        assert_eq!(st.tau_ee, 3);
        let budget = st.tau_ee as f64 + 1.0;
        let ex = explore(
            &mut st,
            &inst,
            0.3,
            1.01,
            budget,
            u64::MAX,
            &mut s,
            &mut Unobserved,
        )
        .unwrap();
        assert_eq!(
            ex,
            Exploration {
                outcome: ExplorationOutcome::NotComplete,
                pulls: 1
            }
        );
    }

    #[test]
    fn explore_visits_every_arm_before_none() {
        let inst = constant(&[-5.0, -5.0, -5.0], 0.0);
        let mut st = SeeState::new(3, false);
        let mut s = RandomStream::new(0, Purpose::Exploration);
        let ex = explore(
            &mut st,
            &inst,
            0.3,
            1.01,
            1e9,
            u64::MAX,
            &mut s,
            &mut Unobserved,
        )
        .unwrap();
        assert_eq!(ex.outcome, ExplorationOutcome::NoneAnswer);
        assert!(st.hee.iter().all(|h| h.count() >= 1));
    }

    #[test]
    fn exploit_examples() {
        let inst = constant(&[1.0], 0.0);
        let mut st = SeeState::new(1, false);
        let mut s = RandomStream::new(0, Purpose::Exploitation);
        let out = exploit(&mut st, 0, &inst, 0.3, 5.0, 8399.0, u64::MAX, &mut s).unwrap();
        assert_eq!(out, ExploitOutcome::Qualified);
        assert_eq!((st.het[0].count(), st.tau_et), (15, 15));

        let inst = constant(&[-1.0], 0.0);
        let mut st = SeeState::new(1, false);
        let out = exploit(&mut st, 0, &inst, 0.3, 5.0, 40.5, u64::MAX, &mut s).unwrap();
        assert_eq!(out, ExploitOutcome::Unqualified);
        assert_eq!(st.tau_et, 41);
        // Re-entry with the count already at the budget pulls nothing.
        let out = exploit(&mut st, 0, &inst, 0.3, 5.0, 41.0, u64::MAX, &mut s).unwrap();
        assert_eq!(out, ExploitOutcome::Unqualified);
        assert_eq!(st.tau_et, 41);
        assert!(exploit(&mut st, 1, &inst, 0.3, 5.0, 41.0, u64::MAX, &mut s).is_err());
    }

    #[test]
    fn run_single_arm_positive() {
        let r = run_see(&constant(&[1.0], 0.0), 0.3, &SeeConfig::default(), 1).unwrap();
        assert_eq!(r.outcome, Outcome::Answer(Verdict::Arm(0)));
        assert!(r.correct);
        assert_eq!(
            (r.pulls_total, r.pulls_ee, r.pulls_et, r.phases),
            (28, 13, 15, 1)
        );
        assert_eq!(r.per_arm_ee, vec![12]);
        assert_eq!(r.per_arm_et, vec![15]);
    }

    #[test]
    fn run_single_arm_negative() {
        let r = run_see(&constant(&[-1.0], 0.0), 0.3, &SeeConfig::default(), 1).unwrap();
        assert_eq!(r.outcome, Outcome::Answer(Verdict::None));
        assert!(r.correct);
        assert_eq!((r.phases, r.pulls_total, r.pulls_et), (3, 15, 0));
    }

    #[test]
    fn forced_cap_stops_run() {
        let inst =
            BanditInstance::new(vec![0.51, 0.5], 0.5 - 1e-9, NoiseModel::GaussianUnit, "").unwrap();
        let r = run_see(&inst, 0.01, &SeeConfig::default().with_cap(10), 3).unwrap();
        assert_eq!(r.outcome, Outcome::ForcedStop);
        assert!(!r.correct);
        assert_eq!(r.pulls_total, 10);
    }

    #[test]
    fn argmax_ties_go_low() {
        assert_eq!(argmax_first(&[1.0, 3.0, 3.0]), 1);
        assert_eq!(argmax_first(&[f64::INFINITY, f64::INFINITY]), 0);
    }
}
