use see_core::baselines::union_width;
use see_core::confidence::{radius, RadiusQuery};
use see_core::hardness::{
    kl_bernoulli, lower_bound_negative, lower_bound_positive_delta, lower_bound_positive_free,
    profile,
};
use see_core::harness::{make_instance, Algo, Family, FamilySpec, Preset};
use serde::Serialize;

/// Pull cap for a single browser trial, so a hard instance cannot hang the page.
pub const DEMO_CAP: u64 = 5_000_000;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(err)
}

#[derive(Debug, Serialize)]
pub struct Curve {
    pub t: Vec<u64>,
    pub radius: Vec<f64>,
    pub union_width: Vec<f64>,
}

pub fn radius_curve(delta: f64, t_max: u64, points: usize) -> Result<String, String> {
    if t_max < 2 || points < 2 {
        return Err("need t_max >= 2 and at least 2 points".into());
    }
    let mut t: Vec<u64> = (0..points)
        .map(|i| (t_max as f64).powf(i as f64 / (points - 1) as f64).round() as u64)
        .map(|x| x.clamp(1, t_max))
        .collect();
    t.dedup();
    let radius = t
        .iter()
        .map(|&n| RadiusQuery::new(n, delta).map(radius))
        .collect::<see_core::Result<Vec<_>>>()
        .map_err(err)?;
    let union_width = t.iter().map(|&n| union_width(n, delta)).collect();
    json(&Curve {
        t,
        radius,
        union_width,
    })
}

#[derive(Debug, Serialize)]
pub struct Trial {
    pub means: Vec<f64>,
    pub threshold: f64,
    pub verdict: String,
    pub correct: bool,
    pub pulls_total: u64,
    pub pulls_ee: u64,
    pub pulls_et: u64,
    pub phases: u32,
    pub per_arm_ee: Vec<u64>,
    pub per_arm_et: Vec<u64>,
}

fn instance(family: &str, arms: usize) -> Result<see_core::BanditInstance, String> {
    let family: Family = family.parse().map_err(err)?;
    make_instance(&FamilySpec::new(family, arms)).map_err(err)
}

pub fn run_trial(
    family: &str,
    arms: usize,
    delta: f64,
    algo: &str,
    seed: u64,
) -> Result<String, String> {
    let inst = instance(family, arms)?;
    let algo: Algo = algo.parse().map_err(err)?;
    let r = algo
        .run(&inst, delta, Preset::Paper, DEMO_CAP, seed)
        .map_err(err)?;
    json(&Trial {
        means: inst.means().to_vec(),
        threshold: inst.threshold(),
        verdict: r.outcome.to_string(),
        correct: r.correct,
        pulls_total: r.pulls_total,
        pulls_ee: r.pulls_ee,
        pulls_et: r.pulls_et,
        phases: r.phases,
        per_arm_ee: r.per_arm_ee,
        per_arm_et: r.per_arm_et,
    })
}

/// Infinite quantities serialize as `null`.
#[derive(Debug, Serialize)]
pub struct Hardness {
    pub h: f64,
    pub h1: f64,
    pub h0: f64,
    pub h1_neg: f64,
    pub h1_low: f64,
    pub h1_pos: f64,
    pub h1_bai: f64,
    pub kl: f64,
    pub lower_bound_negative: Option<f64>,
    pub lower_bound_positive_delta: Option<f64>,
    pub lower_bound_positive_free: Option<f64>,
}

pub fn hardness(family: &str, arms: usize, delta: f64) -> Result<String, String> {
    let inst = instance(family, arms)?;
    let p = profile(&inst);
    let free = lower_bound_positive_free(&inst);
    json(&Hardness {
        h: p.h,
        h1: p.h1,
        h0: p.h0,
        h1_neg: p.h1_neg,
        h1_low: p.h1_low,
        h1_pos: p.h1_pos,
        h1_bai: p.h1_bai,
        kl: kl_bernoulli(delta).map_err(err)?,
        lower_bound_negative: lower_bound_negative(&inst, delta).ok(),
        lower_bound_positive_delta: lower_bound_positive_delta(&inst, delta).ok(),
        lower_bound_positive_free: free.hypothesis_holds.then_some(free.value),
    })
}
