use super::{make_instance, summarize, Algo, Family, FamilySpec, Preset};
use crate::error::{Error, Result};
use crate::instance::check_delta;
use crate::record::RunRecord;
use crate::rng::trial_seed;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

pub const SUMMARY_HEADER: &str =
    "family,K,delta,algo,trials,mean_pulls,se_pulls,error_count,forced_stop_count";
pub const TRIAL_HEADER: &str =
    "family,K,delta,algo,trial,seed,verdict,correct,pulls_total,pulls_ee,pulls_et,phases,forced_stop";

/// One cell of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryRow {
    pub family: String,
    #[serde(rename = "K")]
    pub arms: usize,
    pub delta: f64,
    pub algo: String,
    pub trials: usize,
    pub mean_pulls: f64,
    pub se_pulls: f64,
    pub error_count: usize,
    pub forced_stop_count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialRow {
    pub family: String,
    #[serde(rename = "K")]
    pub arms: usize,
    pub delta: f64,
    pub algo: String,
    pub trial: u64,
    pub seed: u64,
    pub verdict: String,
    pub correct: bool,
    pub pulls_total: u64,
    pub pulls_ee: u64,
    pub pulls_et: u64,
    pub phases: u32,
    pub forced_stop: bool,
}

/// The grid of cells to run and how.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub families: Vec<Family>,
    pub ks: Vec<usize>,
    pub deltas: Vec<f64>,
    pub algos: Vec<Algo>,
    pub trials: usize,
    pub master_seed: u64,
    pub forced_cap: u64,
    pub preset: Preset,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            families: vec![Family::AllWorse],
            ks: vec![10],
            deltas: vec![0.01],
            algos: vec![Algo::See],
            trials: 100,
            master_seed: 0,
            forced_cap: 100_000_000,
            preset: Preset::Paper,
        }
    }
}

impl SweepSpec {
    /// Parses flat `key = value` text. List values are comma-separated;
    /// `#` starts a comment. Keys: `families`, `K`, `deltas`, `algos`,
    /// `trials`, `seed`, `cap`, `preset`. Missing keys keep their defaults.
    pub fn parse(text: &str) -> Result<Self> {
        fn list<T: std::str::FromStr>(v: &str, key: &str) -> Result<Vec<T>> {
            v.split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse()
                        .map_err(|_| Error::Parse(format!("bad value {s:?} for {key}")))
                })
                .collect()
        }
        fn one<T: std::str::FromStr>(v: &str, key: &str) -> Result<T> {
            v.parse()
                .map_err(|_| Error::Parse(format!("bad value {v:?} for {key}")))
        }

        let mut spec = SweepSpec::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key=value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "families" | "family" => spec.families = list(value, key)?,
                "K" | "ks" | "k" => spec.ks = list(value, key)?,
                "deltas" | "delta" => spec.deltas = list(value, key)?,
                "algos" | "algo" => spec.algos = list(value, key)?,
                "trials" => spec.trials = one(value, key)?,
                "seed" | "master_seed" => spec.master_seed = one(value, key)?,
                "cap" | "forced_cap" => spec.forced_cap = one(value, key)?,
                "preset" => spec.preset = one(value, key)?,
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: unknown key {key:?}",
                        lineno + 1
                    )))
                }
            }
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.families.is_empty()
            || self.ks.is_empty()
            || self.deltas.is_empty()
            || self.algos.is_empty()
        {
            return Err(Error::Config(
                "every sweep axis needs at least one value".into(),
            ));
        }
        for &d in &self.deltas {
            check_delta(d)?;
        }
        if self.forced_cap == 0 {
            return Err(Error::Config("forced_cap must be at least 1".into()));
        }
        Ok(())
    }
}

/// A finished cell: its summary, per-trial rows and, if a trial panicked,
/// the panic message (the summary then carries NaN statistics).
#[derive(Debug, Clone, PartialEq)]
pub struct CellResult {
    pub summary: SummaryRow,
    pub trials: Vec<TrialRow>,
    pub records: Vec<RunRecord>,
    pub panic: Option<String>,
}

#[allow(clippy::too_many_arguments)]
pub fn run_cell(
    family: &FamilySpec,
    delta: f64,
    algo: Algo,
    trials: usize,
    master_seed: u64,
    forced_cap: u64,
    preset: Preset,
) -> Result<CellResult> {
    check_delta(delta)?;
    if trials == 0 {
        return Err(Error::Config("trials must be at least 1".into()));
    }
    let instance = make_instance(family)?;
    let one = |i: u64| -> std::result::Result<Result<RunRecord>, String> {
        let seed = trial_seed(master_seed, i);
        catch_unwind(AssertUnwindSafe(|| {
            algo.run(&instance, delta, preset, forced_cap, seed)
        }))
        .map_err(|p| {
            p.downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "trial panicked".into())
        })
    };
    #[cfg(feature = "parallel")]
    let outcomes: Vec<_> = (0..trials as u64).into_par_iter().map(one).collect();
    #[cfg(not(feature = "parallel"))]
    let outcomes: Vec<_> = (0..trials as u64).map(one).collect();

    let base = SummaryRow {
        family: family.family.to_string(),
        arms: family.arms,
        delta,
        algo: algo.to_string(),
        trials,
        mean_pulls: f64::NAN,
        se_pulls: f64::NAN,
        error_count: 0,
        forced_stop_count: 0,
    };

    let mut records = Vec::with_capacity(trials);
    for (i, o) in outcomes.into_iter().enumerate() {
        match o {
            Ok(r) => records.push(r?),
            Err(msg) => {
                return Ok(CellResult {
                    summary: base,
                    trials: Vec::new(),
                    records: Vec::new(),
                    panic: Some(format!("trial {i}: {msg}")),
                })
            }
        }
    }

    let stats = summarize(&records)?;
    let rows = records
        .iter()
        .enumerate()
        .map(|(i, r)| TrialRow {
            family: base.family.clone(),
            arms: family.arms,
            delta,
            algo: base.algo.clone(),
            trial: i as u64,
            seed: r.seed,
            verdict: r.outcome.to_string(),
            correct: r.correct,
            pulls_total: r.pulls_total,
            pulls_ee: r.pulls_ee,
            pulls_et: r.pulls_et,
            phases: r.phases,
            forced_stop: r.outcome.is_forced_stop(),
        })
        .collect();
    Ok(CellResult {
        summary: SummaryRow {
            mean_pulls: stats.mean,
            se_pulls: stats.se,
            error_count: stats.errors,
            forced_stop_count: stats.forced_stops,
            ..base
        },
        trials: rows,
        records,
        panic: None,
    })
}

/// Runs every cell of `spec` in the order families, K, delta, algo, writing
/// one summary row per cell and, if `per_trial` is given, one row per trial.
pub fn run_sweep<W: Write, T: Write>(
    spec: &SweepSpec,
    summary: W,
    per_trial: Option<T>,
) -> Result<Vec<CellResult>> {
    spec.validate()?;
    let mut summary = csv::Writer::from_writer(summary);
    let mut per_trial = per_trial.map(csv::Writer::from_writer);
    let mut cells = Vec::new();
    for &family in &spec.families {
        for &k in &spec.ks {
            for &delta in &spec.deltas {
                for &algo in &spec.algos {
                    let fs = FamilySpec::new(family, k);
                    let cell = run_cell(
                        &fs,
                        delta,
                        algo,
                        spec.trials,
                        spec.master_seed,
                        spec.forced_cap,
                        spec.preset,
                    )?;
                    summary.serialize(&cell.summary)?;
                    if let Some(w) = per_trial.as_mut() {
                        for row in &cell.trials {
                            w.serialize(row)?;
                        }
                    }
                    cells.push(cell);
                }
            }
        }
    }
    summary.flush()?;
    if let Some(mut w) = per_trial {
        w.flush()?;
    }
    Ok(cells)
}
