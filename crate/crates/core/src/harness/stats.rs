use crate::error::{Error, Result};
use crate::record::RunRecord;

/// Mean and standard error of total pulls over completed runs.
///
/// The standard error is `s / sqrt(n)` with the `n - 1` sample variance.
/// With a single completed run it is reported as zero and flagged. Forced
/// stops are excluded from both and counted separately; if every run was
/// forced, mean and SE are NaN.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PullStats {
    pub runs: usize,
    pub completed: usize,
    pub mean: f64,
    pub se: f64,
    pub se_degenerate: bool,
    pub forced_stops: usize,
    pub errors: usize,
}

pub fn summarize(records: &[RunRecord]) -> Result<PullStats> {
    if records.is_empty() {
        return Err(Error::EmptyRecords);
    }
    let done: Vec<f64> = records
        .iter()
        .filter(|r| !r.outcome.is_forced_stop())
        .map(|r| r.pulls_total as f64)
        .collect();
    let forced_stops = records.len() - done.len();
    let errors = records
        .iter()
        .filter(|r| !r.outcome.is_forced_stop() && !r.correct)
        .count();

    let n = done.len();
    let (mean, se, se_degenerate) = match n {
        0 => (f64::NAN, f64::NAN, true),
        1 => (done[0], 0.0, true),
        _ => {
            let mean = done.iter().sum::<f64>() / n as f64;
            let ss: f64 = done.iter().map(|x| (x - mean) * (x - mean)).sum();
            let sd = (ss / (n - 1) as f64).sqrt();
            (mean, sd / (n as f64).sqrt(), false)
        }
    };
    Ok(PullStats {
        runs: records.len(),
        completed: n,
        mean,
        se,
        se_degenerate,
        forced_stops,
        errors,
    })
}
