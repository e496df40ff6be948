//! Experiment orchestration: instance families, algorithm selection, trial
//! sweeps and CSV output.

mod stats;
mod sweep;

pub use stats::{summarize, PullStats};
pub use sweep::{
    run_cell, run_sweep, CellResult, SummaryRow, SweepSpec, TrialRow, SUMMARY_HEADER, TRIAL_HEADER,
};

use crate::baselines::{run_baseline, BaselineAlgo, BaselineConfig};
use crate::error::{Error, Result};
use crate::instance::{BanditInstance, NoiseModel};
use crate::record::RunRecord;
use crate::see::{run_see, SeeConfig};
use std::fmt;
use std::str::FromStr;

/// The six benchmark mean-vector families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    AllWorse,
    UniqueQualified,
    OneQuarter,
    HalfGood,
    AllGood,
    Linear,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::AllWorse,
        Family::UniqueQualified,
        Family::OneQuarter,
        Family::HalfGood,
        Family::AllGood,
        Family::Linear,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::AllWorse => "AllWorse",
            Family::UniqueQualified => "UniqueQualified",
            Family::OneQuarter => "OneQuarter",
            Family::HalfGood => "HalfGood",
            Family::AllGood => "AllGood",
            Family::Linear => "Linear",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        Ok(match key.as_str() {
            "allworse" => Family::AllWorse,
            "uniquequalified" | "unique" => Family::UniqueQualified,
            "onequarter" | "onequarterqualified" => Family::OneQuarter,
            "halfgood" => Family::HalfGood,
            "allgood" => Family::AllGood,
            "linear" => Family::Linear,
            _ => return Err(Error::Parse(format!("unknown family {s:?}"))),
        })
    }
}

/// A family at a given size, threshold and gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub arms: usize,
    pub mu0: f64,
    pub gap: f64,
}

impl FamilySpec {
    pub fn new(family: Family, arms: usize) -> Self {
        Self {
            family,
            arms,
            mu0: 0.5,
            gap: 0.15,
        }
    }

    pub fn means(&self) -> Result<Vec<f64>> {
        let k = self.arms;
        if k == 0 {
            return Err(Error::NoArms);
        }
        let (lo, hi) = (self.mu0, self.mu0 + self.gap);
        let split = |good: usize| -> Vec<f64> {
            let mut m = vec![hi; good];
            m.resize(k, lo);
            m
        };
        Ok(match self.family {
            Family::AllWorse => vec![0.25; k],
            Family::UniqueQualified => split(1),
            Family::OneQuarter => split(k / 4),
            Family::HalfGood => split(k / 2),
            Family::AllGood => vec![hi; k],
            Family::Linear => {
                if k < 2 {
                    return Err(Error::LinearNeedsTwoArms);
                }
                let step = 2.0 * self.gap / (k - 1) as f64;
                (0..k)
                    .map(|i| self.mu0 - self.gap + i as f64 * step)
                    .collect()
            }
        })
    }
}

/// Builds the instance for `spec` under unit Gaussian noise.
pub fn make_instance(spec: &FamilySpec) -> Result<BanditInstance> {
    let label = format!("{}-K{}", spec.family, spec.arms);
    BanditInstance::new(spec.means()?, spec.mu0, NoiseModel::GaussianUnit, label)
}

/// SEE tunables to use in a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Preset {
    /// `beta_k = 2^k`.
    #[default]
    Default,
    /// `beta_k = 2^k / 4`, the experimental setting.
    Paper,
}

impl Preset {
    pub fn see_config(self, forced_cap: u64) -> SeeConfig {
        match self {
            Preset::Default => SeeConfig::default(),
            Preset::Paper => SeeConfig::paper(),
        }
        .with_cap(forced_cap)
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "default" => Ok(Preset::Default),
            "paper" => Ok(Preset::Paper),
            _ => Err(Error::Parse(format!("unknown preset {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algo {
    See,
    Baseline(BaselineAlgo),
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::See => "see",
            Algo::Baseline(b) => b.name(),
        }
    }

    /// One trial of this algorithm.
    pub fn run(
        self,
        instance: &BanditInstance,
        delta: f64,
        preset: Preset,
        forced_cap: u64,
        seed: u64,
    ) -> Result<RunRecord> {
        match self {
            Algo::See => run_see(instance, delta, &preset.see_config(forced_cap), seed),
            Algo::Baseline(b) => run_baseline(
                instance,
                delta,
                &BaselineConfig::new(b).with_cap(forced_cap),
                seed,
            ),
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("see") {
            return Ok(Algo::See);
        }
        s.parse().map(Algo::Baseline)
    }
}
