use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use see_core::confidence::simulate_concentration_violation;
use see_core::hardness::{
    kl_bernoulli, lower_bound_negative, lower_bound_positive_delta, lower_bound_positive_free,
    lower_bound_suboptimal_pulls, profile,
};
use see_core::harness::{make_instance, run_sweep, Algo, Family, FamilySpec, Preset, SweepSpec};
use see_core::rng::{Purpose, RandomStream};
use see_core::Sign;
use serde::Serialize;
use std::fs::File;
use std::io::{self, BufWriter};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "see-bandit",
    version,
    about = "Threshold bandit identification experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one cell: a family, size, tolerance and algorithm.
    Run {
        #[arg(long)]
        family: Family,
        #[arg(long = "K")]
        arms: usize,
        #[arg(long)]
        delta: f64,
        #[arg(long, default_value = "see")]
        algo: Algo,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000_000)]
        cap: u64,
        #[arg(long, default_value = "paper")]
        preset: Preset,
        /// Also write one row per trial here.
        #[arg(long)]
        per_trial: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run every cell of a key=value spec file.
    Sweep {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        per_trial: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the hardness profile of a family instance.
    Hardness {
        #[arg(long)]
        family: Family,
        #[arg(long = "K")]
        arms: usize,
    },
    /// Print lower bounds for a family instance.
    Bounds {
        #[arg(long)]
        family: Family,
        #[arg(long = "K")]
        arms: usize,
        #[arg(long)]
        delta: f64,
    },
    /// Estimate how often Gaussian paths cross the confidence boundary.
    ConcTest {
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        horizon: u64,
        #[arg(long)]
        sequences: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
    },
}

#[derive(Serialize)]
struct HardnessRow {
    family: String,
    #[serde(rename = "K")]
    arms: usize,
    h: f64,
    h1: f64,
    h0: f64,
    h1_neg: f64,
    h1_low: f64,
    h1_pos: f64,
    h1_bai: f64,
}

#[derive(Serialize)]
struct BoundsRow {
    family: String,
    #[serde(rename = "K")]
    arms: usize,
    delta: f64,
    kl: f64,
    lower_bound_negative: Option<f64>,
    lower_bound_positive_delta: Option<f64>,
    lower_bound_positive_free: Option<f64>,
    positive_free_hypothesis: Option<bool>,
    suboptimal_pulls_sum: Option<f64>,
}

#[derive(Serialize)]
struct ConcRow {
    delta: f64,
    horizon: u64,
    sequences: u64,
    violations: u64,
    bound: f64,
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(
        File::create(path).with_context(|| format!("creating {}", path.display()))?,
    ))
}

fn print_row<T: Serialize>(row: &T) -> Result<()> {
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.serialize(row)?;
    w.flush()?;
    Ok(())
}

fn write_sweep(spec: &SweepSpec, out: &Path, per_trial: Option<&Path>) -> Result<()> {
    let summary = create(out)?;
    let trials = per_trial.map(create).transpose()?;
    let cells = run_sweep(spec, summary, trials)?;
    let mut failed = false;
    for cell in &cells {
        if let Some(msg) = &cell.panic {
            failed = true;
            eprintln!(
                "cell {} K={} delta={} {} aborted: {msg}",
                cell.summary.family, cell.summary.arms, cell.summary.delta, cell.summary.algo
            );
        }
    }
    if failed {
        bail!("one or more cells aborted");
    }
    Ok(())
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Run {
            family,
            arms,
            delta,
            algo,
            trials,
            seed,
            cap,
            preset,
            per_trial,
            out,
        } => {
            let spec = SweepSpec {
                families: vec![family],
                ks: vec![arms],
                deltas: vec![delta],
                algos: vec![algo],
                trials,
                master_seed: seed,
                forced_cap: cap,
                preset,
            };
            write_sweep(&spec, &out, per_trial.as_deref())
        }
        Command::Sweep {
            spec,
            per_trial,
            out,
        } => {
            let text = std::fs::read_to_string(&spec)
                .with_context(|| format!("reading {}", spec.display()))?;
            let spec = SweepSpec::parse(&text)?;
            write_sweep(&spec, &out, per_trial.as_deref())
        }
        Command::Hardness { family, arms } => {
            let inst = make_instance(&FamilySpec::new(family, arms))?;
            let p = profile(&inst);
            print_row(&HardnessRow {
                family: family.to_string(),
                arms,
                h: p.h,
                h1: p.h1,
                h0: p.h0,
                h1_neg: p.h1_neg,
                h1_low: p.h1_low,
                h1_pos: p.h1_pos,
                h1_bai: p.h1_bai,
            })
        }
        Command::Bounds {
            family,
            arms,
            delta,
        } => {
            let inst = make_instance(&FamilySpec::new(family, arms))?;
            let positive = inst.classify() == Sign::Positive;
            let free = positive.then(|| lower_bound_positive_free(&inst));
            let suboptimal = free.filter(|f| f.hypothesis_holds).map(|_| {
                (0..inst.num_arms())
                    .filter_map(|a| lower_bound_suboptimal_pulls(&inst, a).ok())
                    .sum()
            });
            print_row(&BoundsRow {
                family: family.to_string(),
                arms,
                delta,
                kl: kl_bernoulli(delta)?,
                lower_bound_negative: lower_bound_negative(&inst, delta).ok(),
                lower_bound_positive_delta: lower_bound_positive_delta(&inst, delta).ok(),
                lower_bound_positive_free: free.map(|f| f.value),
                positive_free_hypothesis: free.map(|f| f.hypothesis_holds),
                suboptimal_pulls_sum: suboptimal,
            })
        }
        Command::ConcTest {
            delta,
            horizon,
            sequences,
            seed,
            sigma,
        } => {
            let stream = RandomStream::new(seed, Purpose::Concentration);
            let rep = simulate_concentration_violation(sigma, delta, horizon, sequences, &stream)?;
            print_row(&ConcRow {
                delta,
                horizon,
                sequences,
                violations: rep.violations,
                bound: rep.bound(),
            })
        }
    }
}
