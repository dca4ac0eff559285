use std::fmt::Write as _;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::batch::{PartsList, RunConfig, StepBlock, VerificationRecord, SCHEMA_VERSION};
use crate::compiler::{compile_generalized, compile_ssqw, verify, walk_step_operator};
use crate::walk::{evolve, Trajectory, WalkKind, WalkSpec};
use crate::{Error, Result};

/// Largest lattice on which dense operators are built for verification.
pub const MAX_DENSE_HALF_WIDTH: usize = 256;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentRow {
    pub t: usize,
    pub total: f64,
    pub mean: f64,
    pub variance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub schema_version: u32,
    pub walk: WalkKind,
    pub steps: usize,
    pub half_width: usize,
    pub seed: u64,
    pub moments: Vec<MomentRow>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunOutput {
    pub trajectory: Trajectory,
    pub csv: String,
    pub summary: RunSummary,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("summaries always serialize");
    s.push('\n');
    s
}

impl RunSummary {
    pub fn to_json_string(&self) -> String {
        to_json(self)
    }
}

/// `t,x,P` rows, `P` with 17 significant digits. Without `all_rows` only
/// sites with `P > 0` are written.
pub fn distribution_csv(traj: &Trajectory, all_rows: bool) -> String {
    let mut out = String::from("t,x,P\n");
    for (t, state) in traj.states().iter().enumerate() {
        for (x, p) in state.probability().iter() {
            if all_rows || p > 0.0 {
                writeln!(out, "{t},{x},{p:.16e}").unwrap();
            }
        }
    }
    out
}

/// Evolves the configured walk and renders its distribution and moments.
pub fn run(cfg: &RunConfig) -> Result<RunOutput> {
    cfg.validate()?;
    let spec = cfg.walk_spec()?;
    let trajectory = evolve(&spec)?;
    let moments = trajectory
        .states()
        .iter()
        .enumerate()
        .map(|(t, s)| {
            let p = s.probability();
            MomentRow {
                t,
                total: p.total(),
                mean: p.mean(),
                variance: p.variance(),
            }
        })
        .collect();
    let summary = RunSummary {
        schema_version: SCHEMA_VERSION,
        walk: cfg.walk,
        steps: cfg.steps,
        half_width: cfg.half_width,
        seed: cfg.seed,
        moments,
    };
    let csv = distribution_csv(&trajectory, cfg.emit_all_rows);
    Ok(RunOutput {
        trajectory,
        csv,
        summary,
    })
}

/// Optical parts list for a split-step walk, verified when `verify_train`.
///
/// A failed verification is recorded in the returned list rather than
/// reported as an error, so callers can still write the file.
pub fn compile(cfg: &RunConfig, verify_train: bool) -> Result<PartsList> {
    cfg.validate()?;
    let spec = cfg.walk_spec()?;
    spec.validate()?;
    let step = match cfg.walk {
        WalkKind::Ssqw => {
            let c1 = spec
                .coin1
                .homogeneous_params()
                .expect("validated as homogeneous")
                .matrix();
            let c2 = spec
                .coin2
                .as_ref()
                .and_then(|t| t.homogeneous_params())
                .expect("validated as homogeneous")
                .matrix();
            compile_ssqw(&c1, &c2)?
        }
        WalkKind::Generalized => compile_generalized(&WalkSpec {
            steps: 1,
            ..spec.clone()
        })?
        .remove(0),
        other => {
            return Err(Error::Config(format!(
                "only ssqw and generalized walks compile to optics, not {}",
                other.name()
            )))
        }
    };
    let verification = if verify_train {
        if cfg.half_width > MAX_DENSE_HALF_WIDTH {
            return Err(Error::Config(format!(
                "verification builds dense operators; half_width must be at most {MAX_DENSE_HALF_WIDTH}"
            )));
        }
        let report = verify(&step, &walk_step_operator(&spec)?)?;
        Some(VerificationRecord::from(&report))
    } else {
        None
    };
    // Coins are the same at every step, so every block carries the same train.
    let steps = (0..cfg.steps)
        .map(|t| StepBlock::from_compiled(t, &step))
        .collect();
    Ok(PartsList {
        schema_version: SCHEMA_VERSION,
        walk: cfg.walk,
        half_width: cfg.half_width,
        steps,
        verification,
    })
}

impl PartsList {
    /// The error a failed verification maps to, if any.
    pub fn verification_failure(&self) -> Option<Error> {
        self.verification
            .as_ref()
            .filter(|v| !v.pass)
            .map(|v| Error::VerificationFailed {
                fidelity: v.fidelity,
                distance: v.distance,
            })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeedSeries {
    pub seed: u64,
    /// σ(t) for `t = 0..=steps`.
    pub sigma: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalizationSummary {
    pub schema_version: u32,
    pub walk: WalkKind,
    pub steps: usize,
    pub half_width: usize,
    pub runs: Vec<SeedSeries>,
    pub ensemble_mean_sigma: Vec<f64>,
    /// Same config with random coins replaced by `θ = π/4`.
    pub baseline_sigma: Vec<f64>,
}

impl LocalizationSummary {
    pub fn to_json_string(&self) -> String {
        to_json(self)
    }
}

/// Spreading of `seeds` disorder realizations next to a ballistic baseline.
///
/// Realization `i` draws its coins from seed `cfg.seed + i` (wrapping).
/// Realizations run on worker threads; results are merged by index.
pub fn localize(cfg: &RunConfig, seeds: usize) -> Result<LocalizationSummary> {
    cfg.validate()?;
    if seeds == 0 {
        return Err(Error::Config("need at least one seed".into()));
    }
    let seed_list: Vec<u64> = (0..seeds as u64)
        .map(|i| cfg.seed.wrapping_add(i))
        .collect();
    // Fail fast on lattice problems before spawning workers.
    cfg.walk_spec_with_seed(seed_list[0])?.validate()?;

    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(seeds);
    let chunk = seeds.div_ceil(workers);
    let results: Vec<Result<Vec<SeedSeries>>> = thread::scope(|scope| {
        let handles: Vec<_> = seed_list
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|&seed| {
                            let spec = cfg.walk_spec_with_seed(seed)?;
                            Ok(SeedSeries {
                                seed,
                                sigma: evolve(&spec)?.std_devs(),
                            })
                        })
                        .collect::<Result<Vec<_>>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("localization worker panicked"))
            .collect()
    });
    let mut runs = Vec::with_capacity(seeds);
    for r in results {
        runs.extend(r?);
    }

    let ensemble_mean_sigma = (0..=cfg.steps)
        .map(|t| runs.iter().map(|r| r.sigma[t]).sum::<f64>() / runs.len() as f64)
        .collect();
    let baseline_sigma = evolve(&cfg.ballistic_baseline().walk_spec()?)?.std_devs();
    Ok(LocalizationSummary {
        schema_version: SCHEMA_VERSION,
        walk: cfg.walk,
        steps: cfg.steps,
        half_width: cfg.half_width,
        runs,
        ensemble_mean_sigma,
        baseline_sigma,
    })
}
