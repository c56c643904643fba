//! Trajectory driver: evolve a configured walk and record observables.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::config::WalkConfig;
use crate::error::{Error, Result};
use crate::observables::{l1_coherence, participation_ratio, site_density};
use crate::state::prepare_initial_state;

/// Norm-squared drift beyond which evolution aborts.
pub const NORM_DRIFT_LIMIT: f64 = 1e-9;

/// Default stride between density snapshots when they are recorded at all.
pub const DEFAULT_DENSITY_STRIDE: usize = 10;

/// What to record along a trajectory. Coherence and participation ratio are
/// always recorded at every step; site densities only at the given stride.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordOptions {
    /// Record a density snapshot whenever `t % stride == 0`. `None` disables
    /// snapshots.
    pub density_stride: Option<usize>,
}

impl RecordOptions {
    pub fn with_density_every(stride: usize) -> Self {
        Self {
            density_stride: Some(stride),
        }
    }
}

/// Time series recorded along one trajectory, plus the config that produced
/// it. Series have `total_steps + 1` entries (step 0 is the initial state).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryRecord {
    pub config: WalkConfig,
    pub coherence: Vec<f64>,
    pub participation: Vec<f64>,
    /// Sparse map from time step to the N site probabilities at that step.
    pub density_snapshots: BTreeMap<usize, Vec<f64>>,
}

impl TrajectoryRecord {
    /// Post-transient slice of the coherence series.
    pub fn coherence_tail(&self) -> &[f64] {
        &self.coherence[self.config.transient_steps..]
    }

    /// Post-transient slice of the participation series.
    pub fn participation_tail(&self) -> &[f64] {
        &self.participation[self.config.transient_steps..]
    }
}

/// Run the full walk: prepare the seeded initial state, apply
/// `config.total_steps` evolution steps, and record observables at every
/// step. Deterministic for a fixed config; aborts with [`Error::NormDrift`]
/// if the unit norm degrades beyond [`NORM_DRIFT_LIMIT`].
pub fn evolve(config: &WalkConfig, options: &RecordOptions) -> Result<TrajectoryRecord> {
    if let Some(0) = options.density_stride {
        return Err(Error::InvalidConfig(
            "density stride must be at least 1".into(),
        ));
    }

    let mut state = prepare_initial_state(config)?;
    let steps = config.total_steps;

    let mut coherence = Vec::with_capacity(steps + 1);
    let mut participation = Vec::with_capacity(steps + 1);
    let mut density_snapshots = BTreeMap::new();

    let observe = |t: usize,
                       state: &crate::state::WalkerState,
                       coherence: &mut Vec<f64>,
                       participation: &mut Vec<f64>,
                       snapshots: &mut BTreeMap<usize, Vec<f64>>|
     -> Result<()> {
        let density = site_density(state);
        coherence.push(l1_coherence(state));
        participation.push(participation_ratio(&density)?);
        if let Some(stride) = options.density_stride {
            if t % stride == 0 {
                snapshots.insert(t, density);
            }
        }
        Ok(())
    };

    observe(
        0,
        &state,
        &mut coherence,
        &mut participation,
        &mut density_snapshots,
    )?;

    for t in 1..=steps {
        state.step(config.theta, config.chi);
        check_norm(state.norm_sqr(), t)?;
        observe(
            t,
            &state,
            &mut coherence,
            &mut participation,
            &mut density_snapshots,
        )?;
    }

    Ok(TrajectoryRecord {
        config: config.clone(),
        coherence,
        participation,
        density_snapshots,
    })
}

fn check_norm(norm_sqr: f64, step: usize) -> Result<()> {
    let deviation = (norm_sqr - 1.0).abs();
    if deviation > NORM_DRIFT_LIMIT {
        return Err(Error::NormDrift {
            step,
            deviation,
            limit: NORM_DRIFT_LIMIT,
        });
    }
    Ok(())
}
