//! Four-way regime classification of finished trajectories.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::observables::{coherence_minimum, long_time_average};
use crate::trajectory::TrajectoryRecord;

use super::spectrum::dominant_power_fraction;

/// The long-time dynamical regimes of the walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegimeKind {
    /// The disturbed uniform distribution persists; coherence stays near its
    /// maximum `2N - 1`.
    Stationary,
    /// Coherence oscillates regularly as the wavepacket periodically
    /// contracts and re-expands.
    Breathing,
    /// Rough, irregular coherence fluctuations around a depressed mean.
    Chaoticlike,
    /// The wavepacket contracts onto a few sites after a transient.
    SelfFocusing,
}

impl fmt::Display for RegimeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RegimeKind::Stationary => "stationary",
            RegimeKind::Breathing => "breathing",
            RegimeKind::Chaoticlike => "chaoticlike",
            RegimeKind::SelfFocusing => "self-focusing",
        };
        f.write_str(s)
    }
}

/// The measured quantities a classification was decided on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeDiagnostics {
    /// Post-transient mean coherence divided by the maximum `2N - 1`.
    pub mean_coherence_frac: f64,
    /// Post-transient minimum of the coherence series (unnormalized).
    pub coherence_min: f64,
    /// Power fraction of the dominant nonzero-frequency spectral peak of the
    /// mean-subtracted post-transient coherence series.
    pub dominant_power_frac: f64,
    /// Post-transient mean participation ratio divided by N.
    pub mean_participation_frac: f64,
}

/// Label assigned to one trajectory, with the diagnostics that triggered it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeLabel {
    pub kind: RegimeKind,
    pub diagnostics: RegimeDiagnostics,
}

/// Decision thresholds of the classifier. All fractions of the relevant
/// maximum (`2N - 1` for coherence, `N` for participation).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassifierThresholds {
    /// Self-focusing when mean participation ratio < `pr_frac * N`.
    pub pr_frac: f64,
    /// Stationary needs mean coherence >= `stat_frac * (2N - 1)` ...
    pub stat_frac: f64,
    /// ... and coherence minimum >= `min_frac * (2N - 1)`.
    pub min_frac: f64,
    /// Breathing when the dominant spectral peak carries at least this
    /// fraction of the nonzero-frequency power.
    pub osc_frac: f64,
}

impl Default for ClassifierThresholds {
    fn default() -> Self {
        Self {
            pr_frac: 0.25,
            stat_frac: 0.90,
            min_frac: 0.75,
            osc_frac: 0.25,
        }
    }
}

/// Classify a finished trajectory.
///
/// Rules apply in a fixed order: self-focusing (participation collapse)
/// first, then stationary (coherence pinned near its maximum), then breathing
/// (a dominant oscillation in the coherence spectrum), otherwise chaoticlike.
/// The record must cover at least twice its transient so the post-transient
/// window is no shorter than what was discarded.
pub fn classify(
    record: &TrajectoryRecord,
    thresholds: &ClassifierThresholds,
) -> Result<RegimeLabel> {
    let cfg = &record.config;
    if cfg.total_steps < 2 * cfg.transient_steps || record.coherence.len() < 2 {
        return Err(Error::RecordTooShort {
            steps: cfg.total_steps,
            transient: cfg.transient_steps,
        });
    }

    let n = cfg.n_sites as f64;
    let max_coherence = 2.0 * n - 1.0;
    let transient = cfg.transient_steps;

    let mean_c = long_time_average(&record.coherence, transient)?;
    let min_c = coherence_minimum(&record.coherence, transient)?;
    let mean_pr = long_time_average(&record.participation, transient)?;
    let power_frac = dominant_power_fraction(record.coherence_tail());

    let diagnostics = RegimeDiagnostics {
        mean_coherence_frac: mean_c / max_coherence,
        coherence_min: min_c,
        dominant_power_frac: power_frac,
        mean_participation_frac: mean_pr / n,
    };

    let kind = if diagnostics.mean_participation_frac < thresholds.pr_frac {
        RegimeKind::SelfFocusing
    } else if diagnostics.mean_coherence_frac >= thresholds.stat_frac
        && min_c >= thresholds.min_frac * max_coherence
    {
        RegimeKind::Stationary
    } else if power_frac >= thresholds.osc_frac {
        RegimeKind::Breathing
    } else {
        RegimeKind::Chaoticlike
    };

    Ok(RegimeLabel { kind, diagnostics })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::WalkConfig;
    use crate::rng::SplitMix64;
    use std::collections::BTreeMap;
    use std::f64::consts::TAU;

    /// Synthetic record with prescribed coherence and participation series.
    fn synthetic(n: usize, coherence: Vec<f64>, participation: Vec<f64>) -> TrajectoryRecord {
        let total = coherence.len() - 1;
        let config = WalkConfig::new(n, 0.0, 0.0, total, 0).with_transient(total / 2);
        TrajectoryRecord {
            config,
            coherence,
            participation,
            density_snapshots: BTreeMap::new(),
        }
    }

    #[test]
    fn pinned_high_coherence_is_stationary() {
        let n = 101;
        let max = 2.0 * n as f64 - 1.0;
        let mut rng = SplitMix64::new(1);
        let coherence: Vec<f64> = (0..4001).map(|_| max * rng.uniform(0.96, 1.0)).collect();
        let participation = vec![n as f64 * 0.9; 4001];
        let label = classify(&synthetic(n, coherence, participation), &Default::default()).unwrap();
        assert_eq!(label.kind, RegimeKind::Stationary);
        assert!(label.diagnostics.mean_coherence_frac > 0.9);
    }

    #[test]
    fn regular_oscillation_is_breathing() {
        let n = 101;
        let coherence: Vec<f64> = (0..4001)
            .map(|t| 150.0 + 40.0 * (TAU * 11.0 * t as f64 / 2000.0).sin())
            .collect();
        let participation = vec![60.0; 4001];
        let label = classify(&synthetic(n, coherence, participation), &Default::default()).unwrap();
        assert_eq!(label.kind, RegimeKind::Breathing);
        assert!(label.diagnostics.dominant_power_frac >= 0.25);
    }

    #[test]
    fn broadband_fluctuations_are_chaoticlike() {
        let n = 101;
        let mut rng = SplitMix64::new(2);
        let coherence: Vec<f64> = (0..4001).map(|_| rng.uniform(100.0, 180.0)).collect();
        let participation = vec![60.0; 4001];
        let label = classify(&synthetic(n, coherence, participation), &Default::default()).unwrap();
        assert_eq!(label.kind, RegimeKind::Chaoticlike);
    }

    #[test]
    fn participation_collapse_wins_over_everything() {
        // Even with near-maximal coherence, a collapsed participation ratio
        // must label the run self-focusing: the rules apply in order.
        let n = 101;
        let max = 2.0 * n as f64 - 1.0;
        let coherence = vec![max * 0.97; 4001];
        let participation = vec![10.0; 4001];
        let label = classify(&synthetic(n, coherence, participation), &Default::default()).unwrap();
        assert_eq!(label.kind, RegimeKind::SelfFocusing);
        assert!(label.diagnostics.mean_participation_frac < 0.25);
    }

    #[test]
    fn short_record_is_rejected() {
        let n = 11;
        let config = WalkConfig::new(n, 0.0, 0.0, 10, 0).with_transient(8);
        let record = TrajectoryRecord {
            config,
            coherence: vec![1.0; 11],
            participation: vec![5.0; 11],
            density_snapshots: BTreeMap::new(),
        };
        assert!(matches!(
            classify(&record, &Default::default()),
            Err(Error::RecordTooShort { .. })
        ));
    }

    #[test]
    fn same_record_same_label() {
        let n = 101;
        let mut rng = SplitMix64::new(5);
        let coherence: Vec<f64> = (0..2001).map(|_| rng.uniform(120.0, 190.0)).collect();
        let participation: Vec<f64> = (0..2001).map(|_| rng.uniform(40.0, 90.0)).collect();
        let rec = synthetic(n, coherence, participation);
        let l1 = classify(&rec, &Default::default()).unwrap();
        let l2 = classify(&rec, &Default::default()).unwrap();
        assert_eq!(l1, l2);
    }
}
