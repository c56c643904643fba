//! Critical-nonlinearity detection.
//!
//! The stationary state destabilizes above a critical nonlinear strength.
//! The fingerprint is a discontinuous drop in the post-transient coherence
//! minimum: below threshold the minimum stays near the maximum coherence,
//! above it the developing oscillations pull it far down. The scanner walks a
//! coarse chi grid, finds the first drop past a fixed fraction of the linear
//! baseline, and sharpens the crossing by bisection.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::WalkConfig;
use crate::error::{Error, Result};
use crate::observables::coherence_minimum;
use crate::rng::combine_seed;
use crate::trajectory::{evolve, RecordOptions};

use super::classifier::{classify, ClassifierThresholds, RegimeKind};
use super::install_pool;

/// How trajectory seeds are chosen across a scan or sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeedPolicy {
    /// Every run uses the template seed: one disturbance realization probed
    /// across all parameters. Keeps threshold crossings sharp.
    #[default]
    Fixed,
    /// Seed derived from the template seed and the parameter values, so each
    /// (chi, theta) point sees an independent disturbance.
    PerValue,
}

impl SeedPolicy {
    pub fn seed_for(&self, base: u64, chi: f64, theta: f64) -> u64 {
        match self {
            SeedPolicy::Fixed => base,
            SeedPolicy::PerValue => combine_seed(base, chi.to_bits(), theta.to_bits()),
        }
    }
}

/// Scan plan over the nonlinear strength. The coarse grid covers
/// `[0, chi_stop]` with `points` samples; the crossing is then refined down
/// to `resolution` by bisection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChiScan {
    pub chi_stop: f64,
    pub points: usize,
    /// Target width of the bisection bracket.
    pub resolution: f64,
    /// Trip when the coherence minimum falls below
    /// `(1 - drop_frac) * baseline_min`.
    pub drop_frac: f64,
}

impl ChiScan {
    pub fn new(chi_stop: f64, points: usize) -> Self {
        Self {
            chi_stop,
            points,
            resolution: 1e-4,
            drop_frac: 0.1,
        }
    }

    pub fn with_resolution(mut self, resolution: f64) -> Self {
        self.resolution = resolution;
        self
    }

    pub fn with_drop_frac(mut self, drop_frac: f64) -> Self {
        self.drop_frac = drop_frac;
        self
    }

    /// The coarse chi grid, starting at zero.
    pub fn grid(&self) -> Vec<f64> {
        let step = self.chi_stop / (self.points - 1) as f64;
        (0..self.points).map(|k| k as f64 * step).collect()
    }

    fn validate(&self) -> Result<()> {
        if self.points < 2 {
            return Err(Error::InvalidConfig(format!(
                "chi scan needs at least 2 points, got {}",
                self.points
            )));
        }
        if !(self.chi_stop > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "chi scan must extend past 0, got stop = {}",
                self.chi_stop
            )));
        }
        if !(self.resolution > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "scan resolution must be positive, got {}",
                self.resolution
            )));
        }
        if !(self.drop_frac > 0.0 && self.drop_frac < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "drop fraction must lie in (0, 1), got {}",
                self.drop_frac
            )));
        }
        Ok(())
    }
}

/// One coarse-scan sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChiScanSample {
    pub chi: f64,
    pub coherence_min: f64,
}

/// Result of a critical-nonlinearity scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChiScanOutcome {
    /// Detected critical nonlinearity; `None` when nothing in the scanned
    /// range destabilized the stationary state.
    pub chi_sd: Option<f64>,
    /// Post-transient coherence minimum of the linear (chi = 0) baseline.
    pub baseline_min: f64,
    /// The coarse-scan curve, for plotting the drop.
    pub samples: Vec<ChiScanSample>,
}

fn min_at(template: &WalkConfig, chi: f64, policy: SeedPolicy) -> Result<f64> {
    let config = template
        .clone()
        .with_chi(chi)
        .with_seed(policy.seed_for(template.seed, chi, template.theta));
    let record = evolve(&config, &RecordOptions::default())?;
    coherence_minimum(&record.coherence, config.transient_steps)
}

/// Locate the critical nonlinearity for the template's coin angle and
/// lattice size.
///
/// Runs the coarse scan (in parallel when called inside a rayon pool),
/// requires the chi = 0 baseline to classify as stationary, and bisects the
/// first tripped interval down to `scan.resolution`. Returns the full scan
/// curve alongside the threshold.
pub fn find_critical_chi(
    template: &WalkConfig,
    scan: &ChiScan,
    policy: SeedPolicy,
    thresholds: &ClassifierThresholds,
) -> Result<ChiScanOutcome> {
    scan.validate()?;
    template.validate()?;

    // Baseline: the linear run must itself be stationary, otherwise the drop
    // criterion is meaningless.
    let baseline_cfg = template
        .clone()
        .with_chi(0.0)
        .with_seed(policy.seed_for(template.seed, 0.0, template.theta));
    let baseline = evolve(&baseline_cfg, &RecordOptions::default())?;
    let label = classify(&baseline, thresholds)?;
    if label.kind != RegimeKind::Stationary {
        return Err(Error::UnstableBaseline {
            min_frac: label.diagnostics.coherence_min / (2.0 * template.n_sites as f64 - 1.0),
        });
    }
    let baseline_min = coherence_minimum(&baseline.coherence, template.transient_steps)?;
    let trip_level = (1.0 - scan.drop_frac) * baseline_min;

    let grid = scan.grid();
    let mins: Vec<f64> = grid[1..]
        .par_iter()
        .map(|&chi| min_at(template, chi, policy))
        .collect::<Result<_>>()?;

    let mut samples = vec![ChiScanSample {
        chi: 0.0,
        coherence_min: baseline_min,
    }];
    samples.extend(
        grid[1..]
            .iter()
            .zip(&mins)
            .map(|(&chi, &coherence_min)| ChiScanSample { chi, coherence_min }),
    );

    let first_tripped = samples.iter().position(|s| s.coherence_min < trip_level);
    let Some(hit) = first_tripped else {
        return Ok(ChiScanOutcome {
            chi_sd: None,
            baseline_min,
            samples,
        });
    };

    // Bisect between the last stable point and the first tripped one.
    let mut lo = samples[hit - 1].chi;
    let mut hi = samples[hit].chi;
    while hi - lo > scan.resolution {
        let mid = 0.5 * (lo + hi);
        if min_at(template, mid, policy)? < trip_level {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    Ok(ChiScanOutcome {
        chi_sd: Some(hi),
        baseline_min,
        samples,
    })
}

/// Critical nonlinearity at one coin angle, or the reason it is missing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdPoint {
    pub theta: f64,
    /// Detected threshold; `None` with `error: None` means the scan completed
    /// without tripping.
    pub chi_sd: Option<f64>,
    pub error: Option<String>,
}

/// Critical nonlinearity as a function of the coin angle at fixed size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdCurve {
    pub n_sites: usize,
    pub points: Vec<ThresholdPoint>,
}

impl ThresholdCurve {
    pub fn detected(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.points
            .iter()
            .filter_map(|p| p.chi_sd.map(|c| (p.theta, c)))
    }
}

/// Run [`find_critical_chi`] at every angle of `theta_grid`.
///
/// Points run in parallel on a pool of `threads` workers (0 = one per core);
/// per-point failures are recorded on the point rather than aborting the
/// curve. Output is identical at any thread count.
pub fn threshold_curve(
    theta_grid: &[f64],
    template: &WalkConfig,
    scan: &ChiScan,
    policy: SeedPolicy,
    thresholds: &ClassifierThresholds,
    threads: usize,
) -> Result<ThresholdCurve> {
    scan.validate()?;
    let points = install_pool(threads, || {
        theta_grid
            .par_iter()
            .map(|&theta| {
                let template = template.clone().with_theta(theta);
                match find_critical_chi(&template, scan, policy, thresholds) {
                    Ok(outcome) => ThresholdPoint {
                        theta,
                        chi_sd: outcome.chi_sd,
                        error: None,
                    },
                    Err(e) => ThresholdPoint {
                        theta,
                        chi_sd: None,
                        error: Some(e.to_string()),
                    },
                }
            })
            .collect()
    })?;
    Ok(ThresholdCurve {
        n_sites: template.n_sites,
        points,
    })
}
