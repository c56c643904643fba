//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Lattice must have at least two sites.
    #[error("lattice too small: N = {0}, need N >= 2")]
    LatticeTooSmall(usize),

    /// Noise amplitude would allow non-positive draw magnitudes.
    #[error("noise amplitude {epsilon} >= 1/sqrt(2N) = {limit}; draws could leave the positive interval")]
    EpsilonTooLarge { epsilon: f64, limit: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// `transient_steps` must leave a non-empty averaging window.
    #[error("transient ({transient}) must be smaller than total steps ({total})")]
    TransientTooLong { transient: usize, total: usize },

    /// Unit norm violated during evolution.
    #[error("norm drifted to |1 - norm| = {deviation:.3e} at step {step} (limit {limit:.0e})")]
    NormDrift {
        step: usize,
        deviation: f64,
        limit: f64,
    },

    /// A probability vector did not sum to one.
    #[error("density not normalized: sum = {sum} (tolerance {tolerance:.0e})")]
    DensityNotNormalized { sum: f64, tolerance: f64 },

    /// Time-series reduction over an empty window.
    #[error("empty window: transient index {transient} leaves no samples in a series of length {len}")]
    EmptyWindow { transient: usize, len: usize },

    /// Trajectory too short to classify against its transient.
    #[error("record too short: {steps} steps cannot cover twice the transient of {transient}")]
    RecordTooShort { steps: usize, transient: usize },

    /// The zero-nonlinearity reference run failed the stationarity check.
    #[error("baseline run at chi = 0 is not stationary (coherence minimum fraction {min_frac:.3}); check N, epsilon, and step count")]
    UnstableBaseline { min_frac: f64 },

    #[error("scan range must start at chi = 0 (got {0})")]
    ScanMustStartAtZero(f64),

    /// Power-law fit needs detected, positive thresholds.
    #[error("cannot fit scaling: {0}")]
    ScalingFit(String),

    #[error("failed to build thread pool: {0}")]
    ThreadPool(String),

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}
