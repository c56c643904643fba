//! Regime taxonomy of the nonlinear walk: classification of trajectories,
//! critical-nonlinearity scans, threshold scaling, and phase diagrams.

mod classifier;
mod diagram;
mod scaling;
mod spectrum;
mod threshold;

pub use classifier::{classify, ClassifierThresholds, RegimeDiagnostics, RegimeKind, RegimeLabel};
pub use diagram::{phase_diagram, DiagramCell, PhaseDiagramGrid};
pub use scaling::{fit_scaling, ScalingFit};
pub use spectrum::dominant_power_fraction;
pub use threshold::{
    find_critical_chi, threshold_curve, ChiScan, ChiScanOutcome, ChiScanSample, SeedPolicy,
    ThresholdCurve, ThresholdPoint,
};
