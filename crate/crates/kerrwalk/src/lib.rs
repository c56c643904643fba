//! Nonlinear discrete-time quantum walks on a cycle.
//!
//! `kerrwalk` simulates a two-component quantum walker on an N-site ring
//! whose evolution alternates three operators each step: a Kerr-like
//! intensity-dependent phase, an SU(2) coin rotation, and a chirality-
//! conditioned cyclic shift. Starting from a weakly disturbed maximally
//! coherent state, the library tracks l1-norm coherence and participation
//! ratio, classifies the long-time dynamics into stationary, breathing,
//! chaoticlike, and self-focusing regimes, locates the critical nonlinearity
//! where the stationary distribution destabilizes, fits its scaling with
//! lattice size, and assembles chi-theta phase diagrams.
//!
//! Start with [`WalkConfig`] and [`evolve`] for a single trajectory, or the
//! [`regimes`] module for classification, threshold scans, and sweeps. Every
//! run is reproducible from its config: randomness comes from a pinned
//! SplitMix64 generator seeded per trajectory.
//!
//! The `examples/` directory demonstrates each capability end to end; the
//! `kerrwalk` binary exposes the same pipelines as subcommands.

pub mod cli;
pub mod config;
pub mod error;
pub mod io;
pub mod observables;
mod ops;
pub mod regimes;
pub mod rng;
pub mod state;
pub mod trajectory;

pub use config::WalkConfig;
pub use error::{Error, Result};
pub use state::{prepare_initial_state, WalkerState};
pub use trajectory::{evolve, RecordOptions, TrajectoryRecord};
