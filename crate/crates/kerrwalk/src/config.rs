//! Run configuration: everything needed to reproduce one trajectory.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Full provenance of a single walk trajectory.
///
/// A trajectory is completely determined by these fields; two runs with equal
/// configs produce bitwise-identical records.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WalkConfig {
    /// Number of lattice sites on the cycle.
    pub n_sites: usize,
    /// Coin angle in radians.
    pub theta: f64,
    /// Nonlinear strength of the intensity-dependent phase.
    pub chi: f64,
    /// Half-width of the uniform interval the initial amplitudes are drawn
    /// from, centered on 1/sqrt(2N).
    pub epsilon: f64,
    /// Seed of the deterministic generator used for the initial disturbance.
    pub seed: u64,
    /// Number of evolution steps.
    pub total_steps: usize,
    /// Steps discarded before long-time statistics.
    pub transient_steps: usize,
}

impl WalkConfig {
    /// Config with the conventional weak-noise amplitude `1e-3/sqrt(2N)` and
    /// a half-trajectory transient.
    pub fn new(n_sites: usize, theta: f64, chi: f64, total_steps: usize, seed: u64) -> Self {
        Self {
            n_sites,
            theta,
            chi,
            epsilon: Self::default_epsilon(n_sites),
            seed,
            total_steps,
            transient_steps: total_steps / 2,
        }
    }

    /// The weak-noise default: `1e-3 / sqrt(2N)`.
    pub fn default_epsilon(n_sites: usize) -> f64 {
        1e-3 / (2.0 * n_sites as f64).sqrt()
    }

    /// Largest admissible noise amplitude, `1/sqrt(2N)`; at or above this the
    /// draw interval would include non-positive magnitudes.
    pub fn epsilon_limit(&self) -> f64 {
        1.0 / (2.0 * self.n_sites as f64).sqrt()
    }

    /// True when the lattice size is even. The uniform limiting distribution
    /// the stationary regime relies on holds for odd N; even N is allowed for
    /// exploration but callers should surface this flag.
    pub fn even_sites_warning(&self) -> bool {
        self.n_sites % 2 == 0
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_sites < 2 {
            return Err(Error::LatticeTooSmall(self.n_sites));
        }
        if !self.theta.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "theta must be finite, got {}",
                self.theta
            )));
        }
        if !self.chi.is_finite() || self.chi < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "chi must be finite and >= 0, got {}",
                self.chi
            )));
        }
        if !self.epsilon.is_finite() || self.epsilon < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "epsilon must be finite and >= 0, got {}",
                self.epsilon
            )));
        }
        if self.epsilon >= self.epsilon_limit() {
            return Err(Error::EpsilonTooLarge {
                epsilon: self.epsilon,
                limit: self.epsilon_limit(),
            });
        }
        // A zero-step run is a valid degenerate case (only the initial
        // observation); otherwise the transient must leave a window.
        if self.total_steps > 0 && self.transient_steps >= self.total_steps {
            return Err(Error::TransientTooLong {
                transient: self.transient_steps,
                total: self.total_steps,
            });
        }
        if self.total_steps == 0 && self.transient_steps != 0 {
            return Err(Error::TransientTooLong {
                transient: self.transient_steps,
                total: self.total_steps,
            });
        }
        Ok(())
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_transient(mut self, transient_steps: usize) -> Self {
        self.transient_steps = transient_steps;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_chi(mut self, chi: f64) -> Self {
        self.chi = chi;
        self
    }

    pub fn with_theta(mut self, theta: f64) -> Self {
        self.theta = theta;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn default_epsilon_matches_weak_noise_convention() {
        let c = WalkConfig::new(101, PI / 4.0, 0.0, 100, 1);
        assert!((c.epsilon - 1e-3 / 202f64.sqrt()).abs() < 1e-18);
    }

    #[test]
    fn valid_config_passes() {
        WalkConfig::new(5, PI / 3.0, 0.4, 1000, 7).validate().unwrap();
    }

    #[test]
    fn rejects_tiny_lattice() {
        let c = WalkConfig::new(1, 0.0, 0.0, 10, 0);
        assert!(matches!(c.validate(), Err(Error::LatticeTooSmall(1))));
    }

    #[test]
    fn rejects_transient_at_or_past_total() {
        let c = WalkConfig::new(5, 0.0, 0.0, 10, 0).with_transient(10);
        assert!(matches!(c.validate(), Err(Error::TransientTooLong { .. })));
    }

    #[test]
    fn zero_steps_is_a_valid_degenerate_run() {
        let c = WalkConfig::new(5, 0.0, 0.0, 0, 0);
        c.validate().unwrap();
        assert!(matches!(
            WalkConfig::new(5, 0.0, 0.0, 0, 0).with_transient(1).validate(),
            Err(Error::TransientTooLong { .. })
        ));
    }

    #[test]
    fn rejects_epsilon_at_limit() {
        let n = 5;
        let c = WalkConfig::new(n, 0.0, 0.0, 10, 0).with_epsilon(1.0 / 10f64.sqrt());
        assert!(matches!(c.validate(), Err(Error::EpsilonTooLarge { .. })));
    }

    #[test]
    fn rejects_negative_chi() {
        let c = WalkConfig::new(5, 0.0, -0.1, 10, 0);
        assert!(matches!(c.validate(), Err(Error::InvalidConfig(_))));
    }

    #[test]
    fn even_lattice_raises_flag() {
        assert!(WalkConfig::new(10, 0.0, 0.0, 10, 0).even_sites_warning());
        assert!(!WalkConfig::new(11, 0.0, 0.0, 10, 0).even_sites_warning());
    }
}
