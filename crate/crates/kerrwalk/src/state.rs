//! Walker state on the cycle: one complex spinor amplitude pair per site.

use num_complex::Complex64;

use crate::config::WalkConfig;
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Quantum state of the walker: right-mover amplitudes `a_n` and left-mover
/// amplitudes `b_n` on an N-site cycle, stored as two contiguous arrays so the
/// per-site coin rotation and the shift permutation run as linear passes.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkerState {
    amps_right: Vec<Complex64>,
    amps_left: Vec<Complex64>,
    time_step: usize,
}

impl WalkerState {
    /// Build a state from explicit amplitude arrays.
    ///
    /// Requires both chirality arrays to have the same length N >= 2. The
    /// caller is responsible for normalization; use [`WalkerState::norm`] to
    /// check.
    pub fn from_amplitudes(amps_right: Vec<Complex64>, amps_left: Vec<Complex64>) -> Result<Self> {
        if amps_right.len() != amps_left.len() {
            return Err(Error::InvalidConfig(format!(
                "chirality arrays differ in length: {} vs {}",
                amps_right.len(),
                amps_left.len()
            )));
        }
        if amps_right.len() < 2 {
            return Err(Error::LatticeTooSmall(amps_right.len()));
        }
        Ok(Self {
            amps_right,
            amps_left,
            time_step: 0,
        })
    }

    /// The uniform maximally coherent state: `a_n = 1/sqrt(2N)`,
    /// `b_n = i/sqrt(2N)` at every site.
    pub fn uniform(n_sites: usize) -> Result<Self> {
        if n_sites < 2 {
            return Err(Error::LatticeTooSmall(n_sites));
        }
        let c = 1.0 / (2.0 * n_sites as f64).sqrt();
        Ok(Self {
            amps_right: vec![Complex64::new(c, 0.0); n_sites],
            amps_left: vec![Complex64::new(0.0, c); n_sites],
            time_step: 0,
        })
    }

    pub fn n_sites(&self) -> usize {
        self.amps_right.len()
    }

    pub fn time_step(&self) -> usize {
        self.time_step
    }

    pub fn amps_right(&self) -> &[Complex64] {
        &self.amps_right
    }

    pub fn amps_left(&self) -> &[Complex64] {
        &self.amps_left
    }

    pub(crate) fn amps_right_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps_right
    }

    pub(crate) fn amps_left_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps_left
    }

    /// Both chirality arrays, mutably, for passes that touch every component.
    pub(crate) fn amps_mut(&mut self) -> (&mut [Complex64], &mut [Complex64]) {
        (&mut self.amps_right, &mut self.amps_left)
    }

    pub(crate) fn set_time_step(&mut self, t: usize) {
        self.time_step = t;
    }

    /// Total probability `sum_n |a_n|^2 + |b_n|^2`.
    pub fn norm_sqr(&self) -> f64 {
        self.amps_right
            .iter()
            .chain(self.amps_left.iter())
            .map(|z| z.norm_sqr())
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Rescale to unit norm.
    pub fn normalize(&mut self) {
        let n = self.norm();
        if n > 0.0 {
            let inv = 1.0 / n;
            for z in self.amps_right.iter_mut().chain(self.amps_left.iter_mut()) {
                *z *= inv;
            }
        }
    }

    /// Cyclically relabel sites: amplitude at site n moves to site n + k
    /// (mod N), both chiralities alike. The walk commutes with this.
    pub fn rotate_sites(&mut self, k: usize) {
        let n = self.n_sites();
        let k = k % n;
        self.amps_right.rotate_right(k);
        self.amps_left.rotate_right(k);
    }

    /// Iterate over all 2N components, right movers first.
    pub fn components(&self) -> impl Iterator<Item = &Complex64> {
        self.amps_right.iter().chain(self.amps_left.iter())
    }
}

/// Prepare the noisy maximally coherent initial state.
///
/// Each site draws an independent magnitude for the right mover (kept on the
/// real axis) and for the left mover (kept on the imaginary axis) uniformly
/// from `[1/sqrt(2N) - eps, 1/sqrt(2N) + eps]`, preserving the `(1, i)` phase
/// structure of the unperturbed state; the vector is then renormalized
/// globally. Draws are consumed in site order, all right movers before all
/// left movers, from a SplitMix64 stream seeded with `config.seed`, so the
/// state is reproducible from the config alone. With `eps = 0` this is
/// exactly the uniform state.
pub fn prepare_initial_state(config: &WalkConfig) -> Result<WalkerState> {
    config.validate()?;
    let n = config.n_sites;
    let center = 1.0 / (2.0 * n as f64).sqrt();
    let (lo, hi) = (center - config.epsilon, center + config.epsilon);

    let mut rng = SplitMix64::new(config.seed);
    let amps_right: Vec<Complex64> = (0..n)
        .map(|_| Complex64::new(rng.uniform(lo, hi), 0.0))
        .collect();
    let amps_left: Vec<Complex64> = (0..n)
        .map(|_| Complex64::new(0.0, rng.uniform(lo, hi)))
        .collect();

    let mut state = WalkerState {
        amps_right,
        amps_left,
        time_step: 0,
    };
    state.normalize();
    Ok(state)
}
