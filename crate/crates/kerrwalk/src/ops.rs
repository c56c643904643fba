//! The elementary walk operators and their per-step composition.
//!
//! One step applies, in order: the intensity-dependent phase (evaluated on
//! the incoming amplitudes), the coin rotation, and the conditional cyclic
//! shift. All three preserve the norm, so no renormalization happens during
//! evolution.

use num_complex::Complex64;

use crate::state::WalkerState;

impl WalkerState {
    /// Kerr-like self-phase modulation: each component acquires the phase
    /// `2*pi*chi*|amplitude|^2`. Magnitudes are untouched.
    pub fn apply_nonlinear_phase(&mut self, chi: f64) {
        if chi == 0.0 {
            return;
        }
        let scale = 2.0 * std::f64::consts::PI * chi;
        let (right, left) = self.amps_mut();
        for z in right.iter_mut().chain(left.iter_mut()) {
            let (sin, cos) = (scale * z.norm_sqr()).sin_cos();
            *z *= Complex64::new(cos, sin);
        }
        debug_assert!((self.norm_sqr() - 1.0).abs() < 1e-12);
    }

    /// Coin rotation mixing the chirality pair at every site:
    /// `(a, b) <- (cos(theta) a - sin(theta) b, sin(theta) a + cos(theta) b)`.
    pub fn apply_coin(&mut self, theta: f64) {
        let (sin, cos) = theta.sin_cos();
        let (right, left) = self.amps_mut();
        for (a, b) in right.iter_mut().zip(left.iter_mut()) {
            let (a0, b0) = (*a, *b);
            *a = cos * a0 - sin * b0;
            *b = sin * a0 + cos * b0;
        }
        debug_assert!((self.norm_sqr() - 1.0).abs() < 1e-12);
    }

    /// Conditional shift with periodic boundaries: right movers advance one
    /// site, left movers retreat one site. A pure permutation within each
    /// chirality.
    pub fn apply_shift(&mut self) {
        self.amps_right_mut().rotate_right(1);
        self.amps_left_mut().rotate_left(1);
    }

    /// One full evolution step: nonlinear phase (on the incoming state), then
    /// coin, then shift. Increments the time step.
    pub fn step(&mut self, theta: f64, chi: f64) {
        self.apply_nonlinear_phase(chi);
        self.apply_coin(theta);
        self.apply_shift();
        self.set_time_step(self.time_step() + 1);
        debug_assert!((self.norm_sqr() - 1.0).abs() < 1e-12);
    }
}
