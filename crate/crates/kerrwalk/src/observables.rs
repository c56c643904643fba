//! Coherence and localization diagnostics.

use crate::error::{Error, Result};
use crate::state::WalkerState;

/// Sum tolerance accepted by [`participation_ratio`].
pub const DENSITY_SUM_TOLERANCE: f64 = 1e-8;

/// l1-norm coherence of a pure state in the site x chirality basis.
///
/// For a pure state the sum of absolute off-diagonal density-matrix elements
/// collapses to `(sum_i |psi_i|)^2 - 1`, an O(N) pass over the 2N components.
/// A maximally coherent state reaches `2N - 1`; any basis state gives 0.
pub fn l1_coherence(state: &WalkerState) -> f64 {
    let abs_sum: f64 = state.components().map(|z| z.norm()).sum();
    abs_sum * abs_sum - 1.0
}

/// Probability of finding the walker at each site: `P_n = |a_n|^2 + |b_n|^2`.
pub fn site_density(state: &WalkerState) -> Vec<f64> {
    state
        .amps_right()
        .iter()
        .zip(state.amps_left())
        .map(|(a, b)| a.norm_sqr() + b.norm_sqr())
        .collect()
}

/// Effective number of occupied sites, `1 / sum_n P_n^2`.
///
/// Equals N for the uniform density and 1 for a single-site concentration.
/// Rejects inputs whose total probability strays from one by more than
/// [`DENSITY_SUM_TOLERANCE`].
pub fn participation_ratio(density: &[f64]) -> Result<f64> {
    let sum: f64 = density.iter().sum();
    if (sum - 1.0).abs() > DENSITY_SUM_TOLERANCE {
        return Err(Error::DensityNotNormalized {
            sum,
            tolerance: DENSITY_SUM_TOLERANCE,
        });
    }
    Ok(1.0 / density.iter().map(|p| p * p).sum::<f64>())
}

/// Arithmetic mean of `series[transient..]`.
pub fn long_time_average(series: &[f64], transient: usize) -> Result<f64> {
    let window = post_transient(series, transient)?;
    Ok(window.iter().sum::<f64>() / window.len() as f64)
}

/// Minimum of `series[transient..]`.
pub fn coherence_minimum(series: &[f64], transient: usize) -> Result<f64> {
    let window = post_transient(series, transient)?;
    Ok(window.iter().copied().fold(f64::INFINITY, f64::min))
}

fn post_transient(series: &[f64], transient: usize) -> Result<&[f64]> {
    if transient >= series.len() {
        return Err(Error::EmptyWindow {
            transient,
            len: series.len(),
        });
    }
    Ok(&series[transient..])
}
