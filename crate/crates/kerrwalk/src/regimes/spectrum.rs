//! Spectral oscillation detector.

use num_complex::Complex64;
use rustfft::FftPlanner;

/// Fraction of the nonzero-frequency power carried by the dominant spectral
/// peak of the mean-subtracted series.
///
/// The discrete spectrum of the input is taken over the full window; the
/// "peak" is the strongest nonzero-frequency bin together with its two
/// neighbours, which absorbs the leakage of an off-bin oscillation. A clean
/// periodic signal scores near 1, broadband noise near 0. Series shorter
/// than 8 samples score 0.
pub fn dominant_power_fraction(series: &[f64]) -> f64 {
    let m = series.len();
    if m < 8 {
        return 0.0;
    }
    let mean = series.iter().sum::<f64>() / m as f64;
    let mut buf: Vec<Complex64> = series
        .iter()
        .map(|&x| Complex64::new(x - mean, 0.0))
        .collect();
    FftPlanner::new().plan_fft_forward(m).process(&mut buf);

    // Bins 1..=m/2 cover each physical frequency once for a real signal.
    let power: Vec<f64> = buf[1..=m / 2].iter().map(|z| z.norm_sqr()).collect();
    let total: f64 = power.iter().sum();
    if total <= 0.0 {
        return 0.0;
    }
    let peak = power
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap();
    let lo = peak.saturating_sub(1);
    let hi = (peak + 1).min(power.len() - 1);
    power[lo..=hi].iter().sum::<f64>() / total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use std::f64::consts::TAU;

    fn sinusoid(len: usize, cycles: f64, noise_amp: f64, seed: u64) -> Vec<f64> {
        let mut rng = SplitMix64::new(seed);
        (0..len)
            .map(|t| {
                (TAU * cycles * t as f64 / len as f64).sin()
                    + noise_amp * rng.uniform(-1.0, 1.0)
            })
            .collect()
    }

    #[test]
    fn pure_on_bin_sinusoid_concentrates_power() {
        let frac = dominant_power_fraction(&sinusoid(4096, 37.0, 0.0, 0));
        assert!(frac > 0.99, "fraction {frac}");
    }

    #[test]
    fn off_bin_sinusoid_still_dominates() {
        // Half-bin offset is the worst case for leakage.
        let frac = dominant_power_fraction(&sinusoid(4096, 37.5, 0.0, 0));
        assert!(frac > 0.8, "fraction {frac}");
    }

    #[test]
    fn sinusoid_with_ten_percent_noise_stays_dominant() {
        let frac = dominant_power_fraction(&sinusoid(5000, 21.3, 0.1, 42));
        assert!(frac >= 0.25, "fraction {frac}");
    }

    #[test]
    fn iid_noise_has_no_dominant_peak() {
        let mut rng = SplitMix64::new(7);
        let series: Vec<f64> = (0..5000).map(|_| rng.uniform(0.0, 1.0)).collect();
        let frac = dominant_power_fraction(&series);
        assert!(frac < 0.25, "fraction {frac}");
    }

    #[test]
    fn degenerate_series_score_zero() {
        assert_eq!(dominant_power_fraction(&[1.0; 4]), 0.0);
        assert_eq!(dominant_power_fraction(&[2.5; 100]), 0.0);
    }
}
