//! Hong–Ou–Mandel dip as a spectral ensemble of phase-matched pairs.
//!
//! Each pair `j` carries a frequency detuning `δⱼ` (Hz) from line center.
//! At delay `τ` it accumulates the phase `Δ = −2π(δⱼ + Δc)τ`, where `Δc` is
//! an optional center-frequency offset between the two photons, so its
//! contribution is
//!
//! ```text
//! g²ⱼ(τ) = ½(1 + cos 2(φ − 2π(δⱼ + Δc)τ))
//! ```
//!
//! The dip is the weighted sum over a Gaussian spectrum. For a continuous
//! Gaussian of standard deviation `σ` the sum has the closed form
//! `½(1 + cos 2(φ − 2πΔcτ) · exp(−8π²σ²τ²))`.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rng::PortableRng;

/// `σ / FWHM` for a Gaussian profile, `1 / (2√(2 ln 2))`.
pub fn fwhm_to_sigma(fwhm: f64) -> f64 {
    fwhm / (2.0 * (2.0 * std::f64::consts::LN_2).sqrt())
}

/// Discrete spectral distribution of pair detunings.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralEnsemble {
    detunings: Vec<f64>,
    weights: Vec<f64>,
    bandwidth_fwhm: f64,
}

impl SpectralEnsemble {
    /// Symmetric grid `δ = k·step`, `|δ| ≤ half_span`, with Gaussian weights
    /// normalized to one. `bw_fwhm` is the full width at half maximum.
    pub fn gaussian_grid(bw_fwhm: f64, step: f64, half_span: f64) -> Result<Self> {
        positive("bw_fwhm", bw_fwhm)?;
        positive("step", step)?;
        positive("half_span", half_span)?;
        if half_span < step {
            return Err(Error::invalid("half_span", "must be >= step"));
        }
        let sigma = fwhm_to_sigma(bw_fwhm);
        let k_max = (half_span / step + 1e-9).floor() as i64;
        let detunings: Vec<f64> = (-k_max..=k_max).map(|k| k as f64 * step).collect();
        let raw: Vec<f64> = detunings
            .iter()
            .map(|d| (-d * d / (2.0 * sigma * sigma)).exp())
            .collect();
        let total: f64 = raw.iter().sum();
        Ok(Self {
            detunings,
            weights: raw.into_iter().map(|w| w / total).collect(),
            bandwidth_fwhm: bw_fwhm,
        })
    }

    /// `n` detunings drawn from the Gaussian with equal weights, sorted.
    /// Coinciding draws are merged.
    pub fn gaussian_monte_carlo(bw_fwhm: f64, n: usize, seed: u64) -> Result<Self> {
        positive("bw_fwhm", bw_fwhm)?;
        if n == 0 {
            return Err(Error::invalid("n", "must be >= 1"));
        }
        let sigma = fwhm_to_sigma(bw_fwhm);
        let mut rng = PortableRng::from_seed(seed);
        let mut draws = Vec::with_capacity(n + 1);
        while draws.len() < n {
            let (a, b) = rng.normal_pair();
            draws.push(sigma * a);
            draws.push(sigma * b);
        }
        draws.truncate(n);
        draws.sort_by(f64::total_cmp);

        let w = 1.0 / n as f64;
        let mut detunings: Vec<f64> = Vec::with_capacity(n);
        let mut weights: Vec<f64> = Vec::with_capacity(n);
        for d in draws {
            if detunings.last() == Some(&d) {
                *weights.last_mut().unwrap() += w;
            } else {
                detunings.push(d);
                weights.push(w);
            }
        }
        Ok(Self {
            detunings,
            weights,
            bandwidth_fwhm: bw_fwhm,
        })
    }

    pub fn detunings(&self) -> &[f64] {
        &self.detunings
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn bandwidth_fwhm(&self) -> f64 {
        self.bandwidth_fwhm
    }

    pub fn sigma(&self) -> f64 {
        fwhm_to_sigma(self.bandwidth_fwhm)
    }

    pub fn len(&self) -> usize {
        self.detunings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.detunings.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.detunings.iter().copied().zip(self.weights.iter().copied())
    }

    /// Weighted ensemble g² at a single delay.
    pub fn g2_at(&self, tau: f64, phi: f64, delta_c: f64) -> f64 {
        self.iter()
            .map(|(d, w)| w * event_g2(d, tau, phi, delta_c))
            .sum()
    }
}

pub fn gaussian_spectral_grid(bw_fwhm: f64, step: f64, half_span: f64) -> Result<SpectralEnsemble> {
    SpectralEnsemble::gaussian_grid(bw_fwhm, step, half_span)
}

fn positive(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::invalid(name, "must be finite and > 0"))
    }
}

fn non_empty<T>(name: &'static str, v: &[T]) -> Result<()> {
    if v.is_empty() {
        Err(Error::invalid(name, "must not be empty"))
    } else {
        Ok(())
    }
}

/// g² of a single pair with detuning `delta` (Hz) at delay `tau` (s).
pub fn event_g2(delta: f64, tau: f64, phi: f64, delta_c: f64) -> f64 {
    let detuning_phase = -2.0 * PI * (delta + delta_c) * tau;
    0.5 * (1.0 + (2.0 * (detuning_phase + phi)).cos())
}

/// Single-pair trace over a delay grid.
pub fn event_trace(delta: f64, taus: &[f64], phi: f64, delta_c: f64) -> Vec<f64> {
    taus.iter().map(|&t| event_g2(delta, t, phi, delta_c)).collect()
}

/// Delay period `1/(2|δ|)` of a single-pair trace; infinite at `δ = 0`.
pub fn event_period(delta: f64) -> f64 {
    if delta == 0.0 {
        f64::INFINITY
    } else {
        1.0 / (2.0 * delta.abs())
    }
}

/// Delay of the first carrier maximum of a nondegenerate pair at `φ = π/2`,
/// `1/(4|Δc|)`. The Gaussian envelope does not depend on `Δc`.
pub fn first_beat_revival(delta_c: f64) -> f64 {
    if delta_c == 0.0 {
        f64::INFINITY
    } else {
        1.0 / (4.0 * delta_c.abs())
    }
}

/// An ensemble-averaged g² curve over a delay grid.
#[derive(Debug, Clone, PartialEq)]
pub struct HomDipCurve {
    pub taus: Vec<f64>,
    pub g2_values: Vec<f64>,
    pub phi: f64,
    pub delta_c: f64,
}

pub fn hom_dip_curve(
    ensemble: &SpectralEnsemble,
    taus: &[f64],
    phi: f64,
    delta_c: f64,
) -> Result<HomDipCurve> {
    non_empty("taus", taus)?;
    let g2_values = taus
        .par_iter()
        .map(|&tau| ensemble.g2_at(tau, phi, delta_c))
        .collect();
    Ok(HomDipCurve {
        taus: taus.to_vec(),
        g2_values,
        phi,
        delta_c,
    })
}

/// Exact average of [`event_g2`] over a continuous Gaussian spectrum.
pub fn hom_dip_closed_form(bw_fwhm: f64, tau: f64, phi: f64, delta_c: f64) -> Result<f64> {
    positive("bw_fwhm", bw_fwhm)?;
    let sigma = fwhm_to_sigma(bw_fwhm);
    let envelope = (-8.0 * PI * PI * sigma * sigma * tau * tau).exp();
    let carrier = (2.0 * (phi - 2.0 * PI * delta_c * tau)).cos();
    Ok(0.5 * (1.0 + carrier * envelope))
}

/// g² over a (delay, phase) grid, stored row-major by delay.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiMap {
    pub taus: Vec<f64>,
    pub phis: Vec<f64>,
    pub values: Vec<f64>,
}

impl PhiMap {
    pub fn get(&self, tau_index: usize, phi_index: usize) -> f64 {
        self.values[tau_index * self.phis.len() + phi_index]
    }

    pub fn row(&self, tau_index: usize) -> &[f64] {
        let n = self.phis.len();
        &self.values[tau_index * n..(tau_index + 1) * n]
    }

    pub fn column(&self, phi_index: usize) -> Vec<f64> {
        (0..self.taus.len()).map(|i| self.get(i, phi_index)).collect()
    }
}

/// Degenerate-pair (`Δc = 0`) ensemble g² for every `(τᵢ, φⱼ)`.
pub fn g2_phi_map(ensemble: &SpectralEnsemble, taus: &[f64], phis: &[f64]) -> Result<PhiMap> {
    non_empty("taus", taus)?;
    non_empty("phis", phis)?;
    let values = taus
        .par_iter()
        .flat_map_iter(|&tau| phis.iter().map(move |&phi| ensemble.g2_at(tau, phi, 0.0)))
        .collect();
    Ok(PhiMap {
        taus: taus.to_vec(),
        phis: phis.to_vec(),
        values,
    })
}
