//! Second-order intensity correlation of two fields meeting on a beam splitter.
//!
//! For equal input amplitudes the normalized coincidence rate at zero delay is
//!
//! ```text
//! g²(0) = ⟨I₃I₄⟩ / (⟨I₃⟩⟨I₄⟩) = ½ (1 + cos 2(Δ + φ))
//! ```
//!
//! where `Δ = (k₁ − k₂)r − (ω₁ − ω₂)t` is the propagation phase and
//! `φ = φ₁ − φ₂` the initial phase difference. Perfect anticorrelation
//! (`g² = 0`) needs `Δ + φ = ±(n − ½)π`. Averaging over a uniformly random
//! `Δ` gives the incoherent value ½.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{bs_matrix, intensity, FieldPair, PlaneWaveField};
use crate::rng::PortableRng;

/// Relative phase between the two beam-splitter inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelativePhaseState {
    /// Propagation/detuning phase `Δ` (rad).
    pub delta: f64,
    /// Initial phase difference `φ₁ − φ₂` (rad).
    pub phi: f64,
}

impl RelativePhaseState {
    pub fn new(delta: f64, phi: f64) -> Result<Self> {
        if !delta.is_finite() {
            return Err(Error::invalid("delta", "must be finite"));
        }
        if !phi.is_finite() {
            return Err(Error::invalid("phi", "must be finite"));
        }
        Ok(Self { delta, phi })
    }

    /// The phase pair two plane waves present at `(r, t)`.
    pub fn induced(e1: &PlaneWaveField, e2: &PlaneWaveField, r: f64, t: f64) -> Self {
        Self {
            delta: (e1.wavevector() - e2.wavevector()) * r
                - (e1.angular_frequency() - e2.angular_frequency()) * t,
            phi: e1.initial_phase() - e2.initial_phase(),
        }
    }

    pub fn total(&self) -> f64 {
        self.delta + self.phi
    }
}

/// Output intensities and the normalized coincidence they imply.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationSample {
    pub i3: f64,
    pub i4: f64,
    pub product: f64,
    pub g2: f64,
}

/// One solution `φₙ = sign·(n − ½)π` of the anticorrelation condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnticorrelationSolution {
    pub n: u32,
    pub sign: i8,
    pub phase: f64,
}

impl AnticorrelationSolution {
    pub fn new(n: u32, sign: i8) -> Self {
        Self {
            n,
            sign,
            phase: f64::from(sign) * (f64::from(n) - 0.5) * PI,
        }
    }
}

/// `½(1 + cos 2(Δ + φ))`, always in `[0, 1]`.
pub fn g2_coherent(state: RelativePhaseState) -> f64 {
    0.5 * (1.0 + (2.0 * state.total()).cos())
}

/// Propagates two plane waves through the beam splitter and correlates the
/// output intensities at `(r, t)`.
///
/// The mean single-port intensity used for normalization is the
/// phase-averaged value `(E₀₁² + E₀₂²)/2`.
pub fn g2_from_fields(
    e1: &PlaneWaveField,
    e2: &PlaneWaveField,
    r: f64,
    t: f64,
) -> Result<CorrelationSample> {
    if e1.amplitude() <= 0.0 || e2.amplitude() <= 0.0 {
        return Err(Error::UndefinedCorrelation(
            "both inputs need a non-zero amplitude",
        ));
    }
    let out = bs_matrix().apply(FieldPair::new(e1.eval(r, t), e2.eval(r, t)));
    let (i3, i4) = out.intensities();
    let mean = 0.5 * (e1.amplitude().powi(2) + e2.amplitude().powi(2));
    let product = i3 * i4;
    Ok(CorrelationSample {
        i3,
        i4,
        product,
        g2: product / (mean * mean),
    })
}

/// Both signs of `φₙ` for `n = 1..=n_max`, ordered `+φ₁, −φ₁, +φ₂, …`.
pub fn anticorrelation_phases(n_max: u32) -> Result<Vec<AnticorrelationSolution>> {
    if n_max == 0 {
        return Err(Error::EmptyRange("n_max must be at least 1"));
    }
    Ok((1..=n_max)
        .flat_map(|n| [AnticorrelationSolution::new(n, 1), AnticorrelationSolution::new(n, -1)])
        .collect())
}

/// `(1/ΔT)∫₀^ΔT I_a I_b dt` by the trapezoidal rule on uniformly spaced samples
/// that include both window endpoints.
pub fn coincidence_time_average(trace_a: &[f64], trace_b: &[f64], window: f64) -> Result<f64> {
    if trace_a.len() != trace_b.len() {
        return Err(Error::invalid(
            "trace_b",
            format!("length {} differs from trace_a length {}", trace_b.len(), trace_a.len()),
        ));
    }
    if trace_a.len() < 2 {
        return Err(Error::invalid("trace_a", "needs at least 2 samples"));
    }
    if !(window.is_finite() && window > 0.0) {
        return Err(Error::invalid("window", "must be > 0"));
    }
    let last = trace_a.len() - 1;
    let interior: f64 = (1..last).map(|i| trace_a[i] * trace_b[i]).sum();
    let ends = 0.5 * (trace_a[0] * trace_b[0] + trace_a[last] * trace_b[last]);
    let step = window / last as f64;
    Ok((ends + interior) * step / window)
}

/// Output-port intensity traces `(I₃(t), I₄(t))` on `samples` uniform points
/// spanning `[0, window]`, observed at position `r`.
pub fn output_intensity_traces(
    e1: &PlaneWaveField,
    e2: &PlaneWaveField,
    r: f64,
    window: f64,
    samples: usize,
) -> Result<(Vec<f64>, Vec<f64>)> {
    if samples < 2 {
        return Err(Error::invalid("samples", "needs at least 2 samples"));
    }
    if !(window.is_finite() && window > 0.0) {
        return Err(Error::invalid("window", "must be > 0"));
    }
    let bs = bs_matrix();
    let step = window / (samples - 1) as f64;
    Ok((0..samples)
        .map(|i| {
            let t = i as f64 * step;
            bs.apply(FieldPair::new(e1.eval(r, t), e2.eval(r, t))).intensities()
        })
        .unzip())
}

/// Mean of [`g2_coherent`] over `Δ` drawn uniformly from `[0, 2π)`.
///
/// Draws come from [`PortableRng`] and are accumulated in draw order.
pub fn incoherent_baseline(n_samples: u64, seed: u64, phi: f64) -> Result<f64> {
    if n_samples == 0 {
        return Err(Error::invalid("n_samples", "must be >= 1"));
    }
    if !phi.is_finite() {
        return Err(Error::invalid("phi", "must be finite"));
    }
    let mut rng = PortableRng::from_seed(seed);
    let mut sum = 0.0;
    for _ in 0..n_samples {
        sum += g2_coherent(RelativePhaseState {
            delta: rng.angle(),
            phi,
        });
    }
    Ok(sum / n_samples as f64)
}

/// Neumaier-compensated running sum.
#[derive(Default)]
struct Sum {
    total: f64,
    carry: f64,
}

impl Sum {
    fn add(&mut self, x: f64) {
        let t = self.total + x;
        if self.total.abs() >= x.abs() {
            self.carry += (self.total - t) + x;
        } else {
            self.carry += (x - t) + self.total;
        }
        self.total = t;
    }

    fn value(&self) -> f64 {
        self.total + self.carry
    }
}

/// `⟨I₃I₄⟩ / (⟨I₃⟩⟨I₄⟩)` for a stream of single-input amplitudes split on the
/// beam splitter with an empty second port.
pub fn split_g2<It>(inputs: It) -> Result<f64>
where
    It: IntoIterator<Item = Complex64>,
{
    let bs = bs_matrix();
    let (mut s3, mut s4, mut s34, mut n) = (Sum::default(), Sum::default(), Sum::default(), 0u64);
    for e in inputs {
        let out = bs.apply(FieldPair::single(e));
        let (i3, i4) = (intensity(out.port_a), intensity(out.port_b));
        s3.add(i3);
        s4.add(i4);
        s34.add(i3 * i4);
        n += 1;
    }
    let (s3, s4, s34) = (s3.value(), s4.value(), s34.value());
    if n == 0 {
        return Err(Error::EmptyRange("no input samples"));
    }
    if s3 <= 0.0 || s4 <= 0.0 {
        return Err(Error::UndefinedCorrelation("mean output intensity is zero"));
    }
    let n = n as f64;
    Ok((s34 / n) / ((s3 / n) * (s4 / n)))
}

/// Thermal (chaotic) light on one input: each event's amplitude is a
/// circular complex Gaussian with `⟨|E|²⟩ = 1`. Expected value 2.
pub fn hbt_chaotic_g2(n_samples: u64, seed: u64) -> Result<f64> {
    if n_samples == 0 {
        return Err(Error::invalid("n_samples", "must be >= 1"));
    }
    let mut rng = PortableRng::from_seed(seed);
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    split_g2((0..n_samples).map(move |_| {
        let (x, y) = rng.normal_pair();
        Complex64::new(scale * x, scale * y)
    }))
}
