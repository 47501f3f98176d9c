use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};

use super::{ScenarioError, MAX_ROWS, MAX_SEED};

type Check = Result<(), ScenarioError>;

fn positive(key: &str, v: f64) -> Check {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(ScenarioError::validation(key, format!("must be finite and > 0, got {v}")))
    }
}

fn finite(key: &str, v: f64) -> Check {
    if v.is_finite() {
        Ok(())
    } else {
        Err(ScenarioError::validation(key, "must be finite"))
    }
}

fn at_least_one(key: &str, n: u64) -> Check {
    if n >= 1 {
        Ok(())
    } else {
        Err(ScenarioError::validation(key, "must be >= 1"))
    }
}

fn seed(v: u64) -> Check {
    if v <= MAX_SEED {
        Ok(())
    } else {
        Err(ScenarioError::validation("seed", format!("must be <= 2^53 ({MAX_SEED})")))
    }
}

fn row_budget(key: &str, rows: f64) -> Check {
    if rows <= MAX_ROWS as f64 {
        Ok(())
    } else {
        Err(ScenarioError::validation(
            key,
            format!("grid would produce {rows:.0} rows (limit {MAX_ROWS})"),
        ))
    }
}

/// Checks a `[min, max]` ramp with positive step; returns its point count.
fn ramp(min_key: &str, min: f64, max_key: &str, max: f64, step_key: &str, step: f64) -> Result<f64, ScenarioError> {
    finite(min_key, min)?;
    finite(max_key, max)?;
    positive(step_key, step)?;
    if max < min {
        return Err(ScenarioError::validation(max_key, format!("must be >= {min_key}")));
    }
    Ok(((max - min) / step).floor() + 1.0)
}

/// Checks a `[−half, half]` grid anchored at zero; returns its point count.
fn symmetric(half_key: &str, half: f64, step_key: &str, step: f64) -> Result<f64, ScenarioError> {
    positive(half_key, half)?;
    positive(step_key, step)?;
    if step > half {
        return Err(ScenarioError::validation(step_key, format!("must be <= {half_key}")));
    }
    Ok(2.0 * (half / step).floor() + 1.0)
}

/// g² against the input phase difference at fixed `Δ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PhiSweep {
    /// Sweep covers `[−phi_max, phi_max]` (rad).
    pub phi_max: f64,
    pub phi_step: f64,
    /// Propagation phase `Δ` (rad).
    pub delta: f64,
}

impl Default for PhiSweep {
    fn default() -> Self {
        Self {
            phi_max: TAU,
            phi_step: PI / 200.0,
            delta: 0.0,
        }
    }
}

impl PhiSweep {
    pub fn validate(&self) -> Check {
        let n = symmetric("phi_max", self.phi_max, "phi_step", self.phi_step)?;
        row_budget("phi_step", n)?;
        finite("delta", self.delta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sampling {
    /// Uniform detuning grid with Gaussian weights.
    Grid,
    /// Equal-weight Gaussian draws.
    MonteCarlo,
}

/// HOM dip: ensemble g² and its closed form against delay.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct HomDip {
    pub bw_ghz: f64,
    pub step_ghz: f64,
    pub span_ghz: f64,
    pub phi: f64,
    pub delta_c_ghz: f64,
    pub tau_min_ps: f64,
    pub tau_max_ps: f64,
    pub tau_step_ps: f64,
    pub sampling: Sampling,
    /// Draw count for `monte-carlo` sampling.
    pub n_samples: u64,
    pub seed: u64,
}

impl Default for HomDip {
    fn default() -> Self {
        Self {
            bw_ghz: 100.0,
            step_ghz: 2.0,
            span_ghz: 200.0,
            phi: FRAC_PI_2,
            delta_c_ghz: 0.0,
            tau_min_ps: 0.0,
            tau_max_ps: 100.0,
            tau_step_ps: 0.1,
            sampling: Sampling::Grid,
            n_samples: 201,
            seed: 1,
        }
    }
}

fn spectrum_checks(bw: f64, step: f64, span: f64) -> Check {
    positive("bw_ghz", bw)?;
    positive("step_ghz", step)?;
    positive("span_ghz", span)?;
    if span < step {
        return Err(ScenarioError::validation("span_ghz", "must be >= step_ghz"));
    }
    row_budget("step_ghz", 2.0 * (span / step).floor() + 1.0)
}

impl HomDip {
    pub fn validate(&self) -> Check {
        positive("bw_ghz", self.bw_ghz)?;
        if self.sampling == Sampling::Grid {
            spectrum_checks(self.bw_ghz, self.step_ghz, self.span_ghz)?;
        }
        finite("phi", self.phi)?;
        finite("delta_c_ghz", self.delta_c_ghz)?;
        let n = ramp(
            "tau_min_ps",
            self.tau_min_ps,
            "tau_max_ps",
            self.tau_max_ps,
            "tau_step_ps",
            self.tau_step_ps,
        )?;
        row_budget("tau_step_ps", n)?;
        at_least_one("n_samples", self.n_samples)?;
        if self.n_samples > MAX_ROWS as u64 {
            return Err(ScenarioError::validation("n_samples", format!("must be <= {MAX_ROWS}")));
        }
        seed(self.seed)
    }
}

/// g² over a (delay, phase) grid for the degenerate ensemble.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PhiMap {
    pub bw_ghz: f64,
    pub step_ghz: f64,
    pub span_ghz: f64,
    pub tau_min_ps: f64,
    pub tau_max_ps: f64,
    pub tau_step_ps: f64,
    pub phi_max: f64,
    pub phi_step: f64,
    /// Explicit phases; replaces the `phi_max`/`phi_step` grid when present.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phis: Option<Vec<f64>>,
}

impl Default for PhiMap {
    fn default() -> Self {
        Self {
            bw_ghz: 100.0,
            step_ghz: 2.0,
            span_ghz: 200.0,
            tau_min_ps: 0.0,
            tau_max_ps: 100.0,
            tau_step_ps: 1.0,
            phi_max: TAU,
            phi_step: PI / 40.0,
            phis: None,
        }
    }
}

impl PhiMap {
    pub fn validate(&self) -> Check {
        spectrum_checks(self.bw_ghz, self.step_ghz, self.span_ghz)?;
        let n_tau = ramp(
            "tau_min_ps",
            self.tau_min_ps,
            "tau_max_ps",
            self.tau_max_ps,
            "tau_step_ps",
            self.tau_step_ps,
        )?;
        let n_phi = match &self.phis {
            Some(phis) => {
                if phis.is_empty() {
                    return Err(ScenarioError::validation("phis", "must not be empty"));
                }
                if phis.iter().any(|p| !p.is_finite()) {
                    return Err(ScenarioError::validation("phis", "values must be finite"));
                }
                phis.len() as f64
            }
            None => symmetric("phi_max", self.phi_max, "phi_step", self.phi_step)?,
        };
        row_budget("tau_step_ps", n_tau * n_phi)
    }
}

/// MZI output intensities and normalized correlation against `ψ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MziSweep {
    /// Sweep covers `[−psi_max, psi_max]` (rad), anchored at `ψ = 0`.
    pub psi_max: f64,
    pub psi_step: f64,
    pub e0: f64,
    pub input_port: u8,
}

impl Default for MziSweep {
    fn default() -> Self {
        Self {
            psi_max: TAU,
            psi_step: 0.01,
            e0: 1.0,
            input_port: 1,
        }
    }
}

impl MziSweep {
    pub fn validate(&self) -> Check {
        let n = symmetric("psi_max", self.psi_max, "psi_step", self.psi_step)?;
        row_budget("psi_step", n)?;
        positive("e0", self.e0)?;
        if !matches!(self.input_port, 1 | 2) {
            return Err(ScenarioError::validation("input_port", "must be 1 or 2"));
        }
        Ok(())
    }
}

/// Monte-Carlo mean of g² over a uniformly random `Δ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Baseline {
    pub n_samples: u64,
    pub seed: u64,
    pub phi: f64,
}

impl Default for Baseline {
    fn default() -> Self {
        Self {
            n_samples: 100_000,
            seed: 1,
            phi: 0.0,
        }
    }
}

impl Baseline {
    pub fn validate(&self) -> Check {
        at_least_one("n_samples", self.n_samples)?;
        seed(self.seed)?;
        finite("phi", self.phi)
    }
}

/// Thermal light split on one beam splitter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Hbt {
    pub n_samples: u64,
    pub seed: u64,
}

impl Default for Hbt {
    fn default() -> Self {
        Self {
            n_samples: 1_000_000,
            seed: 1,
        }
    }
}

impl Hbt {
    pub fn validate(&self) -> Check {
        at_least_one("n_samples", self.n_samples)?;
        seed(self.seed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StreamMode {
    PhaseSign,
    PsiChoice,
}

/// Random-choice bunching events.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BunchingStream {
    pub n_events: u64,
    pub seed: u64,
    pub mode: StreamMode,
}

impl Default for BunchingStream {
    fn default() -> Self {
        Self {
            n_events: 100_000,
            seed: 1,
            mode: StreamMode::PhaseSign,
        }
    }
}

impl BunchingStream {
    pub fn validate(&self) -> Check {
        at_least_one("n_events", self.n_events)?;
        row_budget("n_events", self.n_events as f64)?;
        seed(self.seed)
    }
}

/// The detuning distribution itself.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Spectrum {
    pub bw_ghz: f64,
    pub step_ghz: f64,
    pub span_ghz: f64,
}

impl Default for Spectrum {
    fn default() -> Self {
        Self {
            bw_ghz: 100.0,
            step_ghz: 2.0,
            span_ghz: 200.0,
        }
    }
}

impl Spectrum {
    pub fn validate(&self) -> Check {
        spectrum_checks(self.bw_ghz, self.step_ghz, self.span_ghz)
    }
}
