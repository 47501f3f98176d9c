//! Second-order intensity correlation (g²) of classical coherent fields on a
//! beam splitter and in a Mach–Zehnder interferometer.
//!
//! * [`field`]: complex amplitudes, plane waves, 2×2 transfer matrices
//! * [`correlator`]: g² of two fields, anticorrelation phases, incoherent
//!   and thermal-light baselines
//! * [`hom`]: Hong–Ou–Mandel dip from a Gaussian spectral ensemble
//! * [`mzi`]: interferometer transfer, ψ sweeps, bunching-port routing
//! * [`scenario`]: JSON scenarios, sweep tables, CSV and gnuplot output
//!
//! Runnable walkthroughs of each capability live under `examples/`.

pub mod correlator;
pub mod error;
pub mod field;
pub mod hom;
pub mod mzi;
pub mod rng;
pub mod scenario;

pub use error::{Error, Result};
pub use field::{ComplexAmplitude, FieldPair, PlaneWaveField, TwoPortMatrix};

/// Unit conversions at the human-scale boundary (configs, CSV columns).
pub mod units {
    pub const GHZ: f64 = 1e9;
    pub const PS: f64 = 1e-12;
}
