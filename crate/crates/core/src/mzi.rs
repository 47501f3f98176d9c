//! Mach–Zehnder interferometer and deterministic output bunching.
//!
//! The interferometer is beam splitter, phase shifter `diag(1, e^{iψ})`,
//! beam splitter. With light entering port 1 the outputs are
//! `I₃ = E₀² sin²(ψ/2)` and `I₄ = E₀² cos²(ψ/2)`, so `ψ = 0` sends
//! everything to port 4 and `ψ = π` to port 3.
//!
//! On a bare beam splitter, two equal inputs whose phase differs by `±π/2`
//! bunch into a single port. The sign picks the port:
//!
//! | phase on | `+π/2` | `−π/2` |
//! |----------|--------|--------|
//! | input 1  | port 3 | port 4 |
//! | input 2  | port 4 | port 3 |

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{bs_matrix, FieldPair, TwoPortMatrix};
use crate::rng::PortableRng;

/// Closed-form MZI transfer matrix
/// `½[[1 − e^{iψ}, i(1 + e^{iψ})], [i(1 + e^{iψ}), −(1 − e^{iψ})]]`.
pub fn mzi_transfer(psi: f64) -> TwoPortMatrix {
    let e = Complex64::from_polar(1.0, psi);
    let i = Complex64::i();
    let one = Complex64::new(1.0, 0.0);
    let diff = 0.5 * (one - e);
    let cross = 0.5 * i * (one + e);
    TwoPortMatrix::new(diff, cross, cross, -diff)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InputPort {
    One,
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutputPort {
    Three,
    Four,
}

impl OutputPort {
    pub fn number(self) -> u8 {
        match self {
            OutputPort::Three => 3,
            OutputPort::Four => 4,
        }
    }

    /// The port holding more light.
    fn brighter(fields: &FieldPair) -> Self {
        let (i3, i4) = fields.intensities();
        if i3 >= i4 {
            OutputPort::Three
        } else {
            OutputPort::Four
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MziConfig {
    pub psi: f64,
    pub input_port: InputPort,
    pub amplitude: f64,
}

impl MziConfig {
    pub fn new(psi: f64, input_port: InputPort, amplitude: f64) -> Result<Self> {
        if !psi.is_finite() {
            return Err(Error::invalid("psi", "must be finite"));
        }
        if !(amplitude.is_finite() && amplitude > 0.0) {
            return Err(Error::invalid("amplitude", "must be finite and > 0"));
        }
        Ok(Self {
            psi,
            input_port,
            amplitude,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MziOutput {
    pub fields: FieldPair,
    pub i3: f64,
    pub i4: f64,
}

pub fn mzi_outputs(config: &MziConfig) -> MziOutput {
    let e0 = Complex64::new(config.amplitude, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let input = match config.input_port {
        InputPort::One => FieldPair::new(e0, zero),
        InputPort::Two => FieldPair::new(zero, e0),
    };
    let fields = mzi_transfer(config.psi).apply(input);
    let (i3, i4) = fields.intensities();
    MziOutput { fields, i3, i4 }
}

/// Output intensity product normalized to unit peak, `sin²ψ`.
pub fn mzi_g2_normalized(psi: f64) -> f64 {
    psi.sin().powi(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhaseCarrier {
    Input1,
    Input2,
}

/// Port that receives all light when input `carrier` leads the other by
/// `sign·π/2`.
pub fn bunching_port(sign: i8, carrier: PhaseCarrier) -> OutputPort {
    match (sign > 0, carrier) {
        (true, PhaseCarrier::Input1) | (false, PhaseCarrier::Input2) => OutputPort::Three,
        (false, PhaseCarrier::Input1) | (true, PhaseCarrier::Input2) => OutputPort::Four,
    }
}

/// Beam-splitter outputs for two inputs of amplitude `e0` where `carrier`
/// has the extra phase `sign·π/2`.
pub fn bunching_fields(sign: i8, carrier: PhaseCarrier, e0: f64) -> FieldPair {
    let shifted = Complex64::from_polar(e0, f64::from(sign.signum()) * FRAC_PI_2);
    let plain = Complex64::new(e0, 0.0);
    let input = match carrier {
        PhaseCarrier::Input1 => FieldPair::new(shifted, plain),
        PhaseCarrier::Input2 => FieldPair::new(plain, shifted),
    };
    bs_matrix().apply(input)
}

/// How each event's random bit steers the light.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BunchingMode {
    /// The bit is the sign of `±π/2` on input 1 of a beam splitter (`E₀ = 1`).
    PhaseSign,
    /// The bit selects `ψ = π` (`+1`) or `ψ = 0` (`−1`) in an MZI fed on port 1 (`E₀ = 1`).
    PsiChoice,
}

/// `ψ` used by [`BunchingMode::PsiChoice`] for a given choice bit.
pub fn psi_for_choice(choice: i8) -> f64 {
    if choice > 0 {
        PI
    } else {
        0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BunchingEvent {
    pub choice: i8,
    pub output_port: OutputPort,
    pub i3: f64,
    pub i4: f64,
    pub coincidence_product: f64,
}

/// One event for a given choice bit; deterministic.
pub fn bunching_event(choice: i8, mode: BunchingMode) -> BunchingEvent {
    let (fields, port) = match mode {
        BunchingMode::PhaseSign => (
            bunching_fields(choice, PhaseCarrier::Input1, 1.0),
            bunching_port(choice, PhaseCarrier::Input1),
        ),
        BunchingMode::PsiChoice => {
            let out = mzi_outputs(&MziConfig {
                psi: psi_for_choice(choice),
                input_port: InputPort::One,
                amplitude: 1.0,
            });
            (out.fields, OutputPort::brighter(&out.fields))
        }
    };
    let (i3, i4) = fields.intensities();
    BunchingEvent {
        choice,
        output_port: port,
        i3,
        i4,
        coincidence_product: i3 * i4,
    }
}

/// `n_events` events whose choice bits are [`PortableRng::sign`] draws.
pub fn random_bunching_stream(
    n_events: usize,
    seed: u64,
    mode: BunchingMode,
) -> Result<Vec<BunchingEvent>> {
    if n_events == 0 {
        return Err(Error::invalid("n_events", "must be >= 1"));
    }
    let mut rng = PortableRng::from_seed(seed);
    Ok((0..n_events)
        .map(|_| bunching_event(rng.sign(), mode))
        .collect())
}

/// Empirical statistics of a bunching stream.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StreamSummary {
    pub n_events: usize,
    pub port3_fraction: f64,
    /// `I(choice; port)` in bits.
    pub mutual_information: f64,
    /// `H(choice)` in bits.
    pub choice_entropy: f64,
    /// `H(port | choice)` in bits; zero when the choice fixes the port.
    pub conditional_entropy: f64,
}

impl StreamSummary {
    pub fn from_events(events: &[BunchingEvent]) -> Self {
        let n = events.len();
        let mut joint = [[0usize; 2]; 2];
        for ev in events {
            let c = usize::from(ev.choice < 0);
            let p = usize::from(ev.output_port == OutputPort::Four);
            joint[c][p] += 1;
        }
        let total = n as f64;
        let prob = |k: usize| k as f64 / total;
        let h = |ps: &[f64]| -> f64 {
            ps.iter()
                .filter(|&&p| p > 0.0)
                .map(|&p| -p * p.log2())
                .sum()
        };
        let choice = [prob(joint[0][0] + joint[0][1]), prob(joint[1][0] + joint[1][1])];
        let port = [prob(joint[0][0] + joint[1][0]), prob(joint[0][1] + joint[1][1])];
        let joint_p = [
            prob(joint[0][0]),
            prob(joint[0][1]),
            prob(joint[1][0]),
            prob(joint[1][1]),
        ];
        let h_choice = h(&choice);
        let h_port = h(&port);
        let h_joint = h(&joint_p);
        Self {
            n_events: n,
            port3_fraction: port[0],
            mutual_information: h_choice + h_port - h_joint,
            choice_entropy: h_choice,
            conditional_entropy: h_joint - h_choice,
        }
    }
}
