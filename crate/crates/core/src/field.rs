//! Complex field amplitudes and lossless two-port optics.
//!
//! Fields are complex amplitudes in units of a reference amplitude `E₀`.
//! A [`TwoPortMatrix`] maps the amplitudes entering ports 1 and 2 of an
//! element to the amplitudes leaving ports 3 and 4:
//!
//! ```text
//!  [E₃]   [m₁₁ m₁₂] [E₁]
//!  [E₄] = [m₂₁ m₂₂] [E₂]
//! ```
//!
//! Global phase is kept as computed. Nothing here normalizes it away, so
//! an output such as `√2·i·E₀` stays distinguishable from `√2·E₀`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::ops::Mul;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex amplitude at a single port, stored as an `(re, im)` pair of `f64`.
pub type ComplexAmplitude = Complex64;

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Optical intensity `|a|²` of an amplitude.
#[inline]
pub fn intensity(a: ComplexAmplitude) -> f64 {
    a.norm_sqr()
}

/// A monochromatic traveling wave `E₀·exp(i(k·r − ω·t + φ))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWaveField {
    amplitude: f64,
    wavevector: f64,
    angular_frequency: f64,
    initial_phase: f64,
}

impl PlaneWaveField {
    /// Builds a plane wave. `amplitude` must be non-negative and every
    /// parameter finite.
    pub fn new(
        amplitude: f64,
        wavevector: f64,
        angular_frequency: f64,
        initial_phase: f64,
    ) -> Result<Self> {
        if !amplitude.is_finite() || amplitude < 0.0 {
            return Err(Error::invalid("amplitude", "must be finite and >= 0"));
        }
        for (name, v) in [
            ("wavevector", wavevector),
            ("angular_frequency", angular_frequency),
            ("initial_phase", initial_phase),
        ] {
            if !v.is_finite() {
                return Err(Error::invalid(name, "must be finite"));
            }
        }
        Ok(Self {
            amplitude,
            wavevector,
            angular_frequency,
            initial_phase,
        })
    }

    /// A field that does not propagate: only amplitude and phase.
    pub fn stationary(amplitude: f64, initial_phase: f64) -> Result<Self> {
        Self::new(amplitude, 0.0, 0.0, initial_phase)
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn wavevector(&self) -> f64 {
        self.wavevector
    }

    pub fn angular_frequency(&self) -> f64 {
        self.angular_frequency
    }

    pub fn initial_phase(&self) -> f64 {
        self.initial_phase
    }

    /// Total phase `k·r − ω·t + φ` at a point in space-time.
    pub fn phase_at(&self, r: f64, t: f64) -> f64 {
        self.wavevector * r - self.angular_frequency * t + self.initial_phase
    }

    /// Complex amplitude at position `r` (m) and time `t` (s).
    pub fn eval(&self, r: f64, t: f64) -> ComplexAmplitude {
        Complex64::from_polar(self.amplitude, self.phase_at(r, t))
    }
}

/// Free-function form of [`PlaneWaveField::eval`].
pub fn eval_plane_wave(field: &PlaneWaveField, r: f64, t: f64) -> ComplexAmplitude {
    field.eval(r, t)
}

/// Amplitudes on the two ports of one side of a two-port element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldPair {
    pub port_a: ComplexAmplitude,
    pub port_b: ComplexAmplitude,
}

impl FieldPair {
    pub const fn new(port_a: ComplexAmplitude, port_b: ComplexAmplitude) -> Self {
        Self { port_a, port_b }
    }

    /// Only port a is lit.
    pub fn single(port_a: ComplexAmplitude) -> Self {
        Self::new(port_a, ZERO)
    }

    pub fn intensities(&self) -> (f64, f64) {
        (intensity(self.port_a), intensity(self.port_b))
    }

    pub fn total_intensity(&self) -> f64 {
        intensity(self.port_a) + intensity(self.port_b)
    }

    pub fn is_finite(&self) -> bool {
        self.port_a.is_finite() && self.port_b.is_finite()
    }
}

/// 2×2 complex transfer matrix of a lossless two-port, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPortMatrix {
    pub m: [[Complex64; 2]; 2],
}

impl TwoPortMatrix {
    pub const fn new(m11: Complex64, m12: Complex64, m21: Complex64, m22: Complex64) -> Self {
        Self {
            m: [[m11, m12], [m21, m22]],
        }
    }

    pub const fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    /// Lossless 50:50 beam splitter, `(1/√2)[[1, i], [i, 1]]`.
    ///
    /// Reflection picks up a `π/2` phase relative to transmission.
    pub fn beam_splitter() -> Self {
        let t = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let r = Complex64::new(0.0, FRAC_1_SQRT_2);
        Self::new(t, r, r, t)
    }

    /// Phase shifter on the second arm, `diag(1, e^{iψ})`.
    pub fn phase_shifter(psi: f64) -> Self {
        Self::new(ONE, ZERO, ZERO, Complex64::from_polar(1.0, psi))
    }

    /// The matrix product `self · first`: apply `first`, then `self`.
    pub fn after(&self, first: &TwoPortMatrix) -> TwoPortMatrix {
        let a = &self.m;
        let b = &first.m;
        let mut out = [[ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        TwoPortMatrix { m: out }
    }

    pub fn adjoint(&self) -> TwoPortMatrix {
        let m = &self.m;
        Self::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn scale(&self, s: Complex64) -> TwoPortMatrix {
        let m = &self.m;
        Self::new(s * m[0][0], s * m[0][1], s * m[1][0], s * m[1][1])
    }

    pub fn apply(&self, input: FieldPair) -> FieldPair {
        let m = &self.m;
        FieldPair {
            port_a: m[0][0] * input.port_a + m[0][1] * input.port_b,
            port_b: m[1][0] * input.port_a + m[1][1] * input.port_b,
        }
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &TwoPortMatrix) -> f64 {
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `M†M − I`; zero for an exactly unitary matrix.
    pub fn unitarity_defect(&self) -> f64 {
        self.adjoint().after(self).max_abs_diff(&Self::identity())
    }
}

impl Mul for TwoPortMatrix {
    type Output = TwoPortMatrix;

    fn mul(self, rhs: TwoPortMatrix) -> TwoPortMatrix {
        self.after(&rhs)
    }
}

impl Mul<FieldPair> for TwoPortMatrix {
    type Output = FieldPair;

    fn mul(self, rhs: FieldPair) -> FieldPair {
        self.apply(rhs)
    }
}

pub fn bs_matrix() -> TwoPortMatrix {
    TwoPortMatrix::beam_splitter()
}

pub fn phase_shifter(psi: f64) -> TwoPortMatrix {
    TwoPortMatrix::phase_shifter(psi)
}

/// `second · first`: light traverses `first`, then `second`.
pub fn compose(second: &TwoPortMatrix, first: &TwoPortMatrix) -> TwoPortMatrix {
    second.after(first)
}

pub fn apply_two_port(m: &TwoPortMatrix, input: FieldPair) -> FieldPair {
    m.apply(input)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_c(a: Complex64, re: f64, im: f64, tol: f64) {
        assert!(
            (a.re - re).abs() <= tol && (a.im - im).abs() <= tol,
            "{a} != ({re}, {im})"
        );
    }

    /// Hand-written 2x2 product used as an independent reference.
    fn naive_product(a: &TwoPortMatrix, b: &TwoPortMatrix) -> TwoPortMatrix {
        let (a, b) = (a.m, b.m);
        TwoPortMatrix::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }

    #[test]
    fn plane_wave_values() {
        let f = PlaneWaveField::new(1.0, 0.0, 0.0, 0.0).unwrap();
        assert_c(f.eval(3.0, -7.0), 1.0, 0.0, 0.0);

        let f = PlaneWaveField::new(1.0, 0.0, 0.0, FRAC_PI_2).unwrap();
        assert_c(f.eval(12.0, 0.5), 0.0, 1.0, 1e-15);

        let f = PlaneWaveField::new(2.0, 1.0, 1.0, 0.0).unwrap();
        assert_c(eval_plane_wave(&f, PI, 0.0), -2.0, 0.0, 1e-15);
    }

    #[test]
    fn plane_wave_rejects_bad_parameters() {
        assert!(PlaneWaveField::new(-1.0, 0.0, 0.0, 0.0).is_err());
        assert!(PlaneWaveField::new(1.0, f64::NAN, 0.0, 0.0).is_err());
        assert!(PlaneWaveField::new(1.0, 0.0, f64::INFINITY, 0.0).is_err());
        assert!(PlaneWaveField::new(0.0, 0.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn beam_splitter_entries() {
        let bs = bs_matrix();
        assert_c(bs.m[0][0], FRAC_1_SQRT_2, 0.0, 0.0);
        assert_c(bs.m[0][1], 0.0, FRAC_1_SQRT_2, 0.0);
        assert_c(bs.m[1][0], 0.0, FRAC_1_SQRT_2, 0.0);
        assert_c(bs.m[1][1], FRAC_1_SQRT_2, 0.0, 0.0);
        assert!(bs.unitarity_defect() < 1e-12);
    }

    #[test]
    fn double_beam_splitter_swaps_ports() {
        let swap = TwoPortMatrix::new(c(0., 0.), c(0., 1.), c(0., 1.), c(0., 0.));
        let bb = compose(&bs_matrix(), &bs_matrix());
        assert!(bb.max_abs_diff(&swap) < 1e-12);
        let mzi0 = compose(&bs_matrix(), &compose(&phase_shifter(0.0), &bs_matrix()));
        assert!(mzi0.max_abs_diff(&swap) < 1e-12);
    }

    #[test]
    fn phase_shifter_values() {
        assert!(phase_shifter(0.0).max_abs_diff(&TwoPortMatrix::identity()) < 1e-15);
        let pi = TwoPortMatrix::new(c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.));
        assert!(phase_shifter(PI).max_abs_diff(&pi) < 1e-15);
        let half = TwoPortMatrix::new(c(1., 0.), c(0., 0.), c(0., 0.), c(0., 1.));
        assert!(phase_shifter(FRAC_PI_2).max_abs_diff(&half) < 1e-15);
    }

    #[test]
    fn compose_with_identity() {
        let m = compose(&phase_shifter(0.3), &bs_matrix());
        assert_eq!(compose(&TwoPortMatrix::identity(), &m), m);
        assert_eq!(m * TwoPortMatrix::identity(), m);
    }

    #[test]
    fn beam_splitter_on_fields() {
        let e0 = 1.7;
        let out = apply_two_port(&bs_matrix(), FieldPair::single(c(e0, 0.0)));
        assert_c(out.port_a, e0 * FRAC_1_SQRT_2, 0.0, 1e-15);
        assert_c(out.port_b, 0.0, e0 * FRAC_1_SQRT_2, 1e-15);

        let out = bs_matrix() * FieldPair::new(c(0.0, e0), c(e0, 0.0));
        assert_c(out.port_a, 0.0, SQRT_2 * e0, 1e-12);
        assert_c(out.port_b, 0.0, 0.0, 1e-12);

        let out = bs_matrix() * FieldPair::new(c(0.0, -e0), c(e0, 0.0));
        assert_c(out.port_a, 0.0, 0.0, 1e-12);
        assert_c(out.port_b, SQRT_2 * e0, 0.0, 1e-12);
    }

    #[test]
    fn intensity_values() {
        assert_eq!(intensity(c(1.0, 0.0)), 1.0);
        assert_abs_diff_eq!(intensity(c(0.0, SQRT_2)), 2.0, epsilon = 1e-15);
        let (i3, i4) = (bs_matrix() * FieldPair::single(ONE)).intensities();
        assert_abs_diff_eq!(i3, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(i4, 0.5, epsilon = 1e-15);
    }

    fn any_pair() -> impl Strategy<Value = FieldPair> {
        (-1e3..1e3f64, -1e3..1e3f64, -1e3..1e3f64, -1e3..1e3f64)
            .prop_map(|(a, b, cc, d)| FieldPair::new(c(a, b), c(cc, d)))
    }

    proptest! {
        #[test]
        fn constructed_matrices_are_unitary(psi in -50.0..50.0f64, phi in -50.0..50.0f64) {
            let m = compose(&phase_shifter(phi), &compose(&bs_matrix(), &phase_shifter(psi)));
            prop_assert!(phase_shifter(psi).unitarity_defect() < 1e-12);
            prop_assert!(m.unitarity_defect() < 1e-12);
        }

        #[test]
        fn energy_is_conserved(input in any_pair(), psi in -10.0..10.0f64) {
            let m = compose(&bs_matrix(), &compose(&phase_shifter(psi), &bs_matrix()));
            let out = m.apply(input);
            let before = input.total_intensity();
            prop_assert!((out.total_intensity() - before).abs() <= 1e-10 * before.max(1e-300));
        }

        #[test]
        fn product_matches_reference(a in -5.0..5.0f64, b in -5.0..5.0f64) {
            let x = compose(&phase_shifter(a), &bs_matrix());
            let y = compose(&bs_matrix(), &phase_shifter(b));
            prop_assert!(x.after(&y).max_abs_diff(&naive_product(&x, &y)) == 0.0);
        }

        #[test]
        fn plane_wave_has_unit_phase_factor(
            e0 in 1e-3..1e3f64, k in -1e3..1e3f64, w in -1e3..1e3f64,
            phi in -10.0..10.0f64, r in -10.0..10.0f64, t in -10.0..10.0f64,
        ) {
            let f = PlaneWaveField::new(e0, k, w, phi).unwrap();
            prop_assert!((f.eval(r, t).norm() / e0 - 1.0).abs() < 1e-12);
        }
    }
}
