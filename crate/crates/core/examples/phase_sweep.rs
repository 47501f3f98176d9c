//! g² of two equal-frequency coherent inputs against their phase difference,
//! both from the closed form and from time-averaged output traces.

use std::f64::consts::PI;

use g2_optics::correlator::{
    anticorrelation_phases, coincidence_time_average, g2_coherent, output_intensity_traces,
    RelativePhaseState,
};
use g2_optics::PlaneWaveField;

fn main() -> g2_optics::Result<()> {
    let omega = 2.0 * PI * 1.0e3;
    let window = 1.0e-2;
    let e0 = 1.0;

    println!("{:>8} {:>12} {:>14}", "phi/pi", "g2", "g2 (traces)");
    for k in -8..=8 {
        let phi = k as f64 * PI / 8.0;
        let closed = g2_coherent(RelativePhaseState::new(0.0, phi)?);

        let e1 = PlaneWaveField::new(e0, 0.0, omega, phi)?;
        let e2 = PlaneWaveField::new(e0, 0.0, omega, 0.0)?;
        let (i3, i4) = output_intensity_traces(&e1, &e2, 0.0, window, 2001)?;
        let avg = coincidence_time_average(&i3, &i4, window)? / (e0 * e0).powi(2);

        println!("{:>8.3} {:>12.6} {:>14.6}", phi / PI, closed, avg);
    }

    println!("\nanticorrelated when phi =");
    for s in anticorrelation_phases(3)? {
        println!("  n={} sign={:+} phi={:+.6}", s.n, s.sign, s.phase);
    }
    Ok(())
}
