//! g² over delay and phase, printed as a coarse character map.

use std::f64::consts::PI;

use g2_optics::hom::{g2_phi_map, SpectralEnsemble};
use g2_optics::units::{GHZ, PS};

fn main() -> g2_optics::Result<()> {
    let e = SpectralEnsemble::gaussian_grid(100.0 * GHZ, 2.0 * GHZ, 200.0 * GHZ)?;
    let taus: Vec<f64> = (0..=20).map(|i| i as f64 * PS).collect();
    let phis: Vec<f64> = (0..=32).map(|k| -PI + k as f64 * PI / 16.0).collect();
    let map = g2_phi_map(&e, &taus, &phis)?;

    let shades = [' ', '.', ':', '-', '=', '+', '*', '#', '%', '@'];
    println!("rows: tau = 0..20 ps, columns: phi = -pi..pi");
    for (i, tau) in taus.iter().enumerate() {
        let line: String = map
            .row(i)
            .iter()
            .map(|g| shades[((g * 9.0).round() as usize).min(9)])
            .collect();
        println!("{:>5.1} |{line}|", tau / PS);
    }
    Ok(())
}
