//! HOM dip from a Gaussian detuning ensemble: uniform grid, Monte-Carlo
//! draws, and the closed-form Gaussian average side by side.

use std::f64::consts::FRAC_PI_2;

use g2_optics::hom::{hom_dip_closed_form, hom_dip_curve, SpectralEnsemble};
use g2_optics::units::{GHZ, PS};

fn main() -> g2_optics::Result<()> {
    let bw = 100.0 * GHZ;
    let grid = SpectralEnsemble::gaussian_grid(bw, 2.0 * GHZ, 200.0 * GHZ)?;
    let mc = SpectralEnsemble::gaussian_monte_carlo(bw, 20_000, 7)?;
    println!("grid ensemble: {} detunings, sigma = {:.2} GHz", grid.len(), grid.sigma() / GHZ);

    let taus: Vec<f64> = (0..=20).map(|i| i as f64 * 0.5 * PS).collect();
    let a = hom_dip_curve(&grid, &taus, FRAC_PI_2, 0.0)?;
    let b = hom_dip_curve(&mc, &taus, FRAC_PI_2, 0.0)?;

    println!("{:>8} {:>10} {:>10} {:>10}", "tau/ps", "grid", "mc", "closed");
    for (i, &tau) in taus.iter().enumerate() {
        let closed = hom_dip_closed_form(bw, tau, FRAC_PI_2, 0.0)?;
        println!(
            "{:>8.1} {:>10.6} {:>10.6} {:>10.6}",
            tau / PS,
            a.g2_values[i],
            b.g2_values[i],
            closed
        );
    }
    Ok(())
}
