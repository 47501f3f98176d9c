//! Single-event g² traces against delay for a few detunings, with the
//! oscillation period of each, and beating for a non-degenerate pair.

use std::f64::consts::FRAC_PI_2;

use g2_optics::hom::{event_period, event_trace, first_beat_revival, hom_dip_curve, SpectralEnsemble};
use g2_optics::units::{GHZ, PS};

fn main() -> g2_optics::Result<()> {
    let taus: Vec<f64> = (0..=20).map(|i| i as f64 * PS).collect();
    let deltas = [0.0, 40.0, 80.0, 120.0];

    print!("{:>7}", "tau/ps");
    for d in deltas {
        print!(" {:>9}", format!("{d} GHz"));
    }
    println!();
    let traces: Vec<Vec<f64>> = deltas
        .iter()
        .map(|d| event_trace(d * GHZ, &taus, FRAC_PI_2, 0.0))
        .collect();
    for (i, tau) in taus.iter().enumerate() {
        print!("{:>7.1}", tau / PS);
        for t in &traces {
            print!(" {:>9.4}", t[i]);
        }
        println!();
    }
    for d in deltas {
        println!("period at {d:>5} GHz: {:.4} ps", event_period(d * GHZ) / PS);
    }

    let dc = 100.0 * GHZ;
    let e = SpectralEnsemble::gaussian_grid(100.0 * GHZ, 2.0 * GHZ, 200.0 * GHZ)?;
    let taus: Vec<f64> = (0..=10).map(|i| i as f64 * 0.5 * PS).collect();
    let curve = hom_dip_curve(&e, &taus, FRAC_PI_2, dc)?;
    println!("\ncentre offset 100 GHz, first revival at {:.2} ps", first_beat_revival(dc) / PS);
    for (t, g) in taus.iter().zip(&curve.g2_values) {
        println!("{:>6.1} ps  {:.5}", t / PS, g);
    }
    Ok(())
}
