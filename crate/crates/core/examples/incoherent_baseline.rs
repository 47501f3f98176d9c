//! Averaging g² over a random propagation phase gives 1/2.

use g2_optics::correlator::incoherent_baseline;

fn main() -> g2_optics::Result<()> {
    for n in [100, 1_000, 10_000, 100_000, 1_000_000] {
        let p = incoherent_baseline(n, 1, 0.0)?;
        println!("n={n:>8}  <g2> = {p:.5}  (|p - 0.5| = {:.1e})", (p - 0.5).abs());
    }
    Ok(())
}
