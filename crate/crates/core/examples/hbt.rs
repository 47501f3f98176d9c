//! Thermal against coherent light split on one beam splitter.

use g2_optics::correlator::{hbt_chaotic_g2, split_g2};
use num_complex::Complex64;

fn main() -> g2_optics::Result<()> {
    for n in [1_000u64, 100_000, 1_000_000] {
        println!("thermal, n={n:>8}: g2 = {:.4}", hbt_chaotic_g2(n, 1)?);
    }
    let coherent = split_g2(std::iter::repeat_n(Complex64::new(0.8, 0.6), 100_000))?;
    println!("coherent:            g2 = {coherent:.4}");
    Ok(())
}
