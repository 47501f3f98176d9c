//! Output intensities of a Mach-Zehnder interferometer against its internal
//! phase, fed from one input port.

use std::f64::consts::PI;

use g2_optics::mzi::{mzi_g2_normalized, mzi_outputs, mzi_transfer, InputPort, MziConfig};

fn main() -> g2_optics::Result<()> {
    let m = mzi_transfer(PI / 3.0);
    println!("transfer matrix at psi = pi/3:");
    for row in m.m {
        println!("  [{:.4}, {:.4}]", row[0], row[1]);
    }
    println!("unitarity defect: {:.1e}\n", m.unitarity_defect());

    println!("{:>7} {:>9} {:>9} {:>9}", "psi/pi", "I3", "I4", "g2n");
    for k in -8..=8 {
        let psi = k as f64 * PI / 4.0;
        let out = mzi_outputs(&MziConfig::new(psi, InputPort::One, 1.0)?);
        println!(
            "{:>7.2} {:>9.5} {:>9.5} {:>9.5}",
            psi / PI,
            out.i3,
            out.i4,
            mzi_g2_normalized(psi)
        );
    }
    Ok(())
}
