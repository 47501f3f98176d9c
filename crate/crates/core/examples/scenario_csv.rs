//! Runs a scenario file (or a default scenario) and writes its CSV and
//! gnuplot script.
//!
//! ```text
//! cargo run --example scenario_csv -- scenarios/hom_dip.json out/
//! ```

use std::path::PathBuf;

use g2_optics::scenario::{parse_scenario, run_scenario, write_outputs, Scenario, ScenarioKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let scenario = match args.next() {
        Some(path) => parse_scenario(&std::fs::read(path)?)?,
        None => Scenario::defaults(ScenarioKind::HomDip),
    };
    let out = PathBuf::from(args.next().unwrap_or_else(|| "target/scenario-out".into()));
    std::fs::create_dir_all(&out)?;

    let table = run_scenario(&scenario)?;
    let (csv, plot) = write_outputs(&table, scenario.kind(), &out)?;
    println!("{}: {} rows, columns {:?}", scenario.kind(), table.rows.len(), table.column_names);
    println!("wrote {} and {}", csv.display(), plot.display());
    Ok(())
}
