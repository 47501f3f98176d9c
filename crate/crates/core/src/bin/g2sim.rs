//! Runs one scenario kind and writes `<kind>.csv` and `<kind>.plot`.
//!
//! Exit status: 0 on success, 1 on a bad scenario or arguments, 2 on I/O failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use g2_optics::scenario::{
    parse_scenario, parse_scenario_value, run_scenario, write_outputs, Scenario, ScenarioError,
    ScenarioKind,
};
use serde_json::{Map, Value};

#[derive(Parser)]
#[command(name = "g2sim", version, about = "Second-order correlation sweeps for beam splitters and interferometers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// g² against input phase difference
    PhiSweep(RunArgs),
    /// HOM dip from a Gaussian detuning ensemble
    HomDip(RunArgs),
    /// g² over delay and phase
    PhiMap(RunArgs),
    /// MZI output intensities against the internal phase ψ
    MziSweep(RunArgs),
    /// Monte-Carlo incoherent baseline
    Baseline(RunArgs),
    /// Thermal-light g² on a single beam splitter input
    Hbt(RunArgs),
    /// Random-choice bunching events
    BunchingStream(RunArgs),
    /// Detuning weights of the spectral ensemble
    Spectrum(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// JSON scenario file; its `kind` must match the subcommand
    #[arg(long)]
    config: Option<PathBuf>,

    /// Output directory for the CSV and plot script
    #[arg(long, default_value = ".")]
    out: PathBuf,

    /// Seed for stochastic kinds
    #[arg(long)]
    seed: Option<u64>,

    /// Override a scenario key, e.g. `--set bw_ghz=50`
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,

    /// Print the fully resolved scenario as JSON and exit
    #[arg(long)]
    print_config: bool,
}

impl Command {
    fn split(self) -> (ScenarioKind, RunArgs) {
        match self {
            Command::PhiSweep(a) => (ScenarioKind::PhiSweep, a),
            Command::HomDip(a) => (ScenarioKind::HomDip, a),
            Command::PhiMap(a) => (ScenarioKind::PhiMap, a),
            Command::MziSweep(a) => (ScenarioKind::MziSweep, a),
            Command::Baseline(a) => (ScenarioKind::Baseline, a),
            Command::Hbt(a) => (ScenarioKind::Hbt, a),
            Command::BunchingStream(a) => (ScenarioKind::BunchingStream, a),
            Command::Spectrum(a) => (ScenarioKind::Spectrum, a),
        }
    }
}

fn resolve(kind: ScenarioKind, args: &RunArgs) -> Result<Scenario, ScenarioError> {
    let mut obj = match &args.config {
        Some(path) => match parse_scenario(&std::fs::read(path)?)?.to_json() {
            Value::Object(obj) => obj,
            _ => unreachable!("scenarios serialize to objects"),
        },
        None => Map::new(),
    };
    match obj.get("kind").and_then(Value::as_str) {
        Some(k) if k != kind.as_str() => {
            return Err(ScenarioError::Validation {
                key: "kind".into(),
                message: format!("config is `{k}` but subcommand is `{kind}`"),
            })
        }
        _ => {
            obj.insert("kind".into(), Value::from(kind.as_str()));
        }
    }
    if let Some(seed) = args.seed {
        obj.insert("seed".into(), Value::from(seed));
    }
    for item in &args.overrides {
        let (key, raw) = item.split_once('=').ok_or_else(|| ScenarioError::Validation {
            key: item.clone(),
            message: "override must look like KEY=VALUE".into(),
        })?;
        let value = serde_json::from_str(raw).unwrap_or_else(|_| Value::from(raw));
        obj.insert(key.to_string(), value);
    }
    parse_scenario_value(Value::Object(obj))
}

fn run(kind: ScenarioKind, args: RunArgs) -> Result<(), ScenarioError> {
    let scenario = resolve(kind, &args)?;
    if args.print_config {
        println!(
            "{}",
            serde_json::to_string_pretty(&scenario.to_json()).expect("json")
        );
        return Ok(());
    }
    let table = run_scenario(&scenario)?;
    let (csv, plot) = write_outputs(&table, kind, &args.out)?;
    eprintln!(
        "{kind}: {} rows -> {} , {}",
        table.rows.len(),
        csv.display(),
        plot.display()
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (kind, args) = cli.command.split();
    match run(kind, args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
