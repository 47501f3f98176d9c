//! The bundled scenario files parse, run, and round-trip through CSV.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use g2_optics::scenario::{emit_csv, parse_scenario, run_scenario, ScenarioKind, SweepTable};

fn fixture(name: &str) -> Vec<u8> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(name);
    std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn run(name: &str, kind: ScenarioKind) -> SweepTable {
    let s = parse_scenario(&fixture(name)).unwrap();
    assert_eq!(s.kind(), kind, "{name}");
    let start = Instant::now();
    let t = run_scenario(&s).unwrap();
    assert!(start.elapsed() < Duration::from_secs(10), "{name} took {:?}", start.elapsed());
    t
}

fn assert_round_trip(t: &SweepTable) {
    let back = SweepTable::from_csv(&emit_csv(t).unwrap()).unwrap();
    assert_eq!(back.column_names, t.column_names);
    assert_eq!(back.rows.len(), t.rows.len());
    for (a, b) in back.rows.iter().zip(&t.rows) {
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= 5e-12 * y.abs().max(1e-300), "{x} vs {y}");
        }
    }
}

#[test]
fn phase_sweep() {
    let t = run("phase_sweep.json", ScenarioKind::PhiSweep);
    assert_eq!(t.rows.len(), 801);
    assert_round_trip(&t);
}

#[test]
fn spectrum() {
    let t = run("spectrum.json", ScenarioKind::Spectrum);
    assert_eq!(t.rows.len(), 201);
    let peak = t.rows.iter().map(|r| r[1]).fold(0.0, f64::max);
    assert_eq!(t.rows[100][1], peak);
    assert_round_trip(&t);
}

#[test]
fn hom_dip() {
    let t = run("hom_dip.json", ScenarioKind::HomDip);
    assert_eq!(t.rows.len(), 1001);
    assert_eq!(t.rows[0][1], 0.0);
    assert_round_trip(&t);
}

#[test]
fn phase_map_selected_phases() {
    let t = run("phase_map_cuts.json", ScenarioKind::PhiMap);
    assert_eq!(t.rows.len(), 1001 * 5);
    // At zero delay the five curves start at cos²φ.
    for (row, want) in t.rows[..5].iter().zip([1.0, 0.853553390593, 0.5, 0.146446609407, 0.0]) {
        assert!((row[2] - want).abs() < 1e-11, "{row:?}");
    }
    assert_round_trip(&t);
}

#[test]
fn phase_map_full() {
    let t = run("phase_map.json", ScenarioKind::PhiMap);
    assert_eq!(t.rows.len(), 101 * 161);
    assert_round_trip(&t);
}

#[test]
fn mzi_sweep() {
    let t = run("mzi_sweep.json", ScenarioKind::MziSweep);
    assert_eq!(t.rows.len(), 1257);
    assert_round_trip(&t);
}

#[test]
fn bunching_stream() {
    let t = run("bunching.json", ScenarioKind::BunchingStream);
    assert_eq!(t.rows.len(), 100_000);
    for r in &t.rows {
        assert_eq!(r[2], if r[1] > 0.0 { 3.0 } else { 4.0 });
    }
    assert_round_trip(&t);
}
