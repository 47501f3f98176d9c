use crate::correlator::{g2_coherent, hbt_chaotic_g2, incoherent_baseline, RelativePhaseState};
use crate::hom::{g2_phi_map, hom_dip_closed_form, hom_dip_curve, SpectralEnsemble};
use crate::mzi::{
    mzi_g2_normalized, mzi_outputs, random_bunching_stream, BunchingMode, InputPort, MziConfig,
};
use crate::units::{GHZ, PS};

use super::params::{Sampling, StreamMode};
use super::{Scenario, ScenarioError, SweepTable};

/// `k·step` for every integer `k` with `|k·step| ≤ half_span`; contains 0 exactly.
pub fn symmetric_grid(half_span: f64, step: f64) -> Vec<f64> {
    let k_max = (half_span / step + 1e-9).floor() as i64;
    (-k_max..=k_max).map(|k| k as f64 * step).collect()
}

/// `min + i·step` for `i = 0, 1, …` while not beyond `max`.
pub fn ramp_grid(min: f64, max: f64, step: f64) -> Vec<f64> {
    let n = ((max - min) / step + 1e-9).floor() as usize;
    (0..=n).map(|i| min + i as f64 * step).collect()
}

/// Runs a validated scenario to a complete table.
pub fn run_scenario(s: &Scenario) -> Result<SweepTable, ScenarioError> {
    s.validate()?;
    let table = match s {
        Scenario::PhiSweep(p) => {
            let mut t = SweepTable::with_columns(&["phi", "g2"]);
            for phi in symmetric_grid(p.phi_max, p.phi_step) {
                let g2 = g2_coherent(RelativePhaseState::new(p.delta, phi)?);
                t.push_row(vec![phi, g2]);
            }
            t
        }
        Scenario::HomDip(p) => {
            let ensemble = match p.sampling {
                Sampling::Grid => SpectralEnsemble::gaussian_grid(
                    p.bw_ghz * GHZ,
                    p.step_ghz * GHZ,
                    p.span_ghz * GHZ,
                )?,
                Sampling::MonteCarlo => SpectralEnsemble::gaussian_monte_carlo(
                    p.bw_ghz * GHZ,
                    p.n_samples as usize,
                    p.seed,
                )?,
            };
            let taus_ps = ramp_grid(p.tau_min_ps, p.tau_max_ps, p.tau_step_ps);
            let taus: Vec<f64> = taus_ps.iter().map(|t| t * PS).collect();
            let dc = p.delta_c_ghz * GHZ;
            let curve = hom_dip_curve(&ensemble, &taus, p.phi, dc)?;
            let mut t = SweepTable::with_columns(&["tau_ps", "g2", "g2_closed_form"]);
            for ((tau_ps, tau), g2) in taus_ps.iter().zip(&taus).zip(&curve.g2_values) {
                let closed = hom_dip_closed_form(p.bw_ghz * GHZ, *tau, p.phi, dc)?;
                t.push_row(vec![*tau_ps, *g2, closed]);
            }
            t
        }
        Scenario::PhiMap(p) => {
            let ensemble =
                SpectralEnsemble::gaussian_grid(p.bw_ghz * GHZ, p.step_ghz * GHZ, p.span_ghz * GHZ)?;
            let taus_ps = ramp_grid(p.tau_min_ps, p.tau_max_ps, p.tau_step_ps);
            let taus: Vec<f64> = taus_ps.iter().map(|t| t * PS).collect();
            let phis = p
                .phis
                .clone()
                .unwrap_or_else(|| symmetric_grid(p.phi_max, p.phi_step));
            let map = g2_phi_map(&ensemble, &taus, &phis)?;
            let mut t = SweepTable::with_columns(&["tau_ps", "phi", "g2"]);
            for (i, tau_ps) in taus_ps.iter().enumerate() {
                for (phi, g2) in phis.iter().zip(map.row(i)) {
                    t.push_row(vec![*tau_ps, *phi, *g2]);
                }
            }
            t
        }
        Scenario::MziSweep(p) => {
            let port = if p.input_port == 1 {
                InputPort::One
            } else {
                InputPort::Two
            };
            let mut t = SweepTable::with_columns(&["psi", "I3", "I4", "g2_normalized"]);
            for psi in symmetric_grid(p.psi_max, p.psi_step) {
                let out = mzi_outputs(&MziConfig::new(psi, port, p.e0)?);
                t.push_row(vec![psi, out.i3, out.i4, mzi_g2_normalized(psi)]);
            }
            t
        }
        Scenario::Baseline(p) => {
            let est = incoherent_baseline(p.n_samples, p.seed, p.phi)?;
            summary_row(est, p.n_samples, p.seed)
        }
        Scenario::Hbt(p) => {
            let est = hbt_chaotic_g2(p.n_samples, p.seed)?;
            summary_row(est, p.n_samples, p.seed)
        }
        Scenario::BunchingStream(p) => {
            let mode = match p.mode {
                StreamMode::PhaseSign => BunchingMode::PhaseSign,
                StreamMode::PsiChoice => BunchingMode::PsiChoice,
            };
            let events = random_bunching_stream(p.n_events as usize, p.seed, mode)?;
            let mut t = SweepTable::with_columns(&["event_index", "choice", "port"]);
            for (i, ev) in events.iter().enumerate() {
                t.push_row(vec![
                    i as f64,
                    f64::from(ev.choice),
                    f64::from(ev.output_port.number()),
                ]);
            }
            t
        }
        Scenario::Spectrum(p) => {
            let e =
                SpectralEnsemble::gaussian_grid(p.bw_ghz * GHZ, p.step_ghz * GHZ, p.span_ghz * GHZ)?;
            let mut t = SweepTable::with_columns(&["detuning_ghz", "weight"]);
            for (d, w) in e.iter() {
                t.push_row(vec![d / GHZ, w]);
            }
            t
        }
    };
    table.check()?;
    Ok(table)
}

fn summary_row(estimate: f64, n: u64, seed: u64) -> SweepTable {
    let mut t = SweepTable::with_columns(&["estimate", "n", "seed"]);
    t.push_row(vec![estimate, n as f64, seed as f64]);
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::{parse_scenario, ScenarioKind};
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    use approx::assert_abs_diff_eq;

    fn run_default(kind: ScenarioKind) -> SweepTable {
        run_scenario(&Scenario::defaults(kind)).unwrap()
    }

    #[test]
    fn grids() {
        let g = symmetric_grid(TAU, PI / 200.0);
        assert_eq!(g.len(), 801);
        assert_eq!(g[400], 0.0);
        assert_eq!(symmetric_grid(TAU, 0.01).len(), 1257);
        let r = ramp_grid(0.0, 100.0, 0.1);
        assert_eq!(r.len(), 1001);
        assert_abs_diff_eq!(*r.last().unwrap(), 100.0, epsilon = 1e-12);
        assert_eq!(ramp_grid(3.0, 3.0, 1.0), vec![3.0]);
    }

    #[test]
    fn phi_sweep_default_hits_anticorrelation() {
        let t = run_default(ScenarioKind::PhiSweep);
        let row = t
            .rows
            .iter()
            .find(|r| (r[0] - FRAC_PI_2).abs() < 1e-12)
            .expect("grid contains pi/2");
        assert!(row[1] < 1e-12);
    }

    #[test]
    fn mzi_sweep_default_at_zero() {
        let t = run_default(ScenarioKind::MziSweep);
        assert_eq!(t.column_names, ["psi", "I3", "I4", "g2_normalized"]);
        let row = t.rows.iter().find(|r| r[0] == 0.0).unwrap();
        assert_abs_diff_eq!(row[2], 1.0, epsilon = 1e-12);
        assert!(row[1] < 1e-12);
        assert_eq!(row[3], 0.0);
    }

    #[test]
    fn hom_dip_default_rows() {
        let t = run_default(ScenarioKind::HomDip);
        assert_eq!(t.rows.len(), 1001);
        assert_eq!(t.rows[0][1], 0.0);
        for r in &t.rows {
            assert!((r[1] - r[2]).abs() < 5e-3, "{r:?}");
        }
    }

    #[test]
    fn hom_dip_monte_carlo_is_seeded() {
        let s = parse_scenario(
            br#"{"kind":"hom-dip","sampling":"monte-carlo","n_samples":5000,"seed":9,"tau_max_ps":20}"#,
        )
        .unwrap();
        let a = run_scenario(&s).unwrap();
        assert_eq!(a, run_scenario(&s).unwrap());
        for r in &a.rows {
            assert!((r[1] - r[2]).abs() < 0.03);
        }
    }

    #[test]
    fn phi_map_with_explicit_phases() {
        let s = parse_scenario(br#"{"kind":"phi-map","phis":[0, 0.7853981633974483, 1.5707963267948966],"tau_max_ps":10}"#)
            .unwrap();
        let t = run_scenario(&s).unwrap();
        assert_eq!(t.rows.len(), 11 * 3);
        assert_abs_diff_eq!(t.rows[0][2], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(t.rows[1][2], 0.5, epsilon = 1e-12);
        assert!(t.rows[2][2] < 1e-12);
    }

    #[test]
    fn summaries_and_stream() {
        let b = run_default(ScenarioKind::Baseline);
        assert_eq!(b.rows.len(), 1);
        assert_abs_diff_eq!(b.rows[0][0], 0.5, epsilon = 0.01);
        assert_eq!(b.rows[0][1], 100_000.0);

        let s = parse_scenario(br#"{"kind":"bunching-stream","n_events":50,"mode":"psi-choice"}"#).unwrap();
        let t = run_scenario(&s).unwrap();
        assert_eq!(t.rows.len(), 50);
        for r in &t.rows {
            assert_eq!(r[2], if r[1] > 0.0 { 3.0 } else { 4.0 });
        }
    }

    #[test]
    fn spectrum_default() {
        let t = run_default(ScenarioKind::Spectrum);
        assert_eq!(t.rows.len(), 201);
        assert_eq!(t.rows[100][0], 0.0);
        assert_abs_diff_eq!(t.rows.iter().map(|r| r[1]).sum::<f64>(), 1.0, epsilon = 1e-12);
    }
}
