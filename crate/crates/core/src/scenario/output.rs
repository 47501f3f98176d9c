use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use super::{ScenarioError, ScenarioKind};

/// Rectangular table of finite values with named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub column_names: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl SweepTable {
    pub fn with_columns(names: &[&str]) -> Self {
        Self {
            column_names: names.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<f64>) {
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.column_names.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    /// Rectangular shape and finite entries.
    pub fn check(&self) -> Result<(), ScenarioError> {
        let width = self.column_names.len();
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != width {
                return Err(ScenarioError::validation(
                    "table",
                    format!("row {i} has {} values, expected {width}", row.len()),
                ));
            }
            if let Some(v) = row.iter().find(|v| !v.is_finite()) {
                return Err(ScenarioError::validation("table", format!("row {i} holds {v}")));
            }
        }
        Ok(())
    }

    /// Reads a table written by [`emit_csv`].
    pub fn from_csv(bytes: &[u8]) -> Result<Self, ScenarioError> {
        let mut reader = csv::Reader::from_reader(bytes);
        let bad = |e: csv::Error| ScenarioError::validation("csv", e.to_string());
        let column_names = reader.headers().map_err(bad)?.iter().map(String::from).collect();
        let mut rows = Vec::new();
        for record in reader.records() {
            let record = record.map_err(bad)?;
            let row = record
                .iter()
                .map(|f| {
                    f.parse::<f64>()
                        .map_err(|e| ScenarioError::validation("csv", format!("`{f}`: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        let table = Self { column_names, rows };
        table.check()?;
        Ok(table)
    }
}

/// A value with 12 significant digits, in the shortest of fixed or
/// exponent notation (the C `%.12g` rules). Negative zero prints as `0`.
pub fn format_value(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{v:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        let mantissa = trim_zeros(mantissa.to_string());
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    }
}

fn trim_zeros(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

/// Header line plus one line per row, comma separated, LF terminated.
pub fn emit_csv(table: &SweepTable) -> Result<Vec<u8>, ScenarioError> {
    table.check()?;
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io = |e: csv::Error| ScenarioError::Io(std::io::Error::other(e));
    writer.write_record(&table.column_names).map_err(io)?;
    for row in &table.rows {
        writer
            .write_record(row.iter().map(|v| format_value(*v)))
            .map_err(io)?;
    }
    writer
        .into_inner()
        .map_err(|e| ScenarioError::Io(std::io::Error::other(e.to_string())))
}

fn axis_label(column: &str) -> &str {
    match column {
        "phi" => "{/Symbol f} (rad)",
        "psi" => "{/Symbol y} (rad)",
        "tau_ps" => "{/Symbol t} (ps)",
        "detuning_ghz" => "{/Symbol d} (GHz)",
        _ => column,
    }
}

/// Self-contained gnuplot script that renders `<kind>.csv` to `<kind>.png`.
pub fn emit_plot_script(table: &SweepTable, kind: ScenarioKind) -> String {
    let name = kind.as_str();
    let data = format!("{name}.csv");
    let col = |i: usize| table.column_names.get(i).map(String::as_str).unwrap_or("");
    let mut s = String::new();
    let _ = writeln!(s, "# gnuplot script for {data}");
    let _ = writeln!(s, "set terminal pngcairo size 900,600 enhanced");
    let _ = writeln!(s, "set output '{name}.png'");
    let _ = writeln!(s, "set datafile separator ','");
    let _ = writeln!(s, "set key outside right");
    let _ = writeln!(s, "set grid");
    let g2 = "g^{(2)}(0)";
    let half = "0.5 with lines dashtype 2 linecolor rgb 'red' title 'incoherent 1/2'";
    match kind {
        ScenarioKind::PhiSweep => {
            let _ = writeln!(s, "set xlabel '{}'", axis_label(col(0)));
            let _ = writeln!(s, "set ylabel '{g2}'");
            let _ = writeln!(s, "set yrange [-0.05:1.05]");
            let _ = writeln!(
                s,
                "plot '{data}' using 1:2 every ::1 with lines linewidth 2 title '{g2}', \\\n     {half}"
            );
        }
        ScenarioKind::HomDip => {
            let _ = writeln!(s, "set xlabel '{}'", axis_label(col(0)));
            let _ = writeln!(s, "set ylabel 'g^{{(2)}}({{/Symbol t}})'");
            let _ = writeln!(s, "set yrange [-0.05:1.05]");
            let _ = writeln!(
                s,
                "plot '{data}' using 1:2 every ::1 with lines linewidth 2 title 'ensemble sum', \\\n     \
                 '{data}' using 1:3 every ::1 with lines dashtype 3 title 'Gaussian closed form', \\\n     {half}"
            );
        }
        ScenarioKind::PhiMap => {
            let _ = writeln!(s, "set xlabel '{}'", axis_label(col(1)));
            let _ = writeln!(s, "set ylabel '{}'", axis_label(col(0)));
            let _ = writeln!(s, "set cblabel '{g2}'");
            let _ = writeln!(s, "set cbrange [0:1]");
            let _ = writeln!(s, "set palette rgbformulae 33,13,10");
            let _ = writeln!(s, "set multiplot layout 1,2");
            let _ = writeln!(
                s,
                "plot '{data}' using 2:1:3 every ::1 with points pointtype 5 pointsize 0.4 palette notitle"
            );
            let _ = writeln!(s, "set xlabel '{}'", axis_label(col(1)));
            let _ = writeln!(s, "set ylabel '{g2}'");
            let _ = writeln!(s, "set yrange [-0.05:1.05]");
            let _ = writeln!(
                s,
                "plot '{data}' using 2:($1 == 0 ? $3 : 1/0) every ::1 with lines title '{{/Symbol t}} = 0', \\\n     {half}"
            );
            let _ = writeln!(s, "unset multiplot");
        }
        ScenarioKind::MziSweep => {
            let _ = writeln!(s, "set xlabel '{}'", axis_label(col(0)));
            let _ = writeln!(s, "set ylabel 'intensity / correlation'");
            let _ = writeln!(
                s,
                "plot '{data}' using 1:2 every ::1 with lines dashtype 2 linecolor rgb 'blue' title 'I_3', \\\n     \
                 '{data}' using 1:3 every ::1 with lines dashtype 4 linecolor rgb 'dark-green' title 'I_4', \\\n     \
                 '{data}' using 1:4 every ::1 with lines linewidth 2 linecolor rgb 'red' title '{g2} (normalized)', \\\n     {half}"
            );
        }
        ScenarioKind::Baseline | ScenarioKind::Hbt => {
            let reference = if kind == ScenarioKind::Hbt {
                ", \\\n     2 with lines dashtype 3 title 'thermal 2', \\\n     1 with lines dashtype 4 title 'coherent 1'"
            } else {
                ""
            };
            let _ = writeln!(s, "set xlabel 'seed'");
            let _ = writeln!(s, "set ylabel '{g2}'");
            let _ = writeln!(s, "set yrange [0:2.5]");
            let _ = writeln!(
                s,
                "plot '{data}' using 3:1 every ::1 with points pointtype 7 pointsize 2 title 'estimate', \\\n     {half}{reference}"
            );
        }
        ScenarioKind::BunchingStream => {
            let _ = writeln!(s, "set xlabel 'output port'");
            let _ = writeln!(s, "set ylabel 'events'");
            let _ = writeln!(s, "set xrange [2.5:4.5]");
            let _ = writeln!(s, "set xtics ('E_3' 3, 'E_4' 4)");
            let _ = writeln!(s, "set boxwidth 0.6");
            let _ = writeln!(s, "set style fill solid 0.5");
            let _ = writeln!(s, "set yrange [0:*]");
            let _ = writeln!(
                s,
                "plot '{data}' using 3:(1) every ::1 smooth frequency with boxes title 'port occupancy'"
            );
        }
        ScenarioKind::Spectrum => {
            let _ = writeln!(s, "set xlabel '{}'", axis_label(col(0)));
            let _ = writeln!(s, "set ylabel 'weight'");
            let _ = writeln!(
                s,
                "plot '{data}' using 1:2 every ::1 with impulses title 'detuning weights'"
            );
        }
    }
    s
}

/// Writes `<kind>.csv` and `<kind>.plot` into `dir`, creating it if needed.
pub fn write_outputs(
    table: &SweepTable,
    kind: ScenarioKind,
    dir: &Path,
) -> Result<(PathBuf, PathBuf), ScenarioError> {
    let csv = emit_csv(table)?;
    let plot = emit_plot_script(table, kind);
    fs::create_dir_all(dir)?;
    let csv_path = dir.join(format!("{kind}.csv"));
    let plot_path = dir.join(format!("{kind}.plot"));
    fs::write(&csv_path, csv)?;
    fs::write(&plot_path, plot)?;
    Ok((csv_path, plot_path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn formatting() {
        assert_eq!(format_value(0.0), "0");
        assert_eq!(format_value(-0.0), "0");
        assert_eq!(format_value(1.0), "1");
        assert_eq!(format_value(0.5), "0.5");
        assert_eq!(format_value(-2.25), "-2.25");
        assert_eq!(format_value(100.0), "100");
        assert_eq!(format_value(std::f64::consts::PI), "3.14159265359");
        assert_eq!(format_value(1e-7), "1e-07");
        assert_eq!(format_value(1.5e20), "1.5e+20");
        assert_eq!(format_value(123456789012.0), "123456789012");
        assert_eq!(format_value(1234567890123.0), "1.23456789012e+12");
        assert_eq!(format_value(0.0001), "0.0001");
        assert_eq!(format_value(9.9999999999996), "10");
        assert_eq!(format_value(6.123233995736766e-17), "6.12323399574e-17");
    }

    #[test]
    fn small_table_csv() {
        let mut t = SweepTable::with_columns(&["a", "b"]);
        t.push_row(vec![1.0, 2.0]);
        t.push_row(vec![0.25, -3.0]);
        let bytes = emit_csv(&t).unwrap();
        assert_eq!(String::from_utf8(bytes.clone()).unwrap(), "a,b\n1,2\n0.25,-3\n");
        assert_eq!(bytes.split(|&b| b == b'\n').filter(|l| !l.is_empty()).count(), 3);
        assert_eq!(SweepTable::from_csv(&bytes).unwrap(), t);
    }

    #[test]
    fn invalid_tables_are_rejected() {
        let mut t = SweepTable::with_columns(&["a", "b"]);
        t.push_row(vec![1.0]);
        assert!(emit_csv(&t).is_err());
        let mut t = SweepTable::with_columns(&["a"]);
        t.push_row(vec![f64::NAN]);
        assert!(emit_csv(&t).is_err());
    }

    #[test]
    fn write_failure_is_io_error() {
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        fs::write(&blocker, b"x").unwrap();
        let t = SweepTable::with_columns(&["a"]);
        let err = write_outputs(&t, ScenarioKind::Hbt, &blocker.join("sub")).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn plot_scripts_reference_their_data() {
        for kind in ScenarioKind::ALL {
            let t = SweepTable::with_columns(&["x", "y", "z", "w"]);
            let script = emit_plot_script(&t, kind);
            assert!(script.contains(&format!("'{kind}.csv'")), "{kind}");
        }
        let t = SweepTable::with_columns(&["phi", "g2"]);
        let s = emit_plot_script(&t, ScenarioKind::PhiSweep);
        assert!(s.contains("(rad)"));
        assert!(s.contains("0.5 with lines"));
        let s = emit_plot_script(&SweepTable::with_columns(&["tau_ps", "g2", "g2_closed_form"]), ScenarioKind::HomDip);
        assert!(s.contains("using 1:2") && s.contains("using 1:3") && s.contains("(ps)"));
        let s = emit_plot_script(&SweepTable::with_columns(&["event_index", "choice", "port"]), ScenarioKind::BunchingStream);
        assert!(s.contains("smooth frequency with boxes"));
    }

    proptest! {
        #[test]
        fn csv_round_trip_keeps_twelve_digits(v in prop::num::f64::NORMAL) {
            let s = format_value(v);
            let back: f64 = s.parse().unwrap();
            prop_assert!((back - v).abs() <= 5e-12 * v.abs(), "{} -> {} -> {}", v, s, back);
        }
    }
}
