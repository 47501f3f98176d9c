//! Declarative sweep scenarios.
//!
//! A scenario is a JSON object with a `kind` and kind-specific keys. Every
//! key has a default, so `{"kind": "hom-dip"}` alone is a complete
//! scenario. Configs use GHz, ps and rad; conversion to SI happens in
//! [`run_scenario`].
//!
//! ```json
//! { "schema_version": 1, "kind": "hom-dip", "bw_ghz": 100, "tau_max_ps": 50 }
//! ```

mod output;
mod params;
mod run;

use std::fmt;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{Map, Value};
use thiserror::Error;

pub use output::{emit_csv, emit_plot_script, format_value, write_outputs, SweepTable};
pub use params::{
    Baseline, BunchingStream, Hbt, HomDip, MziSweep, PhiMap, PhiSweep, Sampling, Spectrum,
    StreamMode,
};
pub use run::{ramp_grid, run_scenario, symmetric_grid};

pub const SCHEMA_VERSION: u64 = 1;

/// Largest seed accepted; seeds are written to CSV as `f64` and must survive.
pub const MAX_SEED: u64 = 1 << 53;

/// Upper bound on rows a single scenario may produce.
pub const MAX_ROWS: usize = 20_000_000;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid `{key}`: {message}")]
    Validation { key: String, message: String },

    #[error(transparent)]
    Model(#[from] crate::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl ScenarioError {
    pub(crate) fn validation(key: impl Into<String>, message: impl Into<String>) -> Self {
        ScenarioError::Validation {
            key: key.into(),
            message: message.into(),
        }
    }

    /// Process exit status for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            ScenarioError::Io(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScenarioKind {
    PhiSweep,
    HomDip,
    PhiMap,
    MziSweep,
    Baseline,
    Hbt,
    BunchingStream,
    Spectrum,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 8] = [
        ScenarioKind::PhiSweep,
        ScenarioKind::HomDip,
        ScenarioKind::PhiMap,
        ScenarioKind::MziSweep,
        ScenarioKind::Baseline,
        ScenarioKind::Hbt,
        ScenarioKind::BunchingStream,
        ScenarioKind::Spectrum,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ScenarioKind::PhiSweep => "phi-sweep",
            ScenarioKind::HomDip => "hom-dip",
            ScenarioKind::PhiMap => "phi-map",
            ScenarioKind::MziSweep => "mzi-sweep",
            ScenarioKind::Baseline => "baseline",
            ScenarioKind::Hbt => "hbt",
            ScenarioKind::BunchingStream => "bunching-stream",
            ScenarioKind::Spectrum => "spectrum",
        }
    }

    /// Whether the kind draws random numbers and therefore takes a seed.
    pub fn is_stochastic(self) -> bool {
        matches!(
            self,
            ScenarioKind::HomDip
                | ScenarioKind::Baseline
                | ScenarioKind::Hbt
                | ScenarioKind::BunchingStream
        )
    }
}

impl fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ScenarioKind {
    type Err = ScenarioError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ScenarioKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<_> = ScenarioKind::ALL.iter().map(|k| k.as_str()).collect();
                ScenarioError::validation(
                    "kind",
                    format!("unknown kind `{s}`; expected one of {}", known.join(", ")),
                )
            })
    }
}

/// A validated scenario with every default filled in.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Scenario {
    PhiSweep(PhiSweep),
    HomDip(HomDip),
    PhiMap(PhiMap),
    MziSweep(MziSweep),
    Baseline(Baseline),
    Hbt(Hbt),
    BunchingStream(BunchingStream),
    Spectrum(Spectrum),
}

impl Scenario {
    pub fn kind(&self) -> ScenarioKind {
        match self {
            Scenario::PhiSweep(_) => ScenarioKind::PhiSweep,
            Scenario::HomDip(_) => ScenarioKind::HomDip,
            Scenario::PhiMap(_) => ScenarioKind::PhiMap,
            Scenario::MziSweep(_) => ScenarioKind::MziSweep,
            Scenario::Baseline(_) => ScenarioKind::Baseline,
            Scenario::Hbt(_) => ScenarioKind::Hbt,
            Scenario::BunchingStream(_) => ScenarioKind::BunchingStream,
            Scenario::Spectrum(_) => ScenarioKind::Spectrum,
        }
    }

    /// The default scenario for a kind.
    pub fn defaults(kind: ScenarioKind) -> Self {
        let mut obj = Map::new();
        obj.insert("kind".into(), Value::from(kind.as_str()));
        parse_scenario_value(Value::Object(obj)).expect("defaults are valid")
    }

    /// Canonical JSON form including `schema_version` and every key.
    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("scenario serializes");
        if let Value::Object(obj) = &mut v {
            obj.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
        }
        v
    }

    pub fn validate(&self) -> Result<(), ScenarioError> {
        match self {
            Scenario::PhiSweep(p) => p.validate(),
            Scenario::HomDip(p) => p.validate(),
            Scenario::PhiMap(p) => p.validate(),
            Scenario::MziSweep(p) => p.validate(),
            Scenario::Baseline(p) => p.validate(),
            Scenario::Hbt(p) => p.validate(),
            Scenario::BunchingStream(p) => p.validate(),
            Scenario::Spectrum(p) => p.validate(),
        }
    }
}

/// Parses and validates a UTF-8 JSON scenario.
pub fn parse_scenario(text: &[u8]) -> Result<Scenario, ScenarioError> {
    let value: Value = serde_json::from_slice(text).map_err(|e| ScenarioError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    parse_scenario_value(value)
}

/// Validates an already-parsed JSON value.
pub fn parse_scenario_value(value: Value) -> Result<Scenario, ScenarioError> {
    let Value::Object(mut obj) = value else {
        return Err(ScenarioError::validation("<root>", "scenario must be a JSON object"));
    };
    match obj.remove("schema_version") {
        None => {}
        Some(v) if v.as_u64() == Some(SCHEMA_VERSION) => {}
        Some(v) => {
            return Err(ScenarioError::validation(
                "schema_version",
                format!("unsupported version {v}; expected {SCHEMA_VERSION}"),
            ))
        }
    }
    let kind = match obj.remove("kind") {
        None => return Err(ScenarioError::validation("kind", "missing required key")),
        Some(Value::String(s)) => s.parse::<ScenarioKind>()?,
        Some(_) => return Err(ScenarioError::validation("kind", "must be a string")),
    };
    let rest = Value::Object(obj);
    let scenario = match kind {
        ScenarioKind::PhiSweep => Scenario::PhiSweep(deserialize(rest)?),
        ScenarioKind::HomDip => Scenario::HomDip(deserialize(rest)?),
        ScenarioKind::PhiMap => Scenario::PhiMap(deserialize(rest)?),
        ScenarioKind::MziSweep => Scenario::MziSweep(deserialize(rest)?),
        ScenarioKind::Baseline => Scenario::Baseline(deserialize(rest)?),
        ScenarioKind::Hbt => Scenario::Hbt(deserialize(rest)?),
        ScenarioKind::BunchingStream => Scenario::BunchingStream(deserialize(rest)?),
        ScenarioKind::Spectrum => Scenario::Spectrum(deserialize(rest)?),
    };
    scenario.validate()?;
    Ok(scenario)
}

fn deserialize<T: DeserializeOwned>(value: Value) -> Result<T, ScenarioError> {
    serde_path_to_error::deserialize(value).map_err(|err| {
        let message = err.inner().to_string();
        let path = err.path().to_string();
        let key = if message.starts_with("unknown field") {
            message.split('`').nth(1).unwrap_or(&path).to_string()
        } else {
            path
        };
        ScenarioError::Validation { key, message }
    })
}
