//! JSON system configuration.
//!
//! ```json
//! {
//!   "k": 2,
//!   "form": "u",
//!   "A": {"constant": "2"},
//!   "B": {"periodic": ["-1", "1/3", "2", "1"]},
//!   "initial": ["-2", "-3", "-4", "1", "-1/2", "-1/3", "-1/4", "1"]
//! }
//! ```
//!
//! Rationals are strings in the `p/q` format, never floats, so configs stay
//! exact. `initial` holds the 4k values `u_0 … u_{4k-1}` (`form: "u"`) or
//! `η_{-4k+1} … η_0` (`form: "eta"`).

use rdeq::{parse_rational, Form, Rational, SequenceSpec, SystemSpec};
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("config is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field {field}: {source}")]
    Field {
        field: String,
        source: rdeq::Error,
    },
    #[error("field form: expected \"u\" or \"eta\", got {0:?}")]
    Form(String),
    #[error("{0}")]
    System(#[from] rdeq::Error),
}

#[derive(Deserialize)]
struct RawConfig {
    k: usize,
    form: String,
    #[serde(rename = "A")]
    a: RawSequence,
    #[serde(rename = "B")]
    b: RawSequence,
    initial: Vec<String>,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum RawSequence {
    Constant(String),
    Periodic(Vec<String>),
}

fn parse_field(field: String, text: &str) -> Result<Rational, ConfigError> {
    parse_rational(text).map_err(|source| ConfigError::Field { field, source })
}

fn build_sequence(name: &str, raw: RawSequence) -> Result<SequenceSpec, ConfigError> {
    match raw {
        RawSequence::Constant(text) => {
            Ok(SequenceSpec::constant(parse_field(name.to_string(), &text)?))
        }
        RawSequence::Periodic(texts) => {
            let values = texts
                .iter()
                .enumerate()
                .map(|(i, text)| parse_field(format!("{name}[{i}]"), text))
                .collect::<Result<Vec<_>, _>>()?;
            SequenceSpec::periodic(values).map_err(|source| ConfigError::Field {
                field: name.to_string(),
                source,
            })
        }
    }
}

/// Parse and validate a JSON config into a system specification.
pub fn parse_config(text: &str) -> Result<SystemSpec, ConfigError> {
    let raw: RawConfig = serde_json::from_str(text)?;
    let form = match raw.form.as_str() {
        "u" => Form::U,
        "eta" => Form::Eta,
        other => return Err(ConfigError::Form(other.to_string())),
    };
    let a = build_sequence("A", raw.a)?;
    let b = build_sequence("B", raw.b)?;
    let initial = raw
        .initial
        .iter()
        .enumerate()
        .map(|(i, text)| parse_field(format!("initial[{i}]"), text))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SystemSpec::new(raw.k, a, b, initial, form)?)
}
