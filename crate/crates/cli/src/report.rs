//! The machine-readable report and its serialisation helpers.

use std::collections::BTreeMap;

use diagcoinv_core::algebra::{LaurentPoly, RationalFunction};
use diagcoinv_core::report::Check;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::CliError;

/// Bumped whenever a field is renamed, removed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct ResultEntry {
    pub name: String,
    /// The identity the check tests.
    pub paper_ref: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub schema_version: u32,
    pub config: RunConfig,
    pub objects: BTreeMap<String, Value>,
    pub results: Vec<ResultEntry>,
    /// Milliseconds per stage; the only field allowed to differ between runs.
    pub timings: BTreeMap<String, u64>,
}

impl Report {
    pub fn new(config: RunConfig) -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            schema_version: SCHEMA_VERSION,
            config,
            objects: BTreeMap::new(),
            results: Vec::new(),
            timings: BTreeMap::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn push_checks(&mut self, prefix: &str, checks: impl IntoIterator<Item = Check>) {
        self.results.extend(checks.into_iter().map(|c| ResultEntry {
            name: format!("{prefix}/{}", c.name),
            paper_ref: c.identity,
            expected: c.expected,
            got: c.got,
            pass: c.pass,
        }));
    }

    pub fn object(&mut self, key: impl Into<String>, value: Value) {
        self.objects.insert(key.into(), value);
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

/// `[exponent, numerator, denominator]` triples sorted by exponent.
pub fn triples(p: &LaurentPoly) -> Result<Value, CliError> {
    let mut out = Vec::new();
    for (e, num, den) in p.to_triples() {
        out.push(json!([e, big(&num)?, big(&den)?]));
    }
    Ok(Value::Array(out))
}

fn big(s: &str) -> Result<i128, CliError> {
    s.parse().map_err(|_| CliError::Overflow(s.to_string()))
}

/// A rational function as numerator, denominator and an expansion up to
/// `trunc`.
pub fn rational_function(f: &RationalFunction, trunc: i64) -> Result<Value, CliError> {
    Ok(json!({
        "numerator": triples(f.numerator())?,
        "denominator": triples(f.denominator())?,
        "expansion_to": trunc,
        "expansion": triples(&f.expand(trunc))?,
    }))
}
