//! Scenario files: one JSON document holding a list of scenarios.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use spinstat::phasespaces::PhaseSpaceId;
use spinstat::prequant::BundleId;
use spinstat::Tolerances;

use crate::checks::CheckKind;

/// A named batch of checks against one phase space or bundle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<PhaseSpaceId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bundle: Option<BundleId>,
    #[serde(default)]
    pub checks: Vec<CheckKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default)]
    pub tolerances: Tolerances,
    /// Per-check sample counts, replacing the registry defaults.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub samples: BTreeMap<CheckKind, usize>,
    /// Per-check pass thresholds, replacing the registry defaults.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub thresholds: BTreeMap<CheckKind, f64>,
    #[serde(default)]
    pub expect: Expect,
}

/// Overrides for the outcome a check should produce.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expect {
    /// integrality: whether the flux should be an integer multiple of 2π.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantizable: Option<bool>,
    /// classify: the statistics parity f.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<u8>,
}

impl Scenario {
    /// The phase space the checks run on: `space`, or the base of `bundle`.
    pub fn base_space(&self) -> Option<PhaseSpaceId> {
        self.space.or_else(|| self.bundle.map(|b| b.base()))
    }

    /// Human-readable target, e.g. `hopf_1` or `spin_sphere`.
    pub fn target(&self) -> Option<String> {
        match (&self.bundle, &self.space) {
            (Some(b), _) => Some(b.name()),
            (None, Some(s)) => Some(s.name().to_string()),
            (None, None) => None,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    scenarios: Vec<Scenario>,
}

/// Where and why a scenario file was rejected.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    /// Field path, e.g. `scenarios[2].bundle.n`.
    pub path: String,
    /// 1-based line and column, when the JSON reader knows them.
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let (Some(l), Some(c)) = (self.line, self.column) {
            write!(f, "line {l}, column {c}: ")?;
        }
        if !self.path.is_empty() && self.path != "." {
            write!(f, "field `{}`: ", self.path)?;
        }
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for ParseError {}

fn field_error(path: String, message: impl Into<String>) -> ParseError {
    ParseError { path, line: None, column: None, message: message.into() }
}

/// Parses a scenario document: either `{"scenarios": [...]}` or a bare
/// array of scenarios. `seed_override` stands in for missing seeds.
pub fn parse_scenarios(text: &str, seed_override: Option<u64>) -> Result<Vec<Scenario>, ParseError> {
    let bare_list = text.trim_start().starts_with('[');
    let mut de = serde_json::Deserializer::from_str(text);
    let parsed = if bare_list {
        serde_path_to_error::deserialize::<_, Vec<Scenario>>(&mut de).map(|list| (list, ""))
    } else {
        serde_path_to_error::deserialize::<_, ScenarioFile>(&mut de).map(|f| (f.scenarios, "scenarios"))
    };
    let (scenarios, prefix) = parsed.map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        let message = inner.to_string();
        // serde_json appends " at line L column C"; keep the message short.
        let message = message.split(" at line ").next().unwrap_or(&message).to_string();
        ParseError { path, line: Some(inner.line()), column: Some(inner.column()), message }
    })?;
    de.end().map_err(|e| ParseError {
        path: String::new(),
        line: Some(e.line()),
        column: Some(e.column()),
        message: "trailing characters after the scenario document".into(),
    })?;
    for (i, s) in scenarios.iter().enumerate() {
        let at = |field: &str| {
            let base = if prefix.is_empty() { format!("[{i}]") } else { format!("{prefix}[{i}]") };
            if field.is_empty() {
                base
            } else {
                format!("{base}.{field}")
            }
        };
        validate(s, seed_override, at)?;
    }
    Ok(scenarios)
}

fn validate(s: &Scenario, seed_override: Option<u64>, at: impl Fn(&str) -> String) -> Result<(), ParseError> {
    if s.name.trim().is_empty() {
        return Err(field_error(at("name"), "scenario name must not be empty"));
    }
    if s.space.is_some() && s.bundle.is_some() {
        return Err(field_error(at("space"), "give either `space` or `bundle`, not both"));
    }
    if let Some(space) = &s.space {
        space.validate().map_err(|e| field_error(at("space"), e.to_string()))?;
    }
    if let Some(bundle) = &s.bundle {
        bundle.validate().map_err(|e| field_error(at("bundle"), e.to_string()))?;
    }
    if s.seed.is_none() && seed_override.is_none() {
        if let Some(c) = s.checks.iter().find(|c| c.info().randomized) {
            return Err(field_error(at("seed"), format!("check `{}` is randomized and needs a seed", c.name())));
        }
    }
    let t = &s.tolerances;
    for (name, v) in [
        ("alg", t.alg),
        ("norm", t.norm),
        ("geom", t.geom),
        ("fd", t.fd),
        ("fd_step", t.fd_step),
        ("quad", t.quad),
        ("int", t.int),
        ("diag", t.diag),
        ("snap", t.snap),
    ] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(field_error(at(&format!("tolerances.{name}")), "must be positive and finite"));
        }
    }
    if t.path_samples < 8 || t.diag_grid < 8 {
        return Err(field_error(at("tolerances"), "path_samples and diag_grid must be at least 8"));
    }
    if t.mesh_depth > 8 {
        return Err(field_error(at("tolerances.mesh_depth"), "mesh depth above 8 is not supported"));
    }
    for (c, n) in &s.samples {
        if *n == 0 {
            return Err(field_error(at(&format!("samples.{}", c.name())), "sample count must be positive"));
        }
    }
    for (c, v) in &s.thresholds {
        if !(*v > 0.0 && v.is_finite()) {
            return Err(field_error(at(&format!("thresholds.{}", c.name())), "threshold must be positive and finite"));
        }
    }
    Ok(())
}

/// Reads and parses a scenario file.
pub fn load_scenarios(path: &Path, seed_override: Option<u64>) -> Result<Vec<Scenario>, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
    parse_scenarios(&text, seed_override).map_err(|error| LoadError::Parse { path: path.display().to_string(), error })
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {error}")]
    Parse { path: String, error: ParseError },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_wrapped_and_bare_lists() {
        let one = r#"{"name": "a", "space": {"kind": "spin_sphere", "s": 0.5}, "checks": ["integrality"]}"#;
        let wrapped = format!(r#"{{"scenarios": [{one}]}}"#);
        let bare = format!("[{one}]");
        assert_eq!(parse_scenarios(&wrapped, None).unwrap(), parse_scenarios(&bare, None).unwrap());
    }

    #[test]
    fn unknown_check_reports_line_and_field() {
        let text = "{\"scenarios\": [\n  {\"name\": \"a\",\n   \"checks\": [\"integrality\", \"bogus\"]}\n]}";
        let err = parse_scenarios(text, None).unwrap_err();
        assert_eq!(err.path, "scenarios[0].checks[1]");
        assert_eq!(err.line, Some(3));
        assert!(err.message.contains("bogus"), "{err}");
    }

    #[test]
    fn semantic_errors_name_the_field() {
        let text = r#"[{"name": "a", "space": {"kind": "spin_sphere", "s": -1.0}}]"#;
        assert_eq!(parse_scenarios(text, None).unwrap_err().path, "[0].space");
        let text = r#"{"scenarios": [{"name": "a", "bundle": {"kind": "hopf", "n": 1}, "checks": ["classify"]}]}"#;
        assert_eq!(parse_scenarios(text, None).unwrap_err().path, "scenarios[0].seed");
        assert!(parse_scenarios(text, Some(3)).is_ok());
    }

    #[test]
    fn partial_tolerances_keep_defaults() {
        let text = r#"[{"name": "a", "tolerances": {"mesh_depth": 3}}]"#;
        let s = &parse_scenarios(text, None).unwrap()[0];
        assert_eq!(s.tolerances.mesh_depth, 3);
        assert_eq!(s.tolerances.fd, Tolerances::default().fd);
    }

    #[test]
    fn empty_check_list_is_valid() {
        let s = parse_scenarios(r#"[{"name": "nothing"}]"#, None).unwrap();
        assert!(s[0].checks.is_empty());
    }
}
