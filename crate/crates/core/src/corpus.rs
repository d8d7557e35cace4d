//! Golden fixtures: descriptors with exactly known invariants.
//!
//! Each fixture file holds one JSON object:
//!
//! ```json
//! { "name": "smooth_quartic",
//!   "about": "Smooth plane quartic with its 24 ordinary flexes.",
//!   "input": { "compute": { "degree": 4, "nonlinear": [{"deg": 4, "mult": 1}], "flexes": "auto" } },
//!   "expect": { "predegree": "14280", "orbit_dimension": 8 } }
//! ```
//!
//! `input` is either `compute` (a descriptor), `union` (two inputs and
//! crossing counts) or `scale` (an input and a multiplier).

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::corrections::ErratumPolicy;
use crate::engine::{assemble_with, scale, union, OrbitReport};
use crate::error::{parse_json, read_file, Error, Result};
use crate::model::CurveDescriptor;
use crate::series::{Rational, TruncSeries};

/// Environment variable overriding the fixture directory.
pub const CORPUS_ENV: &str = "ORBITDEG_CORPUS";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum FixtureInput {
    Compute(CurveDescriptor),
    Union(Box<UnionInput>),
    Scale(Box<ScaleInput>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnionInput {
    pub a: FixtureInput,
    pub b: FixtureInput,
    #[serde(rename = "I", default)]
    pub i: u32,
    #[serde(rename = "J", default)]
    pub j: u32,
    #[serde(default)]
    pub tangencies: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilizer_degree: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScaleInput {
    pub of: FixtureInput,
    pub m: u32,
}

impl FixtureInput {
    pub fn evaluate(&self, policy: ErratumPolicy) -> Result<OrbitReport> {
        match self {
            FixtureInput::Compute(c) => assemble_with(c, policy),
            FixtureInput::Union(u) => {
                let r = union(&u.a.evaluate(policy)?, &u.b.evaluate(policy)?, u.i, u.j, u.tangencies);
                match u.stabilizer_degree {
                    Some(k) => r.with_stabilizer(k),
                    None => Ok(r),
                }
            }
            FixtureInput::Scale(s) => Ok(scale(&s.of.evaluate(policy)?, s.m)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub predegree: Rational,
    pub orbit_dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub app: Option<TruncSeries>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    #[serde(default)]
    pub about: String,
    pub input: FixtureInput,
    pub expect: Expectation,
}

impl Fixture {
    pub fn parse(text: &str) -> Result<Fixture> {
        parse_json(text)
    }

    /// Evaluate and compare; the result lists every mismatch.
    pub fn check(&self, policy: ErratumPolicy) -> Outcome {
        let diffs = match self.input.evaluate(policy) {
            Err(e) => vec![format!("evaluation failed: {e}")],
            Ok(r) => compare(&self.expect, &r),
        };
        Outcome { name: self.name.clone(), passed: diffs.is_empty(), diffs }
    }
}

fn compare(want: &Expectation, got: &OrbitReport) -> Vec<String> {
    let mut diffs = Vec::new();
    if want.predegree != got.predegree {
        diffs.push(format!("predegree: expected {}, got {}", want.predegree, got.predegree));
    }
    if want.orbit_dimension != got.orbit_dimension {
        diffs.push(format!("orbit_dimension: expected {}, got {}", want.orbit_dimension, got.orbit_dimension));
    }
    if let Some(d) = &want.degree {
        match &got.degree {
            Some(g) if g == d => {}
            Some(g) => diffs.push(format!("degree: expected {d}, got {g}")),
            None => diffs.push(format!("degree: expected {d}, got none (no stabilizer degree)")),
        }
    }
    if let Some(app) = &want.app {
        for i in 0..app.coeffs().len() {
            if app.coeff(i) != got.app.coeff(i) {
                diffs.push(format!("app[{i}]: expected {}, got {}", app.coeff(i), got.app.coeff(i)));
            }
        }
    }
    diffs
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub name: String,
    pub passed: bool,
    pub diffs: Vec<String>,
}

/// The bundled fixture directory, unless overridden by `ORBITDEG_CORPUS`.
pub fn default_dir() -> PathBuf {
    std::env::var_os(CORPUS_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus")))
}

/// Every `*.json` fixture in `dir`, ordered by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<Fixture>> {
    let entries = std::fs::read_dir(dir).map_err(|source| Error::Io { path: dir.display().to_string(), source })?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            Fixture::parse(&read_file(p)?).map_err(|e| match e {
                Error::Schema { path, message } => Error::Schema { path: format!("{}: {path}", p.display()), message },
                Error::Syntax { line, column, message } => {
                    Error::Syntax { line, column, message: format!("{}: {message}", p.display()) }
                }
                e => e,
            })
        })
        .collect()
}

pub fn replay(fixtures: &[Fixture], policy: ErratumPolicy) -> Vec<Outcome> {
    fixtures.iter().map(|f| f.check(policy)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_corpus_passes() {
        let fixtures = load_dir(Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus"))).unwrap();
        assert!(fixtures.len() >= 20, "only {} fixtures", fixtures.len());
        for o in replay(&fixtures, ErratumPolicy::Derived) {
            assert!(o.passed, "{}: {:?}", o.name, o.diffs);
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let f = Fixture::parse(
            r#"{"name": "conic", "input": {"compute": {"degree": 2, "nonlinear": [{"deg": 2, "mult": 1}]}},
                "expect": {"predegree": "9", "orbit_dimension": 5}}"#,
        )
        .unwrap();
        let o = f.check(ErratumPolicy::Derived);
        assert!(!o.passed);
        assert_eq!(o.diffs, vec!["predegree: expected 9, got 8".to_string()]);
    }
}
