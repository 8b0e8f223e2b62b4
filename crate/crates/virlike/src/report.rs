//! Verification reports: named checks with pass/fail/resolved-variant
//! statuses, a deterministic text table, and canonical JSON.
//!
//! Canonical JSON has sorted keys, integers only, and a trailing newline.
//! To keep two runs of the same suite byte-identical, the JSON form always
//! reports `elapsed_ms` as 0; measured times appear in the text table only.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::Error;

/// Outcome of one named check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The identity admits more than one published reading; the tag names the
    /// reading that verified.
    ResolvedVariant(String),
}

impl CheckStatus {
    pub fn is_ok(&self) -> bool {
        !matches!(self, CheckStatus::Fail)
    }

    pub fn render(&self) -> String {
        match self {
            CheckStatus::Pass => "pass".to_string(),
            CheckStatus::Fail => "fail".to_string(),
            CheckStatus::ResolvedVariant(tag) => format!("resolved-variant({tag})"),
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "pass" => Ok(CheckStatus::Pass),
            "fail" => Ok(CheckStatus::Fail),
            _ => {
                if let Some(tag) = s.strip_prefix("resolved-variant(").and_then(|r| r.strip_suffix(')')) {
                    Ok(CheckStatus::ResolvedVariant(tag.to_string()))
                } else {
                    Err(Error::ReportFormat(format!("unknown status `{s}`")))
                }
            }
        }
    }
}

/// One verified identity: term counts of both sides and the elapsed time.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub elapsed_ms: u64,
}

/// A suite run: the parameters it was given and its checks, sorted by name.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Report {
    pub suite: String,
    /// Echo of the effective parameters, as sorted key/value strings.
    pub params: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str, params: Vec<(String, String)>, mut checks: Vec<Check>) -> Self {
        let mut params = params;
        params.sort();
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Report { suite: suite.to_string(), params, checks }
    }

    /// True when no check failed (resolved variants count as passes).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status.is_ok())
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "suite: {}", self.suite).unwrap();
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(out, "params: {params}").unwrap();
        writeln!(
            out,
            "{:<28} {:<36} {:>9} {:>9} {:>10}",
            "check", "status", "lhs_terms", "rhs_terms", "elapsed_ms"
        )
        .unwrap();
        for c in &self.checks {
            writeln!(
                out,
                "{:<28} {:<36} {:>9} {:>9} {:>10}",
                c.name,
                c.status.render(),
                c.lhs_terms,
                c.rhs_terms,
                c.elapsed_ms
            )
            .unwrap();
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "result: {verdict} ({} checks)", self.checks.len()).unwrap();
        out
    }

    /// Canonical JSON: sorted keys, `elapsed_ms` pinned to 0, newline-terminated.
    pub fn render_json(&self) -> String {
        let params: serde_json::Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "elapsed_ms": 0,
                    "lhs_terms": c.lhs_terms,
                    "name": c.name,
                    "rhs_terms": c.rhs_terms,
                    "status": c.status.render(),
                })
            })
            .collect();
        let v = json!({
            "checks": checks,
            "params": params,
            "suite": self.suite,
        });
        let mut s = serde_json::to_string(&v).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn parse_json(s: &str) -> Result<Report, Error> {
        let bad = |m: &str| Error::ReportFormat(m.to_string());
        let v: Value = serde_json::from_str(s).map_err(|e| Error::ReportFormat(e.to_string()))?;
        let suite = v
            .get("suite")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing suite"))?
            .to_string();
        let params = v
            .get("params")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing params"))?
            .iter()
            .map(|(k, val)| {
                val.as_str()
                    .map(|s| (k.clone(), s.to_string()))
                    .ok_or_else(|| bad("param values must be strings"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let checks = v
            .get("checks")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing checks"))?
            .iter()
            .map(|c| {
                let name = c
                    .get("name")
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad("check missing name"))?
                    .to_string();
                let status = CheckStatus::parse(
                    c.get("status")
                        .and_then(Value::as_str)
                        .ok_or_else(|| bad("check missing status"))?,
                )?;
                let grab = |key: &str| -> Result<u64, Error> {
                    c.get(key)
                        .and_then(Value::as_u64)
                        .ok_or_else(|| bad(&format!("check missing {key}")))
                };
                Ok(Check {
                    name,
                    status,
                    lhs_terms: grab("lhs_terms")? as usize,
                    rhs_terms: grab("rhs_terms")? as usize,
                    elapsed_ms: grab("elapsed_ms")?,
                })
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(Report::new(&suite, params, checks))
    }
}
