//! Report model and its two serializations.
//!
//! JSON goes through `serde_json` with sorted object keys (the default map
//! is ordered), so a report serializes to the same bytes every time.

use serde::Serialize;
use serde_json::Value;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A reported quantity with no pass criterion attached.
    Measured,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Measured => "measured",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub data: Value,
    /// Failing inputs, capped by the module that produced them.
    pub witnesses: Vec<String>,
    /// Wall time in milliseconds, only filled with `--timing`.
    pub elapsed_ms: Option<u64>,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, data: Value) -> Self {
        Check { name: name.into(), status, data, witnesses: Vec::new(), elapsed_ms: None }
    }

    pub fn with_witnesses<S: ToString>(mut self, w: impl IntoIterator<Item = S>) -> Self {
        self.witnesses = w.into_iter().map(|s| s.to_string()).collect();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub parameters: Value,
    pub seed: u64,
    pub checks: Vec<Check>,
    /// Derived normalizations, keyed by name, as exact rationals.
    pub constants: Value,
    /// Sign conventions the numbers above depend on.
    pub anchors: Vec<String>,
    pub elapsed_ms: Option<u64>,
    pub passed: bool,
}

impl Report {
    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(format!("unknown format {:?} (expected json or md)", s)),
        }
    }
}

/// Serialize a report. Output ends with a newline.
pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report is plain data");
            s.push('\n');
            s
        }
        Format::Markdown => markdown(report),
    }
}

fn cell(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    s.replace('|', "\\|").replace('\n', " ")
}

fn kv_table(out: &mut String, header: (&str, &str), v: &Value) {
    let _ = writeln!(out, "| {} | {} |\n|---|---|", header.0, header.1);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let _ = writeln!(out, "| {} | {} |", k, cell(x));
            }
        }
        other => {
            let _ = writeln!(out, "| value | {} |", cell(other));
        }
    }
    out.push('\n');
}

fn markdown(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# e510wb report: {}\n", r.suite);
    let _ = writeln!(out, "Result: **{}**. Seed: {}.", if r.passed { "pass" } else { "fail" }, r.seed);
    if let Some(ms) = r.elapsed_ms {
        let _ = writeln!(out, "Elapsed: {} ms.", ms);
    }
    out.push('\n');
    kv_table(&mut out, ("parameter", "value"), &r.parameters);
    let _ = writeln!(out, "| check | status |\n|---|---|");
    for c in &r.checks {
        let _ = writeln!(out, "| {} | {} |", cell(&Value::String(c.name.clone())), c.status.label());
    }
    out.push('\n');
    for c in &r.checks {
        let _ = writeln!(out, "## {} ({})\n", c.name, c.status.label());
        if let Some(ms) = c.elapsed_ms {
            let _ = writeln!(out, "Elapsed: {} ms.\n", ms);
        }
        kv_table(&mut out, ("key", "value"), &c.data);
        if !c.witnesses.is_empty() {
            let _ = writeln!(out, "Witnesses:\n");
            for w in &c.witnesses {
                let _ = writeln!(out, "- `{}`", w);
            }
            out.push('\n');
        }
    }
    if r.constants.as_object().is_some_and(|m| !m.is_empty()) {
        let _ = writeln!(out, "## Constants\n");
        kv_table(&mut out, ("name", "value"), &r.constants);
    }
    let _ = writeln!(out, "## Anchors\n");
    for a in &r.anchors {
        let _ = writeln!(out, "- {}", a);
    }
    out
}
