//! Report rows and their text and JSON renderings.

use serde::Serialize;

use crate::case::{LoadedCase, Value};
use crate::error::CliError;
use crate::runner::Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// Matches the recomputed truth, which differs from the printed value.
    DiscrepancyNoted,
    ComputedOnly,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::DiscrepancyNoted => "discrepancy-noted",
            Status::ComputedOnly => "computed-only",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }

    pub fn is_failure(self) -> bool {
        matches!(self, Status::Fail | Status::Error)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub label: String,
    pub kind: String,
    pub status: Status,
    pub computed: Option<Value>,
    pub expected: Option<Value>,
    pub printed: Option<Value>,
    pub citation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Row {
    pub fn from_outcome(loaded: &LoadedCase, outcome: Outcome) -> Self {
        let case = &loaded.case;
        let expected = case.expected.as_ref().map(|c| c.value.clone());
        let printed = case
            .printed
            .as_ref()
            .map(|c| c.value.clone())
            .or(outcome.printed);
        let citation = case
            .expected
            .iter()
            .chain(case.printed.iter())
            .map(|c| c.citation.as_str())
            .collect::<Vec<_>>()
            .join("; ");
        let computed = outcome.value;
        let status = match (&computed, &expected) {
            (_, None) => Status::ComputedOnly,
            (Some(c), Some(e)) if c == e => match &printed {
                Some(p) if p != c => Status::DiscrepancyNoted,
                _ => Status::Pass,
            },
            _ => Status::Fail,
        };
        Row {
            label: case.label.clone(),
            kind: case.kind.to_string(),
            status,
            computed,
            expected,
            printed,
            citation,
            detail: case.note.clone(),
        }
    }

    pub fn from_error(label: String, err: &CliError) -> Self {
        Row {
            label,
            kind: String::new(),
            status: Status::Error,
            computed: None,
            expected: None,
            printed: None,
            citation: String::new(),
            detail: Some(err.to_string()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub pass: usize,
    pub discrepancy_noted: usize,
    pub computed_only: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityReport {
    pub seed: u64,
    pub rows: Vec<Row>,
    pub summary: Summary,
}

impl StabilityReport {
    /// Sorts rows by label and tallies them.
    pub fn new(seed: u64, mut rows: Vec<Row>) -> Self {
        rows.sort_by(|a, b| a.label.cmp(&b.label));
        let mut s = Summary {
            cases: rows.len(),
            ..Summary::default()
        };
        for r in &rows {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::DiscrepancyNoted => s.discrepancy_noted += 1,
                Status::ComputedOnly => s.computed_only += 1,
                Status::Fail => s.fail += 1,
                Status::Error => s.error += 1,
            }
        }
        StabilityReport {
            seed,
            rows,
            summary: s,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.rows.iter().any(|r| r.status.is_failure())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub fn emit_report(report: &StabilityReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Text => text(report),
    }
}

fn show(v: &Option<Value>) -> String {
    v.as_ref().map_or("-".into(), Value::to_string)
}

fn text(report: &StabilityReport) -> String {
    let mut out = format!("kstab report, seed {}\n", report.seed);
    let width = report.rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
    for r in &report.rows {
        out += &format!(
            "{:<17} {:<width$}  computed {}",
            r.status.as_str(),
            r.label,
            show(&r.computed)
        );
        if r.expected.is_some() {
            out += &format!("  expected {}", show(&r.expected));
        }
        if r.status == Status::DiscrepancyNoted || (r.printed.is_some() && r.printed != r.computed)
        {
            out += &format!("  printed {}", show(&r.printed));
        }
        if !r.citation.is_empty() {
            out += &format!("  [{}]", r.citation);
        }
        if let Some(d) = &r.detail {
            out += &format!("  ({d})");
        }
        out.push('\n');
    }
    let s = &report.summary;
    out += &format!(
        "{} cases: {} pass, {} discrepancy-noted, {} computed-only, {} fail, {} error\n",
        s.cases, s.pass, s.discrepancy_noted, s.computed_only, s.fail, s.error
    );
    out
}
