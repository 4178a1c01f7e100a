//! Deterministic machine- and human-readable reports.
//!
//! Rationals serialize as `"num/den"` strings (integers as `"n/1"`), spectra
//! as `[[eigenvalue, multiplicity], ...]`. Output is byte-identical across
//! runs for identical input; per-case wall time is deliberately omitted.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{CaseResult, SurveyReport, SweepEntry, Verdict};
use crate::error::Error;
use crate::rat::{fmt_rat, rat_abs};
use crate::formulas::Value;
use crate::Result;

/// Report schema version.
pub const REPORT_VERSION: &str = "1";

fn generated_by() -> String {
    format!("ncg-core {}", env!("CARGO_PKG_VERSION"))
}

/// Output format for sweep reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Table,
}

impl ReportFormat {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "table" => Ok(ReportFormat::Table),
            other => Err(Error::Config(format!("unknown report format {other:?}"))),
        }
    }
}

#[derive(Serialize)]
struct JsonDoc {
    version: &'static str,
    #[serde(rename = "generatedBy")]
    generated_by: String,
    cases: Vec<JsonCase>,
}

#[derive(Serialize)]
struct JsonCase {
    #[serde(rename = "caseId")]
    case_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    params: Option<BTreeMap<String, i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<usize>,
    #[serde(rename = "centerSize", skip_serializing_if = "Option::is_none")]
    center_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum: Option<Vec<(String, usize)>>,
    #[serde(rename = "leComputed", skip_serializing_if = "Option::is_none")]
    le_computed: Option<String>,
    #[serde(rename = "lePaper", skip_serializing_if = "Option::is_none")]
    le_paper: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pr: Option<String>,
    #[serde(rename = "prTwoWayAgree", skip_serializing_if = "Option::is_none")]
    pr_two_way_agree: Option<bool>,
}

fn paper_json(v: &Value) -> serde_json::Value {
    match v {
        Value::One(r) => serde_json::Value::String(fmt_rat(r)),
        Value::Set(rs) => {
            serde_json::Value::Array(rs.iter().map(|r| serde_json::Value::String(fmt_rat(r))).collect())
        }
    }
}

fn json_case(entry: &SweepEntry) -> JsonCase {
    match entry {
        SweepEntry::Failed { case_id, error } => JsonCase {
            case_id: case_id.clone(),
            error: Some(error.clone()),
            family: None,
            params: None,
            order: None,
            center_size: None,
            vertices: None,
            edges: None,
            spectrum: None,
            le_computed: None,
            le_paper: None,
            verdict: None,
            delta: None,
            reason: None,
            pr: None,
            pr_two_way_agree: None,
        },
        SweepEntry::Case(c) => {
            let (delta, reason) = match &c.verdict {
                Verdict::Mismatch { delta } => (Some(fmt_rat(delta)), None),
                Verdict::HypothesisFailed { reason } => (None, Some(reason.clone())),
                _ => (None, None),
            };
            JsonCase {
                case_id: c.case_id.clone(),
                error: None,
                family: Some(c.group.family_name().to_string()),
                params: Some(
                    c.params
                        .iter()
                        .map(|(k, v)| (k.to_string(), *v))
                        .collect(),
                ),
                order: Some(c.order),
                center_size: Some(c.center_size),
                vertices: Some(c.vertices),
                edges: Some(c.edges),
                spectrum: Some(
                    c.spectrum
                        .entries()
                        .iter()
                        .map(|(v, m)| (fmt_rat(v), *m))
                        .collect(),
                ),
                le_computed: Some(fmt_rat(&c.le_computed)),
                le_paper: c.le_paper.as_ref().map(paper_json),
                verdict: Some(c.verdict.name().to_string()),
                delta,
                reason,
                pr: Some(fmt_rat(&c.pr)),
                pr_two_way_agree: Some(c.pr_two_way_agree),
            }
        }
    }
}

/// JSON report: `{version, generatedBy, cases: [...]}`.
pub fn to_json(entries: &[SweepEntry]) -> String {
    let doc = JsonDoc {
        version: REPORT_VERSION,
        generated_by: generated_by(),
        cases: entries.iter().map(json_case).collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("report serialization");
    out.push('\n');
    out
}

fn params_string(c: &CaseResult) -> String {
    c.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn paper_string(c: &CaseResult) -> String {
    match &c.le_paper {
        None => "n/a".to_string(),
        Some(v) => v.to_string(),
    }
}

fn delta_abs_string(c: &CaseResult) -> String {
    match &c.verdict {
        Verdict::Mismatch { delta } => fmt_rat(&rat_abs(delta)),
        Verdict::Match => "0/1".to_string(),
        _ => String::new(),
    }
}

/// CSV columns: caseId, family, params, vertices, edges, leComputed,
/// lePaper, verdict, deltaAbs.
pub fn to_csv(entries: &[SweepEntry]) -> String {
    let mut out = String::from("caseId,family,params,vertices,edges,leComputed,lePaper,verdict,deltaAbs\n");
    for entry in entries {
        match entry {
            SweepEntry::Failed { case_id, error } => {
                out.push_str(&format!("{case_id},,,,,,,error: {},\n", error.replace(',', ";")));
            }
            SweepEntry::Case(c) => {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    c.case_id,
                    c.group.family_name(),
                    params_string(c),
                    c.vertices,
                    c.edges,
                    fmt_rat(&c.le_computed),
                    paper_string(c),
                    c.verdict.name(),
                    delta_abs_string(c),
                ));
            }
        }
    }
    out
}

/// Aligned human-readable table.
pub fn to_table(entries: &[SweepEntry]) -> String {
    let mut rows: Vec<[String; 6]> = vec![[
        "case".into(),
        "V".into(),
        "E".into(),
        "LE".into(),
        "paper".into(),
        "verdict".into(),
    ]];
    for entry in entries {
        match entry {
            SweepEntry::Failed { case_id, error } => rows.push([
                case_id.clone(),
                "-".into(),
                "-".into(),
                "-".into(),
                "-".into(),
                format!("error: {error}"),
            ]),
            SweepEntry::Case(c) => {
                let verdict = match &c.verdict {
                    Verdict::Mismatch { delta } => {
                        format!("Mismatch (delta {})", fmt_rat(delta))
                    }
                    Verdict::HypothesisFailed { reason } => {
                        format!("HypothesisFailed ({reason})")
                    }
                    v => v.name().to_string(),
                };
                rows.push([
                    c.case_id.clone(),
                    c.vertices.to_string(),
                    c.edges.to_string(),
                    fmt_rat(&c.le_computed),
                    paper_string(c),
                    verdict,
                ]);
            }
        }
    }
    let mut widths = [0usize; 6];
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            if i + 1 < row.len() {
                out.push_str(&" ".repeat(widths[i] - cell.len()));
            }
        }
        out.push('\n');
    }
    out
}

pub fn emit(entries: &[SweepEntry], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => to_json(entries),
        ReportFormat::Csv => to_csv(entries),
        ReportFormat::Table => to_table(entries),
    }
}

/// Render the planarity survey as an aligned table.
pub fn survey_table(report: &SurveyReport) -> String {
    let mut out = format!("planarity survey, |G| <= {}\n", report.max_order);
    let mut rows: Vec<[String; 5]> = vec![[
        "group".into(),
        "order".into(),
        "V".into(),
        "planar".into(),
        "LE".into(),
    ]];
    for row in &report.rows {
        rows.push([
            row.spec.id_string(),
            row.order.to_string(),
            row.vertices.to_string(),
            if row.planar { "yes" } else { "no" }.into(),
            fmt_rat(&row.le),
        ]);
    }
    let mut widths = [0usize; 5];
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            if i + 1 < row.len() {
                out.push_str(&" ".repeat(widths[i] - cell.len()));
            }
        }
        out.push('\n');
    }
    out
}
