//! Text, JSON and CSV renderings of audit reports.

use std::fmt::Write as _;

use crate::audit::{AuditReport, CheckResult, PARAM_ORDER};
use crate::numeric::Rational;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

/// Canonical text of a rational, e.g. `13/54`, `-1/2`, `2`.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn render(report: &AuditReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => to_text(report),
        OutputFormat::Json => to_json(report),
        OutputFormat::Csv => to_csv(report),
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json(report: &AuditReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn from_json(s: &str) -> serde_json::Result<AuditReport> {
    serde_json::from_str(s)
}

/// Parameter columns present anywhere in the report, in canonical order.
pub fn csv_param_columns(report: &AuditReport) -> Vec<&'static str> {
    PARAM_ORDER
        .iter()
        .copied()
        .filter(|name| report.results.iter().any(|r| r.params.get(name).is_some()))
        .collect()
}

fn opt(q: &Option<Rational>) -> String {
    q.as_ref().map(format_rational).unwrap_or_default()
}

/// `id,<params>,lhs,rhs,residual,holds,skipped`, one row per result. A
/// parameter a check does not take is left empty.
pub fn to_csv(report: &AuditReport) -> String {
    let cols = csv_param_columns(report);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["id"];
    header.extend(&cols);
    header.extend(["lhs", "rhs", "residual", "holds", "skipped"]);
    w.write_record(&header).expect("in-memory write");
    for r in &report.results {
        let mut row = vec![r.id.clone()];
        row.extend(
            cols.iter()
                .map(|c| r.params.get(c).map(|v| v.to_string()).unwrap_or_default()),
        );
        row.extend([
            opt(&r.lhs),
            opt(&r.rhs),
            opt(&r.residual),
            r.holds.to_string(),
            r.skipped.to_string(),
        ]);
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn status(r: &CheckResult) -> &'static str {
    match (r.skipped, r.holds) {
        (true, _) => "skip",
        (false, true) => "ok",
        (false, false) => "FAIL",
    }
}

pub fn to_text(report: &AuditReport) -> String {
    let mut out = String::new();
    for r in &report.results {
        let _ = write!(out, "{:<4} {} {}", status(r), r.id, r.params);
        if !r.skipped {
            let _ = write!(
                out,
                "  lhs={} rhs={} residual={}",
                opt(&r.lhs),
                opt(&r.rhs),
                opt(&r.residual)
            );
        }
        out.push('\n');
    }
    if !report.summary.is_empty() {
        out.push_str("\nsummary\n");
        for (id, t) in &report.summary {
            let _ = writeln!(out, "  {id}: pass={} fail={} skip={}", t.pass, t.fail, t.skip);
        }
    }
    out
}
