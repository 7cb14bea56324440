//! Human and JSON renderings of goal reports.
//!
//! Both read the same [`GoalReport`], so a goal's status never differs
//! between them.

use serde_json::{json, Value};
use spinel_core::infer::Diagnostic;

use crate::parse::{GoalKind, ParseError};
use crate::session::GoalReport;

#[derive(Clone, Copy, Debug, Default)]
pub struct Style {
    pub elab: bool,
    pub trace: bool,
    pub color: bool,
}

const INDENT: &str = "    ";

fn paint(style: Style, code: &str, text: &str) -> String {
    if style.color {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

pub fn human(report: &GoalReport, style: Style) -> String {
    let mut out = String::new();
    let status = if report.is_ok() { paint(style, "32", "ok") } else { paint(style, "1;31", "error") };
    out.push_str(&format!("{}:{}: {status}: {}\n", report.line, report.col, report.text));
    match &report.outcome {
        Ok(success) => {
            out.push_str(&format!("{INDENT}type: {}\n", success.ty));
            if style.elab {
                out.push_str(&format!("{INDENT}elaboration: {}\n", success.elaboration));
            }
        }
        Err(d) => {
            if let Some((line, col)) = report.diagnostic_at {
                out.push_str(&format!("{INDENT}at {line}:{col}\n"));
            }
            out.push_str(&indent(&diagnostic_text(d, style)));
        }
    }
    if let Some(spec) = &report.spec {
        let verdict = if spec.accepted { "accepted" } else { "REJECTED" };
        out.push_str(&format!("{INDENT}spec: {verdict}"));
        if style.trace && !spec.trace.is_empty() {
            out.push_str(&format!(" ({})", spec.trace.join(" ")));
        }
        out.push('\n');
    }
    if style.trace {
        out.push_str(&format!("{INDENT}trace: {}\n", report.trace.join(" ")));
    }
    out
}

fn diagnostic_text(d: &Diagnostic, style: Style) -> String {
    let lines = d.lines();
    let width = lines.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (label, text) in lines {
        let padded = format!("{label:>width$}:");
        let label = if label == "error" { paint(style, "1;31", &padded) } else { paint(style, "1", &padded) };
        out.push_str(&format!("{label} {text}\n"));
    }
    out
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("{INDENT}{l}\n")).collect()
}

pub fn human_parse_error(e: &ParseError, style: Style) -> String {
    format!("{}: {e}\n", paint(style, "1;31", "parse error"))
}

pub fn json(report: &GoalReport) -> Value {
    let kind = match report.kind {
        GoalKind::Check => "check",
        GoalKind::Synth => "synth",
    };
    let mut v = json!({
        "goal": report.text,
        "kind": kind,
        "line": report.line,
        "col": report.col,
        "status": if report.is_ok() { "ok" } else { "error" },
        "type": Value::Null,
        "elaboration": Value::Null,
        "diagnostic": Value::Null,
        "trace": report.trace,
    });
    match &report.outcome {
        Ok(s) => {
            v["type"] = json!(s.ty.to_string());
            v["elaboration"] = json!(s.elaboration.to_string());
        }
        Err(d) => v["diagnostic"] = diagnostic_json(d, report.diagnostic_at),
    }
    if let Some(spec) = &report.spec {
        v["spec_verify"] = json!({ "accepted": spec.accepted, "trace": spec.trace });
    }
    v
}

fn diagnostic_json(d: &Diagnostic, at: Option<(usize, usize)>) -> Value {
    let text = |t: &Option<spinel_core::Type>| t.as_ref().map(|t| t.to_string());
    let (line, col) = at.unwrap_or((0, 0));
    json!({
        "kind": d.kind.name(),
        "message": d.message(),
        "name": d.name,
        "expected": text(&d.expected),
        "expected_solved": text(&d.expected_solved),
        "synthesized": text(&d.synthesized),
        "contextual_match": d.contextual_match.as_ref().map(|(p, a)| json!({
            "partial": p.to_string(),
            "against": a.to_string(),
        })),
        "synthetic_match": d.synthetic_match.as_ref().map(|m| json!({
            "partial": m.partial.to_string(),
            "against": m.against.to_string(),
            "arg_index": m.arg_index,
        })),
        "detail": d.detail,
        "span": { "start": d.span.start, "end": d.span.end, "line": line, "col": col },
    })
}

pub fn json_parse_error(e: &ParseError) -> Value {
    json!({
        "status": "parse_error",
        "message": e.message,
        "line": e.line,
        "col": e.col,
        "span": { "start": e.span.start, "end": e.span.end },
    })
}
