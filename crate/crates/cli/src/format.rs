//! Text and JSON renderings of values and statement results.
//!
//! JSON values look like
//! `{"T": [{"lo": "0.3", "hi": "0.4", "lo_open": false, "hi_open": false}, {"point": "0.6"}], "I": [...], "F": [...]}`
//! with bounds in the same `0.3` / `0.3-` / `0.3+` / `0.3-+` spelling as the DSL.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use neutrosophic_core::{NLValue, NsBound, NsSet, Piece};

use crate::dsl::ExprDisplay;
use crate::run::Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON value: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid bound or set in JSON value: {0}")]
    Value(#[from] neutrosophic_core::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum PieceJson {
    Interval {
        lo: String,
        hi: String,
        lo_open: bool,
        hi_open: bool,
    },
    Point {
        point: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct ValueJson {
    #[serde(rename = "T")]
    t: Vec<PieceJson>,
    #[serde(rename = "I")]
    i: Vec<PieceJson>,
    #[serde(rename = "F")]
    f: Vec<PieceJson>,
}

fn set_to_json(s: &NsSet) -> Vec<PieceJson> {
    s.pieces()
        .into_iter()
        .map(|p| match p {
            Piece::Point(x) => PieceJson::Point {
                point: x.to_string(),
            },
            Piece::Interval(iv) => PieceJson::Interval {
                lo: iv.lo.to_string(),
                hi: iv.hi.to_string(),
                lo_open: iv.lo_open,
                hi_open: iv.hi_open,
            },
        })
        .collect()
}

fn set_from_json(pieces: &[PieceJson]) -> Result<NsSet, FormatError> {
    let raw = pieces
        .iter()
        .map(|p| {
            Ok(match p {
                PieceJson::Point { point } => Piece::Point(NsBound::from_str(point)?),
                PieceJson::Interval {
                    lo,
                    hi,
                    lo_open,
                    hi_open,
                } => Piece::interval(lo.parse()?, hi.parse()?, *lo_open, *hi_open),
            })
        })
        .collect::<Result<Vec<_>, FormatError>>()?;
    Ok(NsSet::normalize(raw)?)
}

fn value_json(v: &NLValue) -> ValueJson {
    ValueJson {
        t: set_to_json(v.truth()),
        i: set_to_json(v.indeterminacy()),
        f: set_to_json(v.falsehood()),
    }
}

pub fn value_to_json(v: &NLValue) -> serde_json::Value {
    serde_json::to_value(value_json(v)).expect("plain data serializes")
}

pub fn value_from_json(text: &str) -> Result<NLValue, FormatError> {
    let raw: ValueJson = serde_json::from_str(text)?;
    Ok(NLValue::new(
        set_from_json(&raw.t)?,
        set_from_json(&raw.i)?,
        set_from_json(&raw.f)?,
    )?)
}

pub fn format_value(v: &NLValue, mode: OutputFormat) -> String {
    match mode {
        OutputFormat::Text => v.to_string(),
        OutputFormat::Json => value_to_json(v).to_string(),
    }
}

fn outcome_json(o: &Outcome) -> serde_json::Value {
    match o {
        Outcome::Eval { index, expr, value } => json!({
            "statement": index,
            "kind": "eval",
            "expr": ExprDisplay(expr).to_string(),
            "value": value_to_json(value),
        }),
        Outcome::Classify {
            index,
            expr,
            value,
            class,
            grade,
        } => json!({
            "statement": index,
            "kind": "classify",
            "expr": ExprDisplay(expr).to_string(),
            "value": value_to_json(value),
            "singleton": class.singleton,
            "n": class.n,
            "flags": class.flags.iter().map(|f| f.name()).collect::<Vec<_>>(),
            "grade": grade.name(),
        }),
        Outcome::Table {
            index,
            expr,
            report,
        } => json!({
            "statement": index,
            "kind": "table",
            "expr": ExprDisplay(expr).to_string(),
            "rows": report.rows.iter().map(|r| json!({
                "assignment": r.assignment.iter().map(|(a, b)| (a.clone(), json!(b))).collect::<serde_json::Map<_, _>>(),
                "T": set_to_json(&r.truth),
                "expected": r.expected,
                "match": r.matches,
            })).collect::<Vec<_>>(),
            "mismatches": report.mismatches,
        }),
    }
}

fn outcome_text(o: &Outcome, out: &mut String) {
    let bit = |b: bool| if b { '1' } else { '0' };
    match o {
        Outcome::Eval { expr, value, .. } => {
            let _ = writeln!(out, "eval {}", ExprDisplay(expr));
            let _ = writeln!(out, "  {value}");
        }
        Outcome::Classify {
            expr,
            value,
            class,
            grade,
            ..
        } => {
            let _ = writeln!(out, "classify {}", ExprDisplay(expr));
            let _ = writeln!(out, "  value: {value}");
            match class.n {
                Some(n) => {
                    let _ = writeln!(out, "  singleton: n = {n}");
                }
                None => out.push_str("  singleton: no\n"),
            }
            let flags: Vec<&str> = class.flags.iter().map(|f| f.name()).collect();
            let _ = writeln!(
                out,
                "  flags: {}",
                if flags.is_empty() {
                    "-".to_string()
                } else {
                    flags.join(", ")
                }
            );
            let _ = writeln!(out, "  grade: {grade}");
        }
        Outcome::Table { expr, report, .. } => {
            let _ = writeln!(out, "table {}", ExprDisplay(expr));
            for row in &report.rows {
                let assignment: Vec<String> = row
                    .assignment
                    .iter()
                    .map(|(a, b)| format!("{a}={}", bit(*b)))
                    .collect();
                let _ = writeln!(
                    out,
                    "  {} | T={} | classical {} {}",
                    assignment.join(" "),
                    row.truth,
                    bit(row.expected),
                    if row.matches { "ok" } else { "MISMATCH" }
                );
            }
            let _ = writeln!(out, "  mismatches: {}", report.mismatches);
        }
    }
}

/// Renders all results; the same outcomes always give the same bytes.
pub fn format_outcomes(outcomes: &[Outcome], mode: OutputFormat) -> String {
    match mode {
        OutputFormat::Json => {
            let all: Vec<serde_json::Value> = outcomes.iter().map(outcome_json).collect();
            let mut s = serde_json::to_string_pretty(&all).expect("plain data serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for o in outcomes {
                outcome_text(o, &mut s);
            }
            s
        }
    }
}
