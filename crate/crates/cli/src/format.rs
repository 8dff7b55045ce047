//! Report rendering: aligned text, JSON and CSV.
//!
//! All algebraic values are emitted as strings in the ring rendering so that
//! arbitrarily large integers and polynomials survive any JSON parser. Counts
//! are plain JSON integers.

use std::fmt::Write as _;

use bkfq_core::{Bicomplex, ParamGrid, Params, VerificationReport};
use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

pub fn bicomplex_json(b: &Bicomplex) -> Value {
    let [w, x, y, z] = b.components().map(|c| c.to_string());
    json!({ "1": w, "i": x, "j": y, "ij": z })
}

fn params_json(p: &Params) -> Value {
    let mut m = Map::new();
    m.insert("n".into(), Value::String(p.n.to_string()));
    if let Some(v) = p.m {
        m.insert("m".into(), Value::String(v.to_string()));
    }
    if let Some(v) = p.r {
        m.insert("r".into(), Value::String(v.to_string()));
    }
    Value::Object(m)
}

fn grid_json(g: &ParamGrid) -> Value {
    let range = |r: &std::ops::RangeInclusive<i64>| format!("{}..{}", r.start(), r.end());
    let mut m = Map::new();
    m.insert("n".into(), Value::String(range(&g.n)));
    if let Some(r) = &g.m {
        m.insert("m".into(), Value::String(range(r)));
    }
    if let Some(r) = &g.r {
        m.insert("r".into(), Value::String(range(r)));
    }
    if g.shape == bkfq_core::GridShape::MAtMostN {
        m.insert("shape".into(), Value::String("m<=n".into()));
    }
    Value::Object(m)
}

fn verdict(r: &VerificationReport) -> &'static str {
    if r.all_passed() {
        "pass"
    } else {
        "fail"
    }
}

pub fn report_json(r: &VerificationReport) -> Value {
    let mut m = Map::new();
    m.insert("id".into(), json!(r.id.name()));
    m.insert("equation".into(), json!(r.id.equation()));
    m.insert("mode".into(), json!(r.mode.to_string()));
    m.insert("grid".into(), grid_json(&r.grid));
    m.insert("checked".into(), json!(r.checked));
    m.insert("passed".into(), json!(r.passed));
    m.insert("verdict".into(), json!(verdict(r)));
    if let Some(f) = &r.first_failure {
        m.insert(
            "first_failure".into(),
            json!({
                "params": params_json(&f.params),
                "lhs": bicomplex_json(&f.lhs),
                "rhs": bicomplex_json(&f.rhs),
                "discrepancy": bicomplex_json(&f.discrepancy),
            }),
        );
    }
    Value::Object(m)
}

fn table_block(r: &VerificationReport, out: &mut String) {
    let _ = writeln!(
        out,
        "{} ({})  mode={}  grid: {}",
        r.id.name(),
        r.id.equation(),
        r.mode,
        r.grid
    );
    let _ = writeln!(
        out,
        "  checked: {}  passed: {}  verdict: {}",
        r.checked,
        r.passed,
        verdict(r).to_ascii_uppercase()
    );
    if let Some(f) = &r.first_failure {
        let _ = writeln!(out, "  first failure at {}", f.params);
        let _ = writeln!(out, "    lhs:         {}", f.lhs);
        let _ = writeln!(out, "    rhs:         {}", f.rhs);
        let _ = writeln!(out, "    discrepancy: {}", f.discrepancy);
    }
}

const CSV_HEADER: [&str; 12] = [
    "id",
    "equation",
    "mode",
    "grid",
    "checked",
    "passed",
    "verdict",
    "failure_params",
    "discrepancy_1",
    "discrepancy_i",
    "discrepancy_j",
    "discrepancy_ij",
];

fn csv_rows(reports: &[VerificationReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in reports {
        let (params, disc) = match &r.first_failure {
            Some(f) => (
                f.params.to_string(),
                f.discrepancy.components().map(|c| c.to_string()),
            ),
            None => (String::new(), Default::default()),
        };
        let mut row = vec![
            r.id.name().to_string(),
            r.id.equation().to_string(),
            r.mode.to_string(),
            r.grid.to_string(),
            r.checked.to_string(),
            r.passed.to_string(),
            verdict(r).to_string(),
            params,
        ];
        row.extend(disc);
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

/// Renders a single report.
pub fn format_report(r: &VerificationReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => {
            let mut s = String::new();
            table_block(r, &mut s);
            s
        }
        OutputFormat::Json => pretty(&report_json(r)),
        OutputFormat::Csv => csv_rows(std::slice::from_ref(r)),
    }
}

/// Renders a full audit as one document.
pub fn format_audit(reports: &[VerificationReport], format: OutputFormat) -> String {
    let failed = reports.iter().filter(|r| !r.all_passed()).count();
    match format {
        OutputFormat::Table => {
            let mut s = String::new();
            for r in reports {
                table_block(r, &mut s);
                s.push('\n');
            }
            let _ = writeln!(
                s,
                "{} identities: {} pass, {} fail",
                reports.len(),
                reports.len() - failed,
                failed
            );
            s
        }
        OutputFormat::Json => {
            let mode = reports.first().map(|r| r.mode.to_string());
            pretty(&json!({
                "mode": mode,
                "summary": {
                    "identities": reports.len(),
                    "passed": reports.len() - failed,
                    "failed": failed,
                },
                "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
            }))
        }
        OutputFormat::Csv => csv_rows(reports),
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialise");
    s.push('\n');
    s
}

/// Left-aligned columns separated by two spaces, trailing space trimmed.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', widths[c] - cell.chars().count()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
