use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use parahopf::report::Report;

use crate::Cli;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn header<T: Serialize>(config: &T) -> Value {
    json!({
        "tool": "parahopf",
        "version": env!("CARGO_PKG_VERSION"),
        "config": config,
    })
}

fn write_out(out: Option<&Path>, body: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, body),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()
        }
    }
}

/// Report output: a JSON array (header, then entries) or a text summary.
pub fn emit<T: Serialize>(format: Format, out: Option<&Path>, config: &T, report: &Report) -> std::io::Result<()> {
    let body = match format {
        Format::Json => {
            let mut head = header(config);
            let passed = report.entries.iter().filter(|e| e.passed()).count();
            head["summary"] = json!({
                "passed": passed,
                "total": report.len(),
                "status": if report.all_passed() { "pass" } else { "fail" },
            });
            let mut items = vec![head];
            items.extend(report.entries.iter().map(|e| serde_json::to_value(e).expect("entries serialize")));
            let mut s = serde_json::to_string_pretty(&Value::Array(items)).expect("json");
            s.push('\n');
            s
        }
        Format::Text => render_text(report),
    };
    write_out(out, &body)
}

fn render_text(report: &Report) -> String {
    let mut s = String::new();
    for (axiom, (passed, total)) in report.summary() {
        let mark = if passed == total { "ok  " } else { "FAIL" };
        s.push_str(&format!("{mark} {axiom}: {passed}/{total}\n"));
    }
    for e in report.failures() {
        s.push_str(&format!("  {:?} {} [{}]", e.status, e.axiom, e.word));
        if let Some(err) = &e.error {
            s.push_str(&format!(": {err}"));
        } else {
            s.push_str(&format!(": {} != {}", e.lhs, e.rhs));
        }
        s.push('\n');
    }
    if let Some(dev) = report.max_deviation() {
        s.push_str(&format!("max deviation {dev:.3e}\n"));
    }
    let verdict = if report.all_passed() { "PASS" } else { "FAIL" };
    s.push_str(&format!("{verdict} ({} checks)\n", report.len()));
    s
}

/// Single-value output for `nf`.
pub fn emit_value<C: Serialize, R: Serialize>(cli: &Cli, config: &C, result: &R, text: &str) -> std::io::Result<()> {
    let body = match cli.output {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json!([header(config), result])).expect("json");
            s.push('\n');
            s
        }
        Format::Text => format!("{text}\n"),
    };
    write_out(cli.out.as_deref(), &body)
}
