//! Rendering a report as JSON or aligned plain text.

use std::fmt::Write;

use crate::config::Format;
use crate::report::Report;
use crate::CliError;

pub fn render(report: &Report, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => report.to_json(),
        Format::Text => Ok(text(report)?),
    }
}

fn text(r: &Report) -> Result<String, CliError> {
    let mut s = String::new();
    let cfg = &r.config;
    writeln!(
        s,
        "diagcoinv {} (schema {})",
        r.tool_version, r.schema_version
    )
    .ok();
    writeln!(
        s,
        "command: {}  type: {}{}",
        serde_json::to_string(&cfg.command)?,
        cfg.type_label,
        cfg.rank
    )
    .ok();
    if !r.objects.is_empty() {
        writeln!(s, "\nobjects:").ok();
        let width = r.objects.keys().map(String::len).max().unwrap_or(0);
        for (k, v) in &r.objects {
            writeln!(s, "  {k:<width$}  {}", serde_json::to_string(v)?).ok();
        }
    }
    if !r.results.is_empty() {
        writeln!(s, "\nresults:").ok();
        let width = r.results.iter().map(|e| e.name.len()).max().unwrap_or(0);
        for e in &r.results {
            let mark = if e.pass { "PASS" } else { "FAIL" };
            writeln!(
                s,
                "  {mark}  {:<width$}  expected: {}  got: {}",
                e.name, e.expected, e.got
            )
            .ok();
        }
    }
    let passed = r.results.iter().filter(|e| e.pass).count();
    writeln!(s, "\n{passed}/{} checks passed", r.results.len()).ok();
    let times: Vec<String> = r
        .timings
        .iter()
        .map(|(k, v)| format!("{k}={v}ms"))
        .collect();
    writeln!(s, "timings: {}", times.join(" ")).ok();
    Ok(s)
}
