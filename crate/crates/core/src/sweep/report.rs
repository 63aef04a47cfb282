use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::SweepReport;
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 10] = ["family", "p", "m", "n", "a", "b", "criterion", "branch", "oracle", "agree"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Csv,
    Json,
}

/// The report as file contents.
///
/// CSV: one row per item, then `# summary:`, `# branches:` and a final
/// `# fingerprint:` line. JSON: the report object, fingerprint last.
pub fn render_report(report: &SweepReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Spec(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Csv => render_csv(report),
    }
}

fn render_csv(report: &SweepReport) -> Result<String> {
    let spec = &report.spec;
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Spec(format!("csv: {e}"));
    w.write_record(CSV_HEADER).map_err(io)?;
    let family = spec.family.name();
    let (p, m, n) = (spec.p.to_string(), spec.m.to_string(), spec.n.to_string());
    for r in report.rows.iter().flatten() {
        let agree = if r.agree { "true" } else { "false" };
        w.write_record([family, &p, &m, &n, &r.a, &r.b, &r.criterion, &r.branch, &r.oracle, agree])
            .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Spec(format!("csv: {e}")))?;
    let mut out = String::from_utf8(bytes).expect("csv output is utf-8");
    out.push_str(&format!("# summary: {}\n", json(&report.summary)));
    out.push_str(&format!("# branches: {}\n", json(&report.branches)));
    let fp = &report.fingerprint;
    out.push_str(&format!(
        "# fingerprint: p={} m={} n={} modulus={:?} generator={:?}\n",
        fp.p, fp.m, fp.n, fp.modulus, fp.generator
    ));
    Ok(out)
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

/// Writes the rendered report to `path`.
pub fn emit_report(report: &SweepReport, format: ReportFormat, path: &Path) -> Result<()> {
    let body = render_report(report, format)?;
    fs::write(path, body).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}
