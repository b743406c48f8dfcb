use std::io::Write;

use serde::Serialize;
use serde_json::{json, Value};

use super::{AuditReport, BoundCheck};
use crate::error::{Error, Result};

fn tagged<T: Serialize>(kind: &str, record: &T) -> Result<Value> {
    let mut v = serde_json::to_value(record).map_err(|e| Error::Io(e.to_string()))?;
    if let Value::Object(map) = &mut v {
        map.insert("type".to_string(), Value::String(kind.to_string()));
    }
    Ok(v)
}

/// One JSON object per line: bound checks, construction findings, family rows,
/// corpus errors, and the summary last.
pub fn write_jsonl<W: Write>(report: &AuditReport, mut out: W) -> Result<()> {
    let mut emit = |v: Value| -> Result<()> { Ok(writeln!(out, "{v}")?) };
    for c in &report.bound_checks {
        emit(tagged("bound_check", c)?)?;
    }
    for f in &report.findings {
        emit(tagged("construction_finding", f)?)?;
    }
    for r in &report.families {
        emit(tagged("family_row", r)?)?;
    }
    for e in &report.errors {
        emit(tagged("error", e)?)?;
    }
    let mut summary = tagged("summary", &report.summary)?;
    summary["corpus"] = json!(report.corpus);
    summary["tool_version"] = json!(report.tool_version);
    summary["wall_time_secs"] = json!(report.wall_time_secs);
    emit(summary)
}

#[derive(Serialize)]
struct CsvRow<'a> {
    graph6: &'a str,
    op_kind: &'a str,
    site: String,
    #[serde(rename = "D_before")]
    d_before: Option<usize>,
    #[serde(rename = "D_after")]
    d_after: Option<usize>,
    #[serde(rename = "Dp_before")]
    dp_before: Option<usize>,
    #[serde(rename = "Dp_after")]
    dp_after: Option<usize>,
    #[serde(rename = "delta_D")]
    delta_d: Option<i64>,
    #[serde(rename = "delta_Dp")]
    delta_dp: Option<i64>,
    verdicts: String,
    tight: String,
    error: &'a str,
}

impl<'a> From<&'a BoundCheck> for CsvRow<'a> {
    fn from(c: &'a BoundCheck) -> Self {
        CsvRow {
            graph6: &c.graph6,
            op_kind: c.op_kind.name(),
            site: c.site.to_string(),
            d_before: c.d_before,
            d_after: c.d_after,
            dp_before: c.dp_before,
            dp_after: c.dp_after,
            delta_d: c.deltas.d,
            delta_dp: c.deltas.dp,
            verdicts: c.verdicts.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";"),
            tight: c.tight.iter().map(|k| k.id()).collect::<Vec<_>>().join(";"),
            error: c.error.as_deref().unwrap_or(""),
        }
    }
}

/// The bound checks as CSV, one row per record.
pub fn write_csv<W: Write>(report: &AuditReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for c in &report.bound_checks {
        w.serialize(CsvRow::from(c)).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}
