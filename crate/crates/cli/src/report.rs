//! Report records: JSON-lines files and their CSV summaries.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::OpenOptions;
use std::io::{self, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// The JSON schema every record validates against.
pub const SCHEMA: &str = include_str!("../schema/report_record.schema.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Construction,
    Containment,
    Formula,
    Oracle,
    Decomposition,
    Verification,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub kind: Kind,
    pub parameters: BTreeMap<String, i64>,
    pub result: Value,
    /// graph6 strings of the graphs the result refers to.
    pub artifact_refs: Vec<String>,
}

impl ReportRecord {
    pub fn new(kind: Kind, parameters: &[(&str, usize)], result: impl Serialize, artifact_refs: Vec<String>) -> Self {
        Self {
            kind,
            parameters: parameters.iter().map(|&(k, v)| (k.to_owned(), v as i64)).collect(),
            result: serde_json::to_value(result).expect("result types serialize"),
            artifact_refs,
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// Appends records to a JSON-lines file, creating it if needed.
pub fn append_records(path: &Path, records: &[ReportRecord]) -> io::Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut buf = String::new();
    for r in records {
        buf.push_str(&r.to_line());
        buf.push('\n');
    }
    file.write_all(buf.as_bytes())
}

/// Parses a JSON-lines report; blank lines are skipped.
pub fn read_records(text: &str) -> Result<Vec<ReportRecord>, (usize, serde_json::Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| (i + 1, e)))
        .collect()
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some(String::new()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| x.is_number() || x.is_string()) => {
            Some(items.iter().map(|x| scalar_text(x).unwrap_or_default()).collect::<Vec<_>>().join(" "))
        }
        _ => None,
    }
}

/// Flattens nested objects into dotted keys; keeps only scalar leaves and
/// arrays of scalars.
fn flatten(prefix: &str, v: &Value, out: &mut BTreeMap<String, String>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        other => {
            if let Some(text) = scalar_text(other) {
                out.insert(prefix.to_owned(), text);
            }
        }
    }
}

/// One CSV row per record: `kind`, every parameter, then every scalar leaf
/// of the result under its dotted path. Columns are the sorted union over
/// records.
pub fn render_csv<W: Write>(records: &[ReportRecord], out: W) -> csv::Result<()> {
    let params: BTreeSet<&str> = records.iter().flat_map(|r| r.parameters.keys().map(String::as_str)).collect();
    let rows: Vec<BTreeMap<String, String>> = records
        .iter()
        .map(|r| {
            let mut m = BTreeMap::new();
            flatten("", &r.result, &mut m);
            m
        })
        .collect();
    let fields: BTreeSet<&str> = rows.iter().flat_map(|m| m.keys().map(String::as_str)).collect();
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["kind".to_owned()];
    header.extend(params.iter().map(|p| (*p).to_owned()));
    header.extend(fields.iter().map(|f| (*f).to_owned()));
    w.write_record(&header)?;
    for (r, flat) in records.iter().zip(&rows) {
        let mut row =
            vec![serde_json::to_value(r.kind).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()];
        row.extend(params.iter().map(|p| r.parameters.get(*p).map(i64::to_string).unwrap_or_default()));
        row.extend(fields.iter().map(|f| flat.get(*f).cloned().unwrap_or_default()));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
