//! Output rendering and the parsers used by the round-trip tests.
//!
//! Data formats are byte-stable across runs: JSON objects keep a fixed key
//! order (struct order at the top level, sorted keys inside `params`), and
//! timing appears only in the human-readable verify output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use schreier_core::families::CountTable;
use schreier_core::partcomp::Partition;
use schreier_core::setcore::FiniteSet;
use schreier_core::verify::VerifyReport;

use crate::RunError;

/// One enumerated object: a set prints as `{a,b,c}`, a partition as its
/// ascending parts `a,b,c`.
#[derive(Debug, Clone)]
pub enum Object {
    Set(FiniteSet),
    Partition(Partition),
}

impl Object {
    fn values(&self) -> Vec<u64> {
        match self {
            Object::Set(s) => s.elements().to_vec(),
            Object::Partition(p) => p.parts().to_vec(),
        }
    }
}

impl std::fmt::Display for Object {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Object::Set(s) => write!(f, "{s}"),
            Object::Partition(p) => {
                if p.is_empty() {
                    write!(f, "(empty)")
                } else {
                    write!(f, "{p}")
                }
            }
        }
    }
}

/// Top-level JSON document for enumerate/table/sequence output.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonDoc {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub values: serde_json::Value,
    pub count: u64,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonFailure {
    pub params: BTreeMap<String, String>,
    pub lhs: u64,
    pub rhs: u64,
}

/// JSON form of a verify report; canonical, so no elapsed time.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub identity: String,
    pub range: String,
    pub checked: u64,
    pub status: String,
    pub failures: Vec<JsonFailure>,
    pub notes: Vec<String>,
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string(value).expect("serializable");
    text.push('\n');
    text
}

pub fn enumerate_plain(objects: &[Object]) -> String {
    let mut out = String::new();
    for object in objects {
        let _ = writeln!(out, "{object}");
    }
    let _ = writeln!(out, "count: {}", objects.len());
    out
}

pub fn enumerate_csv(objects: &[Object]) -> String {
    let mut out = String::new();
    for object in objects {
        let row = object
            .values()
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",");
        let _ = writeln!(out, "{row}");
    }
    out
}

pub fn enumerate_json(
    family: &str,
    params: &BTreeMap<String, String>,
    objects: &[Object],
) -> String {
    json_line(&JsonDoc {
        family: family.to_string(),
        params: params.clone(),
        values: serde_json::json!(objects.iter().map(Object::values).collect::<Vec<_>>()),
        count: objects.len() as u64,
    })
}

pub fn table_plain(table: &CountTable) -> String {
    let width = table
        .rows
        .iter()
        .flatten()
        .chain(table.n_values.iter())
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(3);
    let mut out = String::new();
    let _ = write!(out, "ell\\n");
    for n in &table.n_values {
        let _ = write!(out, " {n:>width$}");
    }
    let _ = writeln!(out);
    for (ell, row) in table.ell_values.iter().zip(&table.rows) {
        let _ = write!(out, "{ell:>5}");
        for value in row {
            let _ = write!(out, " {value:>width$}");
        }
        let _ = writeln!(out);
    }
    out
}

pub fn table_csv(table: &CountTable) -> String {
    let mut out = String::new();
    let header = table
        .n_values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    let _ = writeln!(out, "ell,{header}");
    for (ell, row) in table.ell_values.iter().zip(&table.rows) {
        let cells = row.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let _ = writeln!(out, "{ell},{cells}");
    }
    out
}

/// Parses the output of [`table_csv`] back into a table.
pub fn parse_table_csv(text: &str) -> Result<CountTable, RunError> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| RunError::usage("empty table"))?;
    let mut cols = header.split(',');
    if cols.next() != Some("ell") {
        return Err(RunError::usage("table header must start with 'ell'"));
    }
    let n_values = cols
        .map(|c| c.parse::<u64>().map_err(|_| RunError::usage("bad header cell")))
        .collect::<Result<Vec<_>, _>>()?;
    let mut ell_values = Vec::new();
    let mut rows = Vec::new();
    for line in lines {
        let mut cells = line.split(',');
        let ell = cells
            .next()
            .ok_or_else(|| RunError::usage("empty row"))?
            .parse::<u64>()
            .map_err(|_| RunError::usage("bad row label"))?;
        ell_values.push(ell);
        let row = cells
            .map(|c| c.parse::<u64>().map_err(|_| RunError::usage("bad cell")))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(CountTable::new(n_values, ell_values, rows)?)
}

pub fn table_json(family: &str, params: &BTreeMap<String, String>, table: &CountTable) -> String {
    json_line(&JsonDoc {
        family: family.to_string(),
        params: params.clone(),
        values: serde_json::json!(table.rows),
        count: table.cells(),
    })
}

pub fn sequence_plain(values: &[u64]) -> String {
    let mut out = values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",");
    out.push('\n');
    out
}

pub fn sequence_csv(n_values: &[u64], values: &[u64]) -> String {
    let mut out = String::from("n,value\n");
    for (n, value) in n_values.iter().zip(values) {
        let _ = writeln!(out, "{n},{value}");
    }
    out
}

/// One `index value` pair per line.
pub fn sequence_bfile(n_values: &[u64], values: &[u64]) -> String {
    let mut out = String::new();
    for (n, value) in n_values.iter().zip(values) {
        let _ = writeln!(out, "{n} {value}");
    }
    out
}

pub fn sequence_json(family: &str, params: &BTreeMap<String, String>, values: &[u64]) -> String {
    json_line(&JsonDoc {
        family: family.to_string(),
        params: params.clone(),
        values: serde_json::json!(values),
        count: values.len() as u64,
    })
}

pub fn verify_plain(reports: &[VerifyReport]) -> String {
    let mut out = String::new();
    for report in reports {
        let status = if report.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{status} {name} checked={checked} failures={failures} ({range}) [{elapsed:.2?}]",
            name = report.identity.name(),
            checked = report.checked,
            failures = report.failures.len(),
            range = report.range,
            elapsed = report.elapsed,
        );
        for note in &report.notes {
            let _ = writeln!(out, "  note: {note}");
        }
        for failure in report.failures.iter().take(5) {
            let _ = writeln!(out, "  counterexample: {failure}");
        }
        if report.failures.len() > 5 {
            let _ = writeln!(out, "  ... {} more", report.failures.len() - 5);
        }
    }
    out
}

pub fn verify_json(reports: &[VerifyReport]) -> String {
    let docs: Vec<JsonReport> = reports
        .iter()
        .map(|report| JsonReport {
            identity: report.identity.name().to_string(),
            range: report.range.clone(),
            checked: report.checked,
            status: if report.passed() { "pass" } else { "fail" }.to_string(),
            failures: report
                .failures
                .iter()
                .map(|f| JsonFailure {
                    params: f.params.iter().cloned().collect(),
                    lhs: f.lhs,
                    rhs: f.rhs,
                })
                .collect(),
            notes: report.notes.clone(),
        })
        .collect();
    json_line(&docs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_csv_roundtrip() {
        let table = CountTable::new(
            vec![1, 2, 3],
            vec![0, 1],
            vec![vec![1, 2, 4], vec![1, 1, 2]],
        )
        .unwrap();
        let text = table_csv(&table);
        let reparsed = parse_table_csv(&text).unwrap();
        assert_eq!(reparsed, table);
        assert_eq!(table_csv(&reparsed), text);
    }

    #[test]
    fn bfile_lines() {
        assert_eq!(sequence_bfile(&[0, 1, 2], &[1, 1, 2]), "0 1\n1 1\n2 2\n");
    }

    #[test]
    fn failing_report_renders_counterexample() {
        use schreier_core::verify::{Failure, IdentityId};
        let report = VerifyReport {
            identity: IdentityId::Thm10,
            range: "n=1..2".to_string(),
            checked: 2,
            failures: vec![Failure {
                params: vec![("n".to_string(), "2".to_string())],
                lhs: 1,
                rhs: 2,
            }],
            elapsed: std::time::Duration::ZERO,
            notes: Vec::new(),
        };
        let text = verify_plain(&[report]);
        assert!(text.contains("FAIL THM10"));
        assert!(text.contains("counterexample: n=2: lhs=1 rhs=2"));
    }

    #[test]
    fn json_doc_roundtrip() {
        let doc = JsonDoc {
            family: "A".to_string(),
            params: [("ell".to_string(), "1".to_string())].into_iter().collect(),
            values: serde_json::json!([1, 2, 3]),
            count: 3,
        };
        let text = json_line(&doc);
        let reparsed: JsonDoc = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(reparsed, doc);
        assert_eq!(json_line(&reparsed), text);
    }
}
