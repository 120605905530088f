//! CSV and JSON serialization of reports.

use serde::Serialize;

use super::{CountReport, Verdict};
use crate::error::{Error, Result};
use crate::formulas::Statistic;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format {s:?} (expected csv|json)"))),
        }
    }
}

#[derive(Serialize)]
struct Row<'a> {
    id: &'a str,
    family: String,
    patterns: &'a str,
    n: usize,
    statistic: &'static str,
    brute_count: Option<u64>,
    formula_count: Option<i128>,
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

/// Serializes reports with a fixed field order. Timings vary from run to
/// run, so they are only included when `with_timing` is set.
pub fn emit_table(reports: &[CountReport], format: Format, with_timing: bool) -> Result<String> {
    let rows = reports.iter().map(|r| Row {
        id: &r.id,
        family: r.family.to_string(),
        patterns: &r.patterns,
        n: r.n,
        statistic: match r.statistic {
            Statistic::Members => "members",
            Statistic::Connected => "connected",
        },
        brute_count: r.brute_count,
        formula_count: r.formula_count,
        verdict: r.verdict,
        elapsed_ms: with_timing.then_some(r.elapsed.as_millis()),
    });
    match format {
        Format::Json => {
            let rows: Vec<Row> = rows.collect();
            let mut s = serde_json::to_string_pretty(&rows).map_err(|e| Error::Invariant(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in rows {
                w.serialize(row).map_err(|e| Error::Invariant(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Invariant(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Invariant(e.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use std::time::Duration;

    use super::*;
    use crate::generate::Family;

    fn sample() -> CountReport {
        CountReport {
            id: "thm-fib".into(),
            family: Family::RAI,
            patterns: "3421,4312".into(),
            n: 6,
            statistic: Statistic::Members,
            brute_count: Some(5),
            formula_count: Some(5),
            verdict: Verdict::Match,
            elapsed: Duration::from_millis(7),
        }
    }

    #[test]
    fn csv_header_and_row() {
        let s = emit_table(&[sample()], Format::Csv, false).unwrap();
        assert_eq!(
            s,
            "id,family,patterns,n,statistic,brute_count,formula_count,verdict\n\
             thm-fib,RAI,\"3421,4312\",6,members,5,5,MATCH\n"
        );
    }

    #[test]
    fn json_array() {
        let s = emit_table(&[sample(), sample()], Format::Json, true).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 2);
        assert_eq!(v[0]["verdict"], "MATCH");
        assert_eq!(v[0]["elapsed_ms"], 7);
        assert_eq!(v[1]["formula_count"], 5);
    }

    #[test]
    fn skipped_rows_have_empty_counts() {
        let mut r = sample();
        r.brute_count = None;
        r.verdict = Verdict::Skipped;
        let s = emit_table(&[r], Format::Csv, false).unwrap();
        assert!(s.ends_with("members,,5,SKIPPED\n"), "{s}");
    }
}
