//! Report serialization. Real values are written as decimal strings with
//! 50 significant digits so no precision is lost to binary floats.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Status, Summary, VerificationResult};
use crate::catalog::Expectation;
use crate::error::{Error, Result};
use crate::mpreal::{to_decimal, Real};

pub const SCHEMA_VERSION: &str = "1";
const DIGITS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::InvalidArgument(format!("unknown report format `{other}`"))),
        }
    }
}

/// One flat report row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub identity_id: String,
    pub m: Option<i64>,
    pub n: Option<i64>,
    pub status: Status,
    pub expected: Expectation,
    pub lhs_value: Option<String>,
    pub lhs_error_bound: Option<String>,
    pub rhs_value: Option<String>,
    pub abs_diff: Option<String>,
    pub terms_used: u64,
    pub precision_bits: u32,
    pub note: Option<String>,
}

impl From<&VerificationResult> for ResultRecord {
    fn from(r: &VerificationResult) -> Self {
        let dec = |x: &Option<Real>| x.as_ref().map(|v| to_decimal(v, DIGITS));
        Self {
            identity_id: r.identity_id.clone(),
            m: r.params.m,
            n: r.params.n,
            status: r.status,
            expected: r.expected,
            lhs_value: dec(&r.lhs_value),
            lhs_error_bound: r.lhs_error_bound.map(|b| format!("{b:e}")),
            rhs_value: dec(&r.rhs_value),
            abs_diff: dec(&r.abs_diff),
            terms_used: r.terms_used,
            precision_bits: r.precision_bits,
            note: r.note.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub results: Vec<ResultRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn new(results: &[VerificationResult]) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            results: results.iter().map(ResultRecord::from).collect(),
            summary: Summary::of(results),
        }
    }
}

pub fn render_json(results: &[VerificationResult]) -> String {
    let mut s = serde_json::to_string_pretty(&Report::new(results)).expect("report is serializable");
    s.push('\n');
    s
}

pub fn render_csv(results: &[VerificationResult]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let wrap = |source| Error::Csv { path: "<memory>".into(), source };
    if results.is_empty() {
        // serde only emits the header alongside the first row
        w.write_record(CSV_HEADER).map_err(wrap)?;
    }
    for r in results {
        w.serialize(ResultRecord::from(r)).map_err(wrap)?;
    }
    let bytes = w.into_inner().map_err(|e| wrap(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

const CSV_HEADER: [&str; 12] = [
    "identity_id",
    "m",
    "n",
    "status",
    "expected",
    "lhs_value",
    "lhs_error_bound",
    "rhs_value",
    "abs_diff",
    "terms_used",
    "precision_bits",
    "note",
];

/// Writes `results` to `path`. The output is a pure function of the
/// results, so identical sweeps produce byte-identical files.
pub fn write_report(results: &[VerificationResult], format: ReportFormat, path: &Path) -> Result<()> {
    let body = match format {
        ReportFormat::Json => render_json(results),
        ReportFormat::Csv => render_csv(results).map_err(|e| match e {
            Error::Csv { source, .. } => Error::Csv { path: path.into(), source },
            other => other,
        })?,
    };
    fs::write(path, body).map_err(|source| Error::Io { path: path.into(), source })
}

pub fn read_json_report(path: &Path) -> Result<Report> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| Error::Json { path: path.into(), source })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::ParamSet;
    use crate::harness::{verify_one, SweepConfig};
    use crate::mpreal::parse_decimal;

    fn sample() -> Vec<VerificationResult> {
        let cfg = SweepConfig { precision_bits: 256, ..SweepConfig::default() };
        vec![
            verify_one("E24", &ParamSet::EMPTY, &cfg).unwrap(),
            verify_one("T4-e", &ParamSet::mn(1, 1), &cfg).unwrap(),
            verify_one("K2", &ParamSet::EMPTY, &SweepConfig { max_terms: 3, ..cfg.clone() }).unwrap(),
        ]
    }

    #[test]
    fn json_round_trip() {
        let rs = sample();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.json");
        write_report(&rs[..1], ReportFormat::Json, &path).unwrap();
        let back = read_json_report(&path).unwrap();
        assert_eq!(back.schema_version, "1");
        assert_eq!(back.results.len(), 1);
        assert_eq!(back.results[0].status, Status::Pass);
        assert_eq!(back.summary.pass, 1);
        let v = parse_decimal(back.results[0].lhs_value.as_ref().unwrap(), 256).unwrap();
        let orig = rs[0].lhs_value.as_ref().unwrap();
        assert!(rug::Float::with_val(256, &v - orig).abs() < 1e-48);
    }

    #[test]
    fn csv_has_one_row_per_result() {
        let rs = sample();
        let text = render_csv(&rs).unwrap();
        let mut rdr = csv::Reader::from_reader(text.as_bytes());
        let rows: Vec<ResultRecord> = rdr.deserialize().map(|r| r.unwrap()).collect();
        assert_eq!(rows.len(), rs.len());
        assert_eq!(rows[1].status, Status::DomainSkip);
        assert_eq!(rows[2].status, Status::NonConverged);
        assert_eq!(rows[1].m, Some(1));
        assert_eq!(rows[0].m, None);

        let empty = render_csv(&[]).unwrap();
        assert_eq!(empty.lines().count(), 1);
    }

    #[test]
    fn rendering_is_deterministic() {
        assert_eq!(render_json(&sample()), render_json(&sample()));
    }

    #[test]
    fn io_errors_carry_the_path() {
        let err = write_report(&sample(), ReportFormat::Json, Path::new("/nonexistent/dir/r.json")).unwrap_err();
        assert!(err.to_string().contains("/nonexistent/dir/r.json"));
        assert!("xml".parse::<ReportFormat>().is_err());
    }
}
