use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use crate::run::BenchReport;
use crate::BenchError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    /// One line per run; summaries are not included.
    #[default]
    Csv,
    /// Rows and summaries.
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!(
                "unknown report format `{other}` (expected csv or json)"
            )),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Csv => "csv",
            ReportFormat::Json => "json",
        })
    }
}

pub fn write_report<W: Write>(
    report: &BenchReport,
    format: ReportFormat,
    out: W,
) -> Result<(), BenchError> {
    match format {
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in &report.rows {
                w.serialize(row)?;
            }
            w.flush().map_err(csv::Error::from)?;
        }
        ReportFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, report)?;
            writeln!(out).map_err(serde_json::Error::io)?;
        }
    }
    Ok(())
}

pub fn emit_report(
    report: &BenchReport,
    format: ReportFormat,
    path: impl AsRef<Path>,
) -> Result<(), BenchError> {
    let path = path.as_ref();
    let io_err = |source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    let mut out = BufWriter::new(file);
    write_report(report, format, &mut out)?;
    out.flush().map_err(io_err)
}

pub fn read_json_report(text: &str) -> Result<BenchReport, serde_json::Error> {
    serde_json::from_str(text)
}
