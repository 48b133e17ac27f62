//! Report artifacts: pretty-printed JSON documents and a CSV summary with
//! one row per check.
//!
//! Writers are deterministic — fixed field order, sorted rows supplied by
//! callers, trailing newline — so identical runs produce byte-identical
//! files.

use serde::Serialize;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot serialize report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot write CSV report: {0}")]
    Csv(#[from] csv::Error),
}

/// One verification check: the finest grain reported in CSV summaries.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckRecord {
    /// The verify target or conjecture suite this check belongs to.
    pub target: String,
    /// What was checked, in one short phrase.
    pub check: String,
    pub passed: bool,
    /// Empty on pass; on failure, what differed.
    pub detail: String,
}

impl CheckRecord {
    pub fn pass(target: &str, check: impl Into<String>) -> CheckRecord {
        CheckRecord {
            target: target.into(),
            check: check.into(),
            passed: true,
            detail: String::new(),
        }
    }

    pub fn fail(target: &str, check: impl Into<String>, detail: impl Into<String>) -> CheckRecord {
        CheckRecord {
            target: target.into(),
            check: check.into(),
            passed: false,
            detail: detail.into(),
        }
    }
}

/// Serializes `value` as pretty JSON with a trailing newline.
pub fn render_json<T: Serialize>(value: &T) -> Result<String, ReportError> {
    let mut body = serde_json::to_string_pretty(value)?;
    body.push('\n');
    Ok(body)
}

/// Writes `<dir>/<name>.json`, creating the directory if needed.
pub fn write_json<T: Serialize>(dir: &Path, name: &str, value: &T) -> Result<PathBuf, ReportError> {
    fs::create_dir_all(dir)?;
    let path = dir.join(format!("{name}.json"));
    let mut file = fs::File::create(&path)?;
    file.write_all(render_json(value)?.as_bytes())?;
    Ok(path)
}

/// Renders check records as CSV: a header plus one row per check.
pub fn render_csv(rows: &[CheckRecord]) -> Result<String, ReportError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["target", "check", "passed", "detail"])?;
    for row in rows {
        writer.write_record([
            row.target.as_str(),
            row.check.as_str(),
            if row.passed { "true" } else { "false" },
            row.detail.as_str(),
        ])?;
    }
    let bytes = writer.into_inner().expect("in-memory writer cannot fail");
    Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
}

/// Writes `<dir>/<name>.csv`, creating the directory if needed.
pub fn write_csv(dir: &Path, name: &str, rows: &[CheckRecord]) -> Result<PathBuf, ReportError> {
    fs::create_dir_all(dir)?;
    let path = dir.join(format!("{name}.csv"));
    fs::write(&path, render_csv(rows)?)?;
    Ok(path)
}
