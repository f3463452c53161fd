//! Report envelope, CSV assembly, and atomic artifact writes.
//!
//! Every artifact carries enough context to reproduce it: the scenario
//! origin, the SHA-256 of all resolved scenario values, and every default
//! that was applied. JSON reports embed these as fields; CSV tables carry
//! them as `#`-prefixed comment lines above the header row.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::CliError;
use crate::scenario::Scenario;

/// The JSON artifact: provenance envelope plus command-specific data.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub scenario: String,
    pub scenario_sha256: String,
    pub applied_defaults: Vec<String>,
    pub notes: Vec<String>,
    pub data: serde_json::Value,
}

impl Report {
    pub fn new(command: impl Into<String>, scenario: &Scenario, data: serde_json::Value) -> Self {
        Report {
            command: command.into(),
            scenario: scenario.origin.clone(),
            scenario_sha256: scenario.sha256.clone(),
            applied_defaults: scenario.applied_defaults.clone(),
            notes: Vec::new(),
            data,
        }
    }

    pub fn push_note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn to_json_bytes(&self) -> Result<Vec<u8>, CliError> {
        let mut bytes = serde_json::to_vec_pretty(self)
            .map_err(|e| CliError::scenario(format!("cannot serialize report: {e}")))?;
        bytes.push(b'\n');
        Ok(bytes)
    }
}

/// The CSV artifact: comment preamble, header row, data rows.
#[derive(Debug)]
pub struct CsvDoc {
    comments: Vec<String>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl CsvDoc {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        CsvDoc {
            comments: Vec::new(),
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    /// Standard provenance preamble, mirroring the JSON envelope.
    pub fn with_provenance<S: Into<String>>(
        header: impl IntoIterator<Item = S>,
        report: &Report,
    ) -> Self {
        let mut doc = CsvDoc::new(header);
        doc.push_comment(format!("command: {}", report.command));
        doc.push_comment(format!("scenario: {}", report.scenario));
        doc.push_comment(format!("scenario_sha256: {}", report.scenario_sha256));
        for line in &report.applied_defaults {
            doc.push_comment(format!("applied_default: {line}"));
        }
        for line in &report.notes {
            doc.push_comment(format!("note: {line}"));
        }
        doc
    }

    pub fn push_comment(&mut self, comment: impl Into<String>) {
        self.comments.push(comment.into());
    }

    pub fn push_row<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(Into::into).collect());
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn to_bytes(&self) -> Result<Vec<u8>, CliError> {
        let mut bytes = Vec::new();
        for comment in &self.comments {
            bytes.extend_from_slice(b"# ");
            bytes.extend_from_slice(comment.as_bytes());
            bytes.push(b'\n');
        }
        let mut writer = csv::Writer::from_writer(bytes);
        writer
            .write_record(&self.header)
            .and_then(|()| self.rows.iter().try_for_each(|row| writer.write_record(row)))
            .map_err(|e| CliError::scenario(format!("cannot assemble csv: {e}")))?;
        writer
            .into_inner()
            .map_err(|e| CliError::scenario(format!("cannot assemble csv: {e}")))
    }
}

/// Write bytes to `path` through a temporary file in the same directory,
/// renamed into place only once fully written, so a failed run never leaves
/// a truncated artifact behind.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(parent) if !parent.as_os_str().is_empty() => parent,
        _ => Path::new("."),
    };
    let file_name = path
        .file_name()
        .ok_or_else(|| CliError::usage(format!("{} is not a file path", path.display())))?;
    let tmp = dir.join(format!(
        ".{}.{}.tmp",
        file_name.to_string_lossy(),
        std::process::id()
    ));
    fs::write(&tmp, bytes).map_err(|e| CliError::io("write", &tmp, e))?;
    if let Err(e) = fs::rename(&tmp, path) {
        let _ = fs::remove_file(&tmp);
        return Err(CliError::io("write", path, e));
    }
    Ok(())
}

/// Human-friendly time with an adaptive unit, for terminal tables.
pub fn format_time(seconds: f64) -> String {
    let abs = seconds.abs();
    if abs == 0.0 {
        "0 s".to_owned()
    } else if abs < 1e-6 {
        format!("{:.4} ns", seconds * 1e9)
    } else if abs < 1e-3 {
        format!("{:.4} us", seconds * 1e6)
    } else if abs < 1.0 {
        format!("{:.4} ms", seconds * 1e3)
    } else {
        format!("{seconds:.4} s")
    }
}

/// Terminal footer with the same provenance the artifacts carry.
pub fn human_footer(report: &Report) -> String {
    let mut text = String::new();
    text.push_str(&format!("scenario: {}\n", report.scenario));
    text.push_str(&format!("scenario sha256: {}\n", report.scenario_sha256));
    for line in &report.applied_defaults {
        text.push_str(&format!("applied default: {line}\n"));
    }
    for line in &report.notes {
        text.push_str(&format!("note: {line}\n"));
    }
    text
}
