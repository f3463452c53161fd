//! One module per subcommand. Each returns a [`CommandOutput`]: the JSON
//! report, the CSV table, a terminal rendering, and any extra artifacts,
//! leaving all file I/O to the runner so a failed computation never writes
//! anything.

pub mod bound;
pub mod code;
pub mod connectivity;
pub mod figure;
pub mod grid;
pub mod transport;

use std::path::PathBuf;

use crate::report::{CsvDoc, Report};

/// Everything a subcommand produces, before any of it touches disk.
pub struct CommandOutput {
    pub report: Report,
    pub table: CsvDoc,
    /// Terminal rendering used when neither --json nor --csv is given.
    pub human: String,
    /// Grid commands print their CSV to stdout instead of the human text.
    pub csv_to_stdout: bool,
    /// Additional artifacts (path, bytes), e.g. the fig8 inset table.
    pub extra_files: Vec<(PathBuf, Vec<u8>)>,
}

impl CommandOutput {
    pub fn new(report: Report, table: CsvDoc, human: String) -> Self {
        CommandOutput {
            report,
            table,
            human,
            csv_to_stdout: false,
            extra_files: Vec::new(),
        }
    }

    pub fn grid(report: Report, table: CsvDoc) -> Self {
        CommandOutput {
            report,
            table,
            human: String::new(),
            csv_to_stdout: true,
            extra_files: Vec::new(),
        }
    }
}

/// Evenly spaced axis samples with exact endpoints; logarithmic spacing
/// multiplies by a constant ratio instead of adding a constant step.
pub fn axis(lo: f64, hi: f64, count: u32, logarithmic: bool) -> Vec<f64> {
    debug_assert!(count >= 2 && lo < hi);
    let count = count as usize;
    let last = (count - 1) as f64;
    (0..count)
        .map(|k| {
            if k == 0 {
                lo
            } else if k == count - 1 {
                hi
            } else if logarithmic {
                lo * (hi / lo).powf(k as f64 / last)
            } else {
                lo + (hi - lo) * (k as f64 / last)
            }
        })
        .collect()
}
