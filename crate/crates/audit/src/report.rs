//! Rendering claim reports as text lines or a JSON array.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::claims::{ClaimReport, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown report format {0:?} (expected text or json)")]
pub struct UnknownFormat(pub String);

impl FromStr for Format {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(UnknownFormat(s.to_string())),
        }
    }
}

/// One line per report: `CLAIM ring status [witness]`, with the reason in
/// parentheses for skipped reports. JSON output is a pretty-printed array.
pub fn render_report(reports: &[ClaimReport], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                write!(out, "{} {} {}", r.claim, r.ring, r.status).unwrap();
                if let Some(w) = &r.witness {
                    write!(out, " {w}").unwrap();
                }
                if r.status == Status::Skipped {
                    if let Some(n) = &r.note {
                        write!(out, " ({n})").unwrap();
                    }
                }
                out.push('\n');
            }
            out
        }
    }
}

pub fn parse_json_report(text: &str) -> Result<Vec<ClaimReport>, serde_json::Error> {
    serde_json::from_str(text)
}
