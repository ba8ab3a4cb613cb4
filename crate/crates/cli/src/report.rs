//! Report envelope and atomic output.

use std::io::{self, Write};
use std::path::Path;

use serde_json::{json, Value};

use crate::document::PointSetDocument;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    PreconditionViolated,
    InternalError,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::PreconditionViolated => "precondition_violated",
            Status::InternalError => "internal_error",
        }
    }
}

/// Object keys serialize in sorted order, so equal inputs give equal bytes.
pub fn envelope(command: &str, input: Option<&PointSetDocument>, status: Status, result: Value) -> Value {
    let input = input.map(|doc| json!({ "d": doc.d, "name": doc.name, "point_count": doc.points.len() }));
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "status": status.as_str(),
        "input": input,
        "result": result,
    })
}

pub fn render(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Writes to a temporary file in the target directory, then renames it over
/// `path`, so readers never see a partial report.
pub fn write_atomic(path: &Path, contents: &str) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
