//! Append-only JSON-lines record of every successful run.

use std::fs::OpenOptions;
use std::io::{self, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::commands::Output;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub timestamp: String,
    pub command: String,
    pub parameters: Map<String, Value>,
    pub results: Map<String, Value>,
    pub versions: Map<String, Value>,
}

impl RunRecord {
    pub fn new(command: &str, output: &Output) -> Self {
        let mut versions = Map::new();
        versions.insert("pksums".into(), Value::from(env!("CARGO_PKG_VERSION")));
        versions.insert("zeros".into(), output.data_source.clone().map_or(Value::Null, Value::from));
        RunRecord {
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true),
            command: command.to_owned(),
            parameters: output.parameters.clone(),
            results: output.results(),
            versions,
        }
    }
}

/// Appends `record` as one line with a single write on an `O_APPEND` handle.
pub fn append(path: &Path, record: &RunRecord) -> io::Result<()> {
    let mut line = serde_json::to_vec(record)?;
    line.push(b'\n');
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    file.write_all(&line)?;
    file.flush()
}
