//! key=value config file support.
//!
//! Keys map onto `PKSUMS_*` variables, which clap already reads as fallbacks
//! for flags. Variables that are already set are left alone, which gives
//! flags > environment > file.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

pub fn config_path(args: &[OsString]) -> Option<PathBuf> {
    let mut iter = args.iter().skip(1);
    while let Some(arg) = iter.next() {
        let s = arg.to_string_lossy();
        if s == "--" {
            break;
        }
        if s == "--config" {
            return iter.next().map(PathBuf::from);
        }
        if let Some(rest) = s.strip_prefix("--config=") {
            return Some(PathBuf::from(rest));
        }
    }
    std::env::var_os("PKSUMS_CONFIG").map(PathBuf::from)
}

pub fn env_key(key: &str) -> String {
    format!("PKSUMS_{}", key.trim().replace('-', "_").to_ascii_uppercase())
}

/// Parsed `(key, value)` pairs. Blank lines and `#` comments are skipped.
pub fn parse(text: &str) -> Result<Vec<(String, String)>, String> {
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(format!("config line {}: expected key=value, got {line:?}", i + 1));
        };
        let k = k.trim();
        if k.is_empty() {
            return Err(format!("config line {}: empty key", i + 1));
        }
        pairs.push((k.to_owned(), v.trim().to_owned()));
    }
    Ok(pairs)
}

/// Exports config-file values to the environment where nothing is set yet.
pub fn apply(args: &[OsString]) -> Result<(), String> {
    let Some(path) = config_path(args) else {
        return Ok(());
    };
    let text = fs::read_to_string(&path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    for (k, v) in parse(&text)? {
        let name = env_key(&k);
        if std::env::var_os(&name).is_none() {
            log::debug!("config {}: {name}={v}", path.display());
            std::env::set_var(name, v);
        }
    }
    Ok(())
}
