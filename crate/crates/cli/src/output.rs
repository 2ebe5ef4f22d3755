//! Table, CSV and JSON-lines rendering of command rows.

use std::io::{self, Write};

use serde_json::{Map, Value};

use crate::cli::Format;
use crate::commands::Output;

/// Shortest round-trip decimal, switching to exponent notation for
/// `|v| ≥ 1e6` and for small nonzero magnitudes.
pub fn format_f64(v: f64) -> String {
    let a = v.abs();
    if a == 0.0 {
        return "0".into();
    }
    if a.is_finite() && !(1e-4..1e6).contains(&a) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

pub fn format_value(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) if n.is_f64() => format_f64(n.as_f64().unwrap_or(f64::NAN)),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(format_value).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(_) => v.to_string(),
    }
}

fn columns(rows: &[Map<String, Value>]) -> Vec<String> {
    rows.first().map(|r| r.keys().cloned().collect()).unwrap_or_default()
}

pub fn write_csv<W: Write>(rows: &[Map<String, Value>], w: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(w);
    let cols = columns(rows);
    if cols.is_empty() {
        return writer.flush().map_err(Into::into);
    }
    writer.write_record(&cols)?;
    for row in rows {
        writer.write_record(cols.iter().map(|c| row.get(c).map(format_value).unwrap_or_default()))?;
    }
    writer.flush()?;
    Ok(())
}

pub fn to_csv(rows: &[Map<String, Value>]) -> String {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("csv output is utf-8")
}

pub fn write_json_lines<W: Write>(rows: &[Map<String, Value>], mut w: W) -> io::Result<()> {
    for row in rows {
        serde_json::to_writer(&mut w, row)?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_table<W: Write>(rows: &[Map<String, Value>], mut w: W) -> io::Result<()> {
    let cols = columns(rows);
    if cols.is_empty() {
        return Ok(());
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| cols.iter().map(|c| r.get(c).map(format_value).unwrap_or_default()).collect())
        .collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
        .collect();
    let line = |w: &mut W, items: &[String]| -> io::Result<()> {
        let padded: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, &n)| format!("{s:>n$}"))
            .collect();
        writeln!(w, "{}", padded.join("  ").trim_end())
    };
    line(&mut w, &cols)?;
    let rule: Vec<String> = widths.iter().map(|&n| "-".repeat(n)).collect();
    line(&mut w, &rule)?;
    for row in &cells {
        line(&mut w, row)?;
    }
    Ok(())
}

/// Rows go to `out`. Notes follow the table in table mode and go to `err`
/// otherwise, so CSV and JSON-lines stay machine-readable.
pub fn render<W: Write, E: Write>(output: &Output, format: Format, mut out: W, mut err: E) -> io::Result<()> {
    match format {
        Format::Table => {
            write_table(&output.rows, &mut out)?;
            if !output.notes.is_empty() && !output.rows.is_empty() {
                writeln!(out)?;
            }
            for (k, v) in &output.notes {
                writeln!(out, "{k}: {}", note_text(v))?;
            }
        }
        Format::Csv => {
            write_csv(&output.rows, &mut out).map_err(io::Error::other)?;
            for (k, v) in &output.notes {
                writeln!(err, "# {k}: {}", note_text(v))?;
            }
        }
        Format::JsonLines => {
            write_json_lines(&output.rows, &mut out)?;
            for (k, v) in &output.notes {
                writeln!(err, "# {k}: {}", note_text(v))?;
            }
        }
    }
    out.flush()
}

fn note_text(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        _ => format_value(v),
    }
}
