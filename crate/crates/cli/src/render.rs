//! Row serialization for the three output formats.
//!
//! CSV and JSON lines carry 17 significant digits, which round-trip any f64.
//! Markdown carries 3, the way the comparison table is usually read.

use std::io::{self, Write};

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Markdown,
    Jsonlines,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Num(f64),
    /// Printed as an empty cell (CSV, markdown) or `null` (JSON).
    Missing,
    Int(u64),
    Bool(bool),
    Text(String),
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Num(v)
    }
}

impl From<Option<f64>> for Field {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Field::Missing, Field::Num)
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Int(v as u64)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.to_owned())
    }
}

/// Scientific notation with 17 significant digits.
pub fn exact(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "NaN".to_owned()
    } else if v > 0.0 {
        "inf".to_owned()
    } else {
        "-inf".to_owned()
    }
}

pub fn short(v: f64) -> String {
    if v == 0.0 {
        "0".to_owned()
    } else if v.is_finite() {
        format!("{v:.2e}")
    } else {
        exact(v)
    }
}

fn plain(f: &Field, num: fn(f64) -> String) -> String {
    match f {
        Field::Num(v) => num(*v),
        Field::Missing => String::new(),
        Field::Int(v) => v.to_string(),
        Field::Bool(v) => v.to_string(),
        Field::Text(s) => s.clone(),
    }
}

fn json(f: &Field) -> String {
    match f {
        Field::Num(v) if v.is_finite() => exact(*v),
        Field::Num(_) | Field::Missing => "null".to_owned(),
        Field::Int(v) => v.to_string(),
        Field::Bool(v) => v.to_string(),
        Field::Text(s) => {
            let mut out = String::with_capacity(s.len() + 2);
            out.push('"');
            for c in s.chars() {
                match c {
                    '"' => out.push_str("\\\""),
                    '\\' => out.push_str("\\\\"),
                    c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
                    c => out.push(c),
                }
            }
            out.push('"');
            out
        }
    }
}

/// Writes `rows` under `header` in the requested format.
pub fn write_rows(
    out: &mut dyn Write,
    format: Format,
    header: &[&str],
    rows: &[Vec<Field>],
) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            w.write_record(header)?;
            for row in rows {
                w.write_record(row.iter().map(|f| plain(f, exact)))?;
            }
            w.flush()
        }
        Format::Jsonlines => {
            for row in rows {
                let body: Vec<String> = header
                    .iter()
                    .zip(row)
                    .map(|(k, v)| format!("\"{k}\":{}", json(v)))
                    .collect();
                writeln!(out, "{{{}}}", body.join(","))?;
            }
            Ok(())
        }
        Format::Markdown => {
            writeln!(out, "| {} |", header.join(" | "))?;
            writeln!(out, "|{}", "---|".repeat(header.len()))?;
            for row in rows {
                let cells: Vec<String> = row.iter().map(|f| plain(f, short)).collect();
                writeln!(out, "| {} |", cells.join(" | "))?;
            }
            Ok(())
        }
    }
}
