use std::io::Write;

use clap::ValueEnum;
use macsym_core::{RatQT, SymFunc};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

/// A field value; exact data keeps its structure until rendering.
pub enum Cell {
    Text(String),
    Int(i64),
    Bool(bool),
    Rat(RatQT),
    Sym(SymFunc),
    Json(Value),
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => json!(s),
            Cell::Int(i) => json!(i),
            Cell::Bool(b) => json!(b),
            Cell::Rat(r) => json!({ "exact": r.to_json_value(), "text": r.to_string() }),
            Cell::Sym(f) => json!({ "exact": f.to_json_value(), "text": f.to_string() }),
            Cell::Json(v) => v.clone(),
        }
    }

    fn to_plain(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Rat(r) => r.to_string(),
            Cell::Sym(f) => f.to_string(),
            Cell::Json(v) => v.to_string(),
        }
    }

    fn to_latex(&self) -> String {
        match self {
            Cell::Rat(r) => format!("${}$", r.to_latex()),
            Cell::Sym(f) => format!("${}$", f.to_latex()),
            other => other.to_plain().replace('_', "\\_"),
        }
    }
}

#[derive(Default)]
pub struct Record(pub Vec<(&'static str, Cell)>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &'static str, cell: Cell) -> Self {
        self.0.push((key, cell));
        self
    }
}

/// Writes records in the chosen format. Column order follows the first record.
pub fn emit(out: &mut impl Write, format: Format, records: &[Record]) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                let mut obj = serde_json::Map::new();
                for (k, c) in &r.0 {
                    obj.insert((*k).to_string(), c.to_json());
                }
                writeln!(out, "{}", Value::Object(obj))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if let Some(first) = records.first() {
                w.write_record(first.0.iter().map(|(k, _)| *k))?;
            }
            for r in records {
                w.write_record(r.0.iter().map(|(_, c)| c.to_plain()))?;
            }
            let bytes = w.into_inner().map_err(|e| e.into_error())?;
            out.write_all(&bytes)?;
        }
        Format::Latex => {
            let Some(first) = records.first() else {
                return Ok(());
            };
            let cols = "l".repeat(first.0.len());
            writeln!(out, "\\begin{{tabular}}{{{cols}}}")?;
            let header: Vec<String> = first.0.iter().map(|(k, _)| k.replace('_', "\\_")).collect();
            writeln!(out, "{} \\\\ \\hline", header.join(" & "))?;
            for r in records {
                let row: Vec<String> = r.0.iter().map(|(_, c)| c.to_latex()).collect();
                writeln!(out, "{} \\\\", row.join(" & "))?;
            }
            writeln!(out, "\\end{{tabular}}")?;
        }
    }
    Ok(())
}
