//! Rendering of command results as aligned text, CSV or JSON.

use std::io::Write;
use std::time::Duration;

use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// One result record: ordered (column, value) pairs.
pub type Row = Vec<(&'static str, Value)>;

pub struct Report {
    pub config: Map<String, Value>,
    pub rows: Vec<Row>,
    /// Extra lines shown only in table output.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        let mut config = Map::new();
        config.insert("command".into(), json!(command));
        Report {
            config,
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.config.insert(key.into(), value.into());
    }

    pub fn push(&mut self, row: Row) {
        self.rows.push(row);
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn write(
        &self,
        format: Format,
        elapsed: Duration,
        out: &mut impl Write,
    ) -> std::io::Result<()> {
        match format {
            Format::Table => self.write_table(out),
            Format::Csv => self.write_csv(out),
            Format::Json => {
                let results: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| {
                        Value::Object(r.iter().map(|(k, v)| (k.to_string(), v.clone())).collect())
                    })
                    .collect();
                let doc = json!({
                    "config": Value::Object(self.config.clone()),
                    "results": results,
                    "timing": { "seconds": elapsed.as_secs_f64() },
                });
                serde_json::to_writer_pretty(&mut *out, &doc)?;
                writeln!(out)
            }
        }
    }

    fn columns(&self) -> Vec<&'static str> {
        let mut cols: Vec<&'static str> = Vec::new();
        for row in &self.rows {
            for (k, _) in row {
                if !cols.contains(k) {
                    cols.push(k);
                }
            }
        }
        cols
    }

    fn cells(&self, cols: &[&'static str]) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|row| {
                cols.iter()
                    .map(|c| {
                        row.iter()
                            .find(|(k, _)| k == c)
                            .map(|(_, v)| plain(v))
                            .unwrap_or_default()
                    })
                    .collect()
            })
            .collect()
    }

    fn write_table(&self, out: &mut impl Write) -> std::io::Result<()> {
        let cols = self.columns();
        let cells = self.cells(&cols);
        let widths: Vec<usize> = cols
            .iter()
            .enumerate()
            .map(|(i, c)| {
                cells
                    .iter()
                    .map(|r| r[i].chars().count())
                    .max()
                    .unwrap_or(0)
                    .max(c.len())
            })
            .collect();
        if !cols.is_empty() {
            let line = |vals: Vec<&str>| -> String {
                let parts: Vec<String> = vals
                    .iter()
                    .zip(&widths)
                    .map(|(v, w)| format!("{v:<w$}"))
                    .collect();
                parts.join("  ").trim_end().to_string()
            };
            writeln!(out, "{}", line(cols.clone()))?;
            for r in &cells {
                writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
            }
        }
        for n in &self.notes {
            writeln!(out, "{n}")?;
        }
        Ok(())
    }

    fn write_csv(&self, out: &mut impl Write) -> std::io::Result<()> {
        let cols = self.columns();
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&cols)?;
        for r in self.cells(&cols) {
            w.write_record(&r)?;
        }
        w.flush()
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(" "),
        Value::Object(map) if map.contains_key("fractions") => plain(&map["fractions"]),
        other => other.to_string(),
    }
}
