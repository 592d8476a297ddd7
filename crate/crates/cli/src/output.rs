use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    JsonLines,
}

/// Writes tables and key/value summaries in the selected format. Every cell
/// is a string, so integers of any size are emitted as decimal text.
pub struct Output<W: Write> {
    format: Format,
    out: W,
}

fn csv_cell(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

impl<W: Write> Output<W> {
    pub fn new(format: Format, out: W) -> Self {
        Output { format, out }
    }

    pub fn into_inner(self) -> W {
        self.out
    }

    fn json_line(&mut self, kind: &str, fields: impl Iterator<Item = (String, String)>) -> io::Result<()> {
        let mut map = Map::new();
        map.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
        map.insert("kind".into(), Value::from(kind));
        for (k, v) in fields {
            map.insert(k, Value::from(v));
        }
        writeln!(self.out, "{}", Value::Object(map))
    }

    pub fn table(&mut self, kind: &str, columns: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
        match self.format {
            Format::Table => {
                let mut widths: Vec<usize> = columns.iter().map(|c| c.chars().count()).collect();
                for row in rows {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.chars().count());
                    }
                }
                let line = |cells: &mut dyn Iterator<Item = &str>| {
                    let parts: Vec<String> = cells.zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
                    parts.join("  ").trim_end().to_string()
                };
                writeln!(self.out, "{}", line(&mut columns.iter().copied()))?;
                for row in rows {
                    writeln!(self.out, "{}", line(&mut row.iter().map(String::as_str)))?;
                }
            }
            Format::Csv => {
                writeln!(self.out, "{}", columns.join(","))?;
                for row in rows {
                    let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                    writeln!(self.out, "{}", cells.join(","))?;
                }
            }
            Format::JsonLines => {
                for row in rows {
                    let fields = columns.iter().map(|c| c.to_string()).zip(row.iter().cloned());
                    self.json_line(kind, fields)?;
                }
            }
        }
        Ok(())
    }

    pub fn summary(&mut self, kind: &str, fields: &[(&str, String)]) -> io::Result<()> {
        match self.format {
            Format::Table => {
                for (k, v) in fields {
                    writeln!(self.out, "{k}: {v}")?;
                }
                Ok(())
            }
            Format::Csv => {
                let keys: Vec<&str> = fields.iter().map(|f| f.0).collect();
                let values: Vec<String> = fields.iter().map(|f| csv_cell(&f.1)).collect();
                writeln!(self.out, "{}\n{}", keys.join(","), values.join(","))
            }
            Format::JsonLines => self.json_line(kind, fields.iter().map(|(k, v)| (k.to_string(), v.clone()))),
        }
    }
}
