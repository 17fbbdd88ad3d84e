//! Tabular reports with a fixed JSON layout, plus CSV and plain-text renderings.
//!
//! The JSON document always has the keys `algebra`, `cutoffs`, `tables` and
//! `diagnostics`, in that order. Every table carries its column names so the
//! rows can stay positional.

use std::fmt::Write as _;

use serde::Serialize;

use crate::arith::{fmt_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One table cell. Rationals are rendered as `p/q` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Bool(bool),
    Text(String),
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
}

impl From<i64> for Cell {
    fn from(n: i64) -> Self {
        Cell::Int(n)
    }
}

impl From<u64> for Cell {
    fn from(n: u64) -> Self {
        i64::try_from(n)
            .map(Cell::Int)
            .unwrap_or_else(|_| Cell::Text(n.to_string()))
    }
}

impl From<u32> for Cell {
    fn from(n: u32) -> Self {
        Cell::Int(n as i64)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::from(n as u64)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<&Rational> for Cell {
    fn from(q: &Rational) -> Self {
        Cell::Text(fmt_rational(q))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Table {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// Append a row; panics if its width differs from the column count.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width must match the columns of table {}",
            self.name
        );
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Cutoffs {
    pub loop_cutoff: Option<u32>,
    pub parabolic_level: Option<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub truncated_terms: u64,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub algebra: String,
    pub cutoffs: Cutoffs,
    pub tables: Vec<Table>,
    pub diagnostics: Diagnostics,
}

impl Report {
    pub fn new(algebra: &str, cutoffs: Cutoffs) -> Self {
        Report {
            algebra: algebra.to_string(),
            cutoffs,
            tables: Vec::new(),
            diagnostics: Diagnostics::default(),
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => Ok(self.to_text()),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    /// All tables in one CSV stream: the first column names the table, and
    /// each table starts with its own header row.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new()
            .flexible(true)
            .from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        for t in &self.tables {
            let header = std::iter::once("table".to_string()).chain(t.columns.iter().cloned());
            w.write_record(header).map_err(io)?;
            for row in &t.rows {
                w.write_record(std::iter::once(t.name.clone()).chain(row.iter().map(Cell::plain)))
                    .map_err(io)?;
            }
        }
        w.write_record([
            "diagnostics",
            "truncated_terms",
            &self.diagnostics.truncated_terms.to_string(),
        ])
        .map_err(io)?;
        for note in &self.diagnostics.notes {
            w.write_record(["diagnostics", "note", note]).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let opt = |v: Option<u32>| v.map_or("-".to_string(), |n| n.to_string());
        let _ = writeln!(out, "algebra: {}", self.algebra);
        let _ = writeln!(
            out,
            "cutoffs: L={} N={}",
            opt(self.cutoffs.loop_cutoff),
            opt(self.cutoffs.parabolic_level)
        );
        for t in &self.tables {
            let _ = writeln!(out, "\n[{}]", t.name);
            let cells: Vec<Vec<String>> = t
                .rows
                .iter()
                .map(|r| r.iter().map(Cell::plain).collect())
                .collect();
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|i| {
                    cells
                        .iter()
                        .map(|r| r[i].len())
                        .chain([t.columns[i].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |row: &[String]| {
                row.iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            let _ = writeln!(out, "{}", line(&t.columns));
            for r in &cells {
                let _ = writeln!(out, "{}", line(r));
            }
        }
        let _ = writeln!(
            out,
            "\ntruncated_terms: {}",
            self.diagnostics.truncated_terms
        );
        for note in &self.diagnostics.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new(
            "A1",
            Cutoffs {
                loop_cutoff: Some(2),
                parabolic_level: None,
            },
        );
        let mut t = Table::new("graded_dims", &["level", "dim"]);
        t.push(vec![0i64.into(), 1i64.into()]);
        t.push(vec![1i64.into(), 3i64.into()]);
        r.tables.push(t);
        r
    }

    #[test]
    fn json_key_order_is_fixed() {
        let json = sample().to_json().unwrap();
        let keys = [
            "\"algebra\"",
            "\"cutoffs\"",
            "\"tables\"",
            "\"diagnostics\"",
            "\"truncated_terms\"",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        let columns = json.find("\"columns\"").unwrap();
        assert!(
            json.find("\"name\"").unwrap() < columns && columns < json.find("\"rows\"").unwrap()
        );
    }

    #[test]
    fn csv_and_text() {
        let csv = sample().to_csv().unwrap();
        assert!(csv.starts_with("table,level,dim\ngraded_dims,0,1\n"));
        let text = sample().to_text();
        assert!(text.contains("cutoffs: L=2 N=-"));
        assert!(text.contains("level  dim\n0      1"));
    }
}
