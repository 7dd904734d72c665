//! Rectangular output tables and their three renderings.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use capgame::rational::{format_decimal, format_rational};
use capgame::{PayoffVectorSet, Rational};
use serde_json::{json, Value};

/// Digits after the point when `--decimal` is set.
pub const DECIMAL_DIGITS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?}; expected table, csv or json")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Table => "table",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Bool(bool),
    Rational(Rational),
    Tuple(Vec<Rational>),
    /// Set of payoff vectors, one tuple per member.
    PayoffSet(PayoffVectorSet),
    /// Set of scalars such as welfare values.
    Values(BTreeSet<Rational>),
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as i64)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<Rational> for Cell {
    fn from(r: Rational) -> Self {
        Cell::Rational(r)
    }
}

impl From<PayoffVectorSet> for Cell {
    fn from(s: PayoffVectorSet) -> Self {
        Cell::PayoffSet(s)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RenderOptions {
    pub format: Format,
    pub decimal: bool,
}

impl RenderOptions {
    fn number(&self, r: &Rational) -> String {
        if self.decimal {
            format_decimal(r, DECIMAL_DIGITS)
        } else {
            format_rational(r)
        }
    }

    fn tuple(&self, v: &[Rational], sep: &str) -> String {
        let parts: Vec<String> = v.iter().map(|r| self.number(r)).collect();
        format!("({})", parts.join(sep))
    }

    /// Flat text for table and CSV output.
    fn text(&self, cell: &Cell) -> String {
        let csv = self.format == Format::Csv;
        let sep = if csv { " " } else { ", " };
        match cell {
            Cell::Text(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Rational(r) => self.number(r),
            Cell::Tuple(v) => self.tuple(v, sep),
            Cell::PayoffSet(set) => {
                let items: Vec<String> = set.iter().map(|v| self.tuple(v, sep)).collect();
                if csv {
                    items.join(";")
                } else {
                    format!("{{{}}}", items.join(", "))
                }
            }
            Cell::Values(vals) => {
                let items: Vec<String> = vals.iter().map(|r| self.number(r)).collect();
                if csv {
                    items.join(";")
                } else {
                    format!("{{{}}}", items.join(", "))
                }
            }
        }
    }

    fn json(&self, cell: &Cell) -> Value {
        match cell {
            Cell::Text(s) => json!(s),
            Cell::Int(n) => json!(n),
            Cell::Bool(b) => json!(b),
            Cell::Rational(r) => json!(self.number(r)),
            Cell::Tuple(v) => json!(v.iter().map(|r| self.number(r)).collect::<Vec<_>>()),
            Cell::PayoffSet(set) => json!(set
                .iter()
                .map(|v| v.iter().map(|r| self.number(r)).collect::<Vec<_>>())
                .collect::<Vec<_>>()),
            Cell::Values(vals) => json!(vals.iter().map(|r| self.number(r)).collect::<Vec<_>>()),
        }
    }
}

/// Header plus rows; every row has exactly one cell per header column.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputTable {
    header: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl OutputTable {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    /// Panics on a row of the wrong width; rows are built by this crate only.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.header.len(), "row width must match header");
        self.rows.push(row);
    }

    pub fn header(&self) -> &[String] {
        &self.header
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    pub fn render(&self, opts: RenderOptions) -> String {
        match opts.format {
            Format::Table => self.render_table(opts),
            Format::Csv => self.render_csv(opts),
            Format::Json => self.render_json(opts),
        }
    }

    fn render_table(&self, opts: RenderOptions) -> String {
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| opts.text(c)).collect())
            .collect();
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &body {
            for (w, s) in widths.iter_mut().zip(row) {
                *w = (*w).max(s.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_owned()
        };
        let mut out = line(&self.header);
        out.push('\n');
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        out.push_str(&rule.join("  "));
        out.push('\n');
        for row in &body {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }

    fn render_csv(&self, opts: RenderOptions) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(|c| opts.text(c))).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
    }

    fn render_json(&self, opts: RenderOptions) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let obj: serde_json::Map<String, Value> = self
                    .header
                    .iter()
                    .cloned()
                    .zip(r.iter().map(|c| opts.json(c)))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&rows).expect("plain data serializes");
        s.push('\n');
        s
    }
}
