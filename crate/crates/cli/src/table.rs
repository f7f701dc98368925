use std::fmt::Write as _;
use std::io::{Read, Write};

use anyhow::{bail, Context, Result};

/// One value in an output table.
///
/// Reals are rounded to six significant digits when the cell is built, so
/// the in-memory table is exactly what its CSV text parses back to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(u64),
    Real(f64),
    Flag(bool),
    Empty,
}

impl Cell {
    pub fn real(x: f64) -> Self {
        Self::Real(round6(x))
    }

    pub fn opt(x: Option<f64>) -> Self {
        x.map_or(Self::Empty, Self::real)
    }

    fn render(&self) -> String {
        match *self {
            Self::Int(n) => n.to_string(),
            Self::Real(x) => format!("{x:.5e}"),
            Self::Flag(b) => b.to_string(),
            Self::Empty => String::new(),
        }
    }

    fn parse(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Ok(Self::Empty);
        }
        if let Ok(b) = text.parse::<bool>() {
            return Ok(Self::Flag(b));
        }
        if !text.contains(['e', 'E', '.', 'n', 'N', 'i']) {
            if let Ok(n) = text.parse::<u64>() {
                return Ok(Self::Int(n));
            }
        }
        Ok(Self::Real(text.parse().with_context(|| format!("bad cell {text:?}"))?))
    }
}

fn round6(x: f64) -> f64 {
    if x.is_finite() {
        format!("{x:.5e}").parse().expect("formatted float parses")
    } else {
        x
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    /// File stem when written to an output directory.
    pub name: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &str, headers: &[&str]) -> Self {
        Self {
            name: name.to_owned(),
            headers: headers.iter().map(|h| (*h).to_owned()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_csv<R: Read>(name: &str, input: R) -> Result<Self> {
        let mut r = csv::Reader::from_reader(input);
        let headers = r.headers()?.iter().map(str::to_owned).collect();
        let mut table = Self {
            name: name.to_owned(),
            headers,
            rows: Vec::new(),
        };
        for record in r.records() {
            let record = record?;
            if record.len() != table.headers.len() {
                bail!("row has {} cells, header has {}", record.len(), table.headers.len());
            }
            table.rows.push(record.iter().map(Cell::parse).collect::<Result<_>>()?);
        }
        Ok(table)
    }

    /// Right-aligned columns for reading in a terminal.
    pub fn render_aligned(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::render).collect())
            .collect();
        let widths: Vec<usize> = self
            .headers
            .iter()
            .enumerate()
            .map(|(i, h)| cells.iter().map(|r| r[i].len()).chain([h.len()]).max().unwrap_or(0))
            .collect();
        let mut s = String::new();
        let line = |s: &mut String, items: &mut dyn Iterator<Item = &str>| {
            let parts: Vec<String> = items
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            let _ = writeln!(s, "{}", parts.join("  ").trim_end());
        };
        line(&mut s, &mut self.headers.iter().map(String::as_str));
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        line(&mut s, &mut rule.iter().map(String::as_str));
        for r in &cells {
            line(&mut s, &mut r.iter().map(String::as_str));
        }
        s
    }
}
