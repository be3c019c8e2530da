//! Text formats used by the command-line tool: number formatting, sweep
//! grids, transition-matrix CSV, custom basis files and result tables.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::infotheory::TransitionMatrix;
use crate::qcore::{Ket, MeasurementBasis};

/// Significant digits for CSV output.
pub const CSV_DIGITS: usize = 12;

/// Formats `x` with 12 significant digits, trailing zeros removed and no
/// exponent for magnitudes in [1e-5, 1e12).
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", CSV_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (CSV_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Parses a real number, also accepting multiples and fractions of π:
/// `pi`, `-pi`, `2pi`, `pi/4`, `3pi/2`.
pub fn parse_real(token: &str) -> Result<f64> {
    let t = token.trim();
    if let Ok(x) = t.parse::<f64>() {
        return Ok(x);
    }
    let bad = || Error::Parse(format!("cannot read `{token}` as a number"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d.trim().parse::<f64>().map_err(|_| bad())?),
        None => (t, 1.0),
    };
    let coeff = num.trim().strip_suffix("pi").ok_or_else(bad)?.trim();
    let coeff = match coeff {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.strip_suffix('*').unwrap_or(c).parse::<f64>().map_err(|_| bad())?,
    };
    Ok(coeff * PI / den)
}

/// A one-dimensional sweep `name=start:stop:step`.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    pub name: String,
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Grid {
    pub fn new(name: impl Into<String>, start: f64, stop: f64, step: f64) -> Result<Self> {
        let name = name.into();
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err(Error::param(name, "grid bounds must be finite"));
        }
        if step <= 0.0 {
            return Err(Error::param(name, format!("step must be > 0, got {step}")));
        }
        if stop < start {
            return Err(Error::param(name, format!("stop {stop} is below start {start}")));
        }
        Ok(Self { name, start, stop, step })
    }

    /// Evenly spaced grid with `count` points including both ends.
    pub fn linspace(name: impl Into<String>, start: f64, stop: f64, count: usize) -> Result<Self> {
        let name = name.into();
        if count < 2 || stop <= start {
            return Err(Error::param(name, "linspace needs at least 2 points and stop > start"));
        }
        Self::new(name, start, stop, (stop - start) / (count - 1) as f64)
    }

    pub fn len(&self) -> usize {
        ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// start + k·step for k = 0, 1, …; the last value snaps to `stop` when
    /// it lands within rounding of it.
    pub fn values(&self) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|k| {
                let v = self.start + k as f64 * self.step;
                if k + 1 == n && (v - self.stop).abs() <= 1e-9 * self.step {
                    self.stop
                } else {
                    v
                }
            })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, range) = s
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("grid `{s}` must look like name=start:stop:step")))?;
        let parts: Vec<&str> = range.split(':').collect();
        let [start, stop, step] = parts[..] else {
            return Err(Error::Parse(format!("grid `{s}` must look like name=start:stop:step")));
        };
        Grid::new(name.trim(), parse_real(start)?, parse_real(stop)?, parse_real(step)?)
    }
}

/// Comma-separated rows (outputs) of a transition matrix; a first line that
/// is not numeric is treated as a header. Blank lines and `#` comments are
/// skipped.
pub fn parse_transition_csv(text: &str) -> Result<TransitionMatrix> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parsed: std::result::Result<Vec<f64>, _> = line.split(',').map(|c| c.trim().parse::<f64>()).collect();
        match parsed {
            Ok(r) => rows.push(r),
            Err(_) if rows.is_empty() && i == 0 => continue,
            Err(e) => return Err(Error::Parse(format!("line {}: {e}", i + 1))),
        }
    }
    if rows.is_empty() {
        return Err(Error::Parse("no numeric rows found".into()));
    }
    TransitionMatrix::from_rows(rows)
}

/// A JSON list of d×d matrices; each row is a basis ket given as a list of
/// `[re, im]` amplitudes. Bases are labelled `custom0`, `custom1`, ….
pub fn parse_custom_bases(document: &str) -> Result<Vec<MeasurementBasis>> {
    let raw: Vec<Vec<Vec<[f64; 2]>>> =
        serde_json::from_str(document).map_err(|e| Error::Parse(format!("custom basis file: {e}")))?;
    if raw.is_empty() {
        return Err(Error::Parse("custom basis file lists no bases".into()));
    }
    raw.into_iter()
        .enumerate()
        .map(|(b, rows)| {
            let d = rows.len();
            let kets = rows
                .into_iter()
                .map(|row| {
                    if row.len() != d {
                        return Err(Error::DimensionMismatch {
                            expected: d,
                            found: row.len(),
                        });
                    }
                    Ket::new(row.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
                })
                .collect::<Result<Vec<_>>>()?;
            MeasurementBasis::new(format!("custom{b}"), kets)
        })
        .collect()
}

/// One table cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Num(f64),
    Text(String),
    Flag(bool),
    Missing,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Num(x) => f.write_str(&fmt_num(*x)),
            Cell::Text(s) => f.write_str(s),
            Cell::Flag(b) => write!(f, "{b}"),
            Cell::Missing => Ok(()),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Missing, Cell::Num)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Flag(b)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

/// Column-labelled rows, written as CSV or JSON.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Numeric values of a column; non-numeric cells become NaN.
    pub fn numbers(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.column(name)?;
        Some(
            self.rows
                .iter()
                .map(|r| match r[i] {
                    Cell::Num(x) => x,
                    _ => f64::NAN,
                })
                .collect(),
        )
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// An array of objects keyed by column name, numbers at full precision.
    pub fn to_json(&self) -> String {
        let records: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Object(
                    self.columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| (c.clone(), serde_json::to_value(v).expect("cells serialize")))
                        .collect(),
                )
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&records).expect("values serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::param("format", format!("expected csv or json, got `{other}`"))),
        }
    }
}
