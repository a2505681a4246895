//! Output records and their CSV / JSON-lines encodings.
//!
//! CSV floats use 17 significant digits in scientific notation; JSON floats
//! use the shortest representation that round-trips exactly. Both are
//! bit-stable for identical inputs.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

/// `x` with 17 significant digits.
pub fn sci(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt(x: Option<f64>) -> String {
    x.map(sci).unwrap_or_default()
}

fn joined(values: impl Iterator<Item = String>) -> String {
    values.collect::<Vec<_>>().join(";")
}

/// Rows that can be written as CSV.
pub trait CsvRow {
    const HEADER: &'static str;
    fn csv(&self) -> String;
}

/// One evaluated kernel value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub model: String,
    pub params: BTreeMap<String, f64>,
    pub zeta_re: f64,
    pub zeta_im: f64,
    /// Coordinates of `x` followed by those of `y`.
    pub coords: Vec<f64>,
    pub value_re: f64,
    pub value_im: f64,
    pub abs_error: f64,
    pub method: String,
}

impl CsvRow for OutputRecord {
    const HEADER: &'static str = "model,params,zeta_re,zeta_im,coords,value_re,value_im,abs_error,method";

    fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.model,
            joined(self.params.iter().map(|(k, v)| format!("{k}={}", sci(*v)))),
            sci(self.zeta_re),
            sci(self.zeta_im),
            joined(self.coords.iter().map(|c| sci(*c))),
            sci(self.value_re),
            sci(self.value_im),
            sci(self.abs_error),
            self.method
        )
    }
}

/// A near-diagonal sample, or the extrapolated limit in the final row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RenormRow {
    /// `sample` or `extrapolated`.
    pub kind: String,
    pub r: Option<f64>,
    pub g_re: Option<f64>,
    pub g_im: Option<f64>,
    pub s_re: Option<f64>,
    pub s_im: Option<f64>,
    /// `G − S`, or the limit in the extrapolated row.
    pub value_re: f64,
    pub value_im: f64,
    pub abs_error: f64,
}

impl CsvRow for RenormRow {
    const HEADER: &'static str = "kind,r,g_re,g_im,s_re,s_im,value_re,value_im,abs_error";

    fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.kind,
            opt(self.r),
            opt(self.g_re),
            opt(self.g_im),
            opt(self.s_re),
            opt(self.s_im),
            sci(self.value_re),
            sci(self.value_im),
            sci(self.abs_error)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundStateRow {
    pub energy: f64,
    pub multiplicity: usize,
}

impl CsvRow for BoundStateRow {
    const HEADER: &'static str = "energy,multiplicity";

    fn csv(&self) -> String {
        format!("{},{}", sci(self.energy), self.multiplicity)
    }
}

/// Header plus one line per row, or one JSON object per line.
pub fn render<T: CsvRow + Serialize>(rows: &[T], json: bool) -> String {
    let mut out = String::new();
    if json {
        for row in rows {
            out.push_str(&serde_json::to_string(row).expect("records serialize"));
            out.push('\n');
        }
    } else {
        writeln!(out, "{}", T::HEADER).unwrap();
        for row in rows {
            writeln!(out, "{}", row.csv()).unwrap();
        }
    }
    out
}
