//! Tabular output. CSV and JSON are rendered from the same cells, so the two
//! formats carry identical values.

use serde_json::{Map, Number, Value};

use crate::chebotarev::BoundReport;
use crate::density::{PairCounts, TripleCounts, BORROMEAN_DENSITY, PAIR_DENSITY, RHO_DENSITY};

pub const PAIRS_HEADER: [&str; 6] = [
    "x",
    "pi_x",
    "pi_1mod4",
    "ordered_linked",
    "ratio",
    "abs_dev_from_0.125",
];
pub const TRIPLES_HEADER: [&str; 7] = [
    "x",
    "unordered_distinct",
    "linked",
    "borromean",
    "ratio_all",
    "ratio_linked",
    "abs_dev_from_0.0078125",
];
pub const BOUND_HEADER: [&str; 6] = [
    "x",
    "label",
    "main_term",
    "error_bound",
    "empirical",
    "within_bound",
];
pub const RHO_HEADER: [&str; 5] = ["x", "pi_x", "rho", "ratio", "abs_dev_from_0.0625"];

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Real(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => format_sig(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Real(v) => format_sig(*v)
                .parse::<f64>()
                .ok()
                .and_then(Number::from_f64)
                .map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
        }
    }
}

/// Fixed-point rendering with 10 significant digits.
pub fn format_sig(v: f64) -> String {
    const DIGITS: i32 = 10;
    if v == 0.0 || !v.is_finite() {
        return if v == 0.0 { "0".into() } else { v.to_string() };
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (DIGITS - 1 - mag).max(0) as usize;
    let s = format!("{v:.decimals$}");
    // rounding can carry into a new leading digit (9.99… → 10.0…)
    let carried = s
        .parse::<f64>()
        .map(|r| r.abs() >= 10f64.powi(mag + 1))
        .unwrap_or(false);
    if carried && decimals > 0 {
        format!("{v:.prec$}", prec = decimals - 1)
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Table {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .header
                    .iter()
                    .zip(row)
                    .map(|(k, c)| (k.to_string(), c.to_json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&Value::Array(rows)).expect("tables serialize");
        s.push('\n');
        s
    }
}

pub fn pairs_table(rows: &[PairCounts]) -> Table {
    let mut t = Table::new(&PAIRS_HEADER);
    for r in rows {
        t.push(vec![
            Cell::Int(r.x),
            Cell::Int(r.pi_x),
            Cell::Int(r.pi_x_1mod4),
            Cell::Int(r.ordered_linked),
            Cell::Real(r.ratio),
            Cell::Real((r.ratio - PAIR_DENSITY).abs()),
        ]);
    }
    t
}

pub fn triples_table(rows: &[TripleCounts]) -> Table {
    let mut t = Table::new(&TRIPLES_HEADER);
    for r in rows {
        t.push(vec![
            Cell::Int(r.x),
            Cell::Int(r.unordered_distinct),
            Cell::Int(r.linked_unordered),
            Cell::Int(r.borromean_unordered),
            Cell::Real(r.ratio_all),
            Cell::Real(r.ratio_linked),
            Cell::Real((r.ratio_all - BORROMEAN_DENSITY).abs()),
        ]);
    }
    t
}

pub fn bound_table(rows: &[BoundReport]) -> Table {
    let mut t = Table::new(&BOUND_HEADER);
    for r in rows {
        t.push(vec![
            Cell::Int(r.x),
            Cell::Text(r.label.to_string()),
            Cell::Real(r.main_term),
            Cell::Real(r.error_bound),
            Cell::Int(r.empirical),
            Cell::Bool(r.within_bound),
        ]);
    }
    t
}

/// Rows of `(x, π(x), ρ(x))`.
pub fn rho_table(rows: &[(u64, u64, u64)]) -> Table {
    let mut t = Table::new(&RHO_HEADER);
    for &(x, pi_x, rho) in rows {
        let ratio = if pi_x == 0 {
            0.0
        } else {
            rho as f64 / pi_x as f64
        };
        t.push(vec![
            Cell::Int(x),
            Cell::Int(pi_x),
            Cell::Int(rho),
            Cell::Real(ratio),
            Cell::Real((ratio - RHO_DENSITY).abs()),
        ]);
    }
    t
}
