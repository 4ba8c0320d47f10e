//! CSV and JSON rendering with a metadata header.

use serde_json::{Map, Value};

use crate::config::ExperimentConfig;

pub const TOOL: &str = "cheshire";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// `x` with 12 significant digits, `%g` style.
pub fn sig12(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp) as usize;
        trim_zeros(format!("{x:.decimals$}"))
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

/// The float that [`sig12`] prints.
pub fn round12(x: f64) -> f64 {
    if x.is_finite() {
        sig12(x).parse().expect("sig12 output parses")
    } else {
        x
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    Missing,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Float(x) => sig12(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(t) => t.clone(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Float(x) => {
                serde_json::Number::from_f64(round12(*x)).map_or(Value::Null, Value::Number)
            }
            Cell::Int(i) => Value::from(*i),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(t) => Value::String(t.clone()),
            Cell::Missing => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Missing, Cell::Float)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

macro_rules! int_cell {
    ($($t:ty),*) => {$(
        impl From<$t> for Cell {
            fn from(i: $t) -> Self {
                Cell::Int(i as i64)
            }
        }
    )*};
}
int_cell!(u32, u64, usize);

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Result of one experiment run.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub summary: Vec<(&'static str, Cell)>,
    pub table: Table,
    /// Whether JSON output carries the table; CSV output always does.
    pub table_in_json: bool,
}

pub fn render(config: &ExperimentConfig, report: &Report) -> String {
    match config.format {
        crate::config::Format::Csv => render_csv(config, report),
        crate::config::Format::Json => render_json(config, report),
    }
}

pub fn render_csv(config: &ExperimentConfig, report: &Report) -> String {
    let mut out = format!("# {TOOL} {VERSION}\n");
    for (k, v) in config.entries() {
        out.push_str(&format!("# {k} = {v}\n"));
    }
    for (k, v) in &report.summary {
        out.push_str(&format!("# result {k} = {}\n", v.csv()));
    }
    out.push_str(&report.table.columns.join(","));
    out.push('\n');
    for row in &report.table.rows {
        let cells: Vec<String> = row.iter().map(Cell::csv).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn render_json(config: &ExperimentConfig, report: &Report) -> String {
    let mut doc = Map::new();
    doc.insert("tool".into(), TOOL.into());
    doc.insert("version".into(), VERSION.into());
    doc.insert("kind".into(), config.kind().name().into());
    doc.insert("seed".into(), config.seed.into());
    doc.insert("config".into(), config_block(config));
    let summary: Map<String, Value> = report
        .summary
        .iter()
        .map(|(k, v)| (k.to_string(), v.json()))
        .collect();
    doc.insert("summary".into(), Value::Object(summary));
    if report.table_in_json {
        doc.insert("columns".into(), report.table.columns.clone().into());
        let rows: Vec<Value> = report
            .table
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(Cell::json).collect()))
            .collect();
        doc.insert("rows".into(), Value::Array(rows));
    }
    let mut out = serde_json::to_string_pretty(&Value::Object(doc)).expect("serialisable");
    out.push('\n');
    out
}

/// Canonical config entries as a JSON object of strings.
pub fn config_block(config: &ExperimentConfig) -> Value {
    Value::Object(
        config
            .entries()
            .into_iter()
            .map(|(k, v)| (k.to_string(), Value::String(v)))
            .collect(),
    )
}

/// Rebuilds config text from the `config` block of a JSON report.
pub fn config_text_from_json(doc: &str) -> Result<String, String> {
    let value: Value = serde_json::from_str(doc).map_err(|e| e.to_string())?;
    let block = value
        .get("config")
        .and_then(Value::as_object)
        .ok_or("no `config` object")?;
    block
        .iter()
        .map(|(k, v)| {
            v.as_str()
                .map(|s| format!("{k} = {s}\n"))
                .ok_or_else(|| format!("config value for `{k}` is not a string"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(1.0), "1");
        assert_eq!(sig12(-0.5), "-0.5");
        assert_eq!(sig12(std::f64::consts::PI), "3.14159265359");
        assert_eq!(sig12(0.780546069781), "0.780546069781");
        assert_eq!(sig12(0.7805460697811408), "0.780546069781");
        assert_eq!(sig12(1.0 / 3.0 * 1e-7), "3.33333333333e-8");
        assert_eq!(sig12(123456789012345.0), "1.23456789012e14");
        assert_eq!(sig12(99999999999.99999), "100000000000");
        assert_eq!(sig12(9.999999999999e-6), "1e-5");
        assert_eq!(sig12(f64::NAN), "NaN");
    }

    #[test]
    fn round12_is_idempotent() {
        for x in [0.1, 1.0 / 7.0, -2.5e-9, 6.02214076e23] {
            assert_eq!(round12(round12(x)), round12(x));
            assert_eq!(sig12(round12(x)), sig12(x));
        }
    }
}
