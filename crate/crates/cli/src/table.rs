use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::io::Write;

/// One cell of an output table.
#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Text(String),
    Flag(bool),
    Missing,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Missing, Cell::Num)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Flag(v)
    }
}

/// Decimal rendering with `sig` significant digits, scientific outside [1e-5, 1e12).
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (mant, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    if (-5..12).contains(&exp) {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim(format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim(mant.to_string()), exp)
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn render(c: &Cell) -> String {
    match c {
        Cell::Num(v) => fmt_sig(*v, 12),
        Cell::Text(t) => t.replace([',', '\n'], ";"),
        Cell::Flag(b) => b.to_string(),
        Cell::Missing => String::new(),
    }
}

/// A table of results plus the warnings raised while computing it.
#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        let mut columns: Vec<String> = columns.iter().map(|s| s.to_string()).collect();
        columns.push("warning".into());
        Table { columns, rows: Vec::new() }
    }

    /// Append a row; `warning` fills the trailing column.
    pub fn push(&mut self, mut cells: Vec<Cell>, warning: Option<String>) {
        assert_eq!(cells.len() + 1, self.columns.len(), "row width");
        cells.push(Cell::Text(warning.unwrap_or_default()));
        self.rows.push(cells);
    }

    pub fn has_warnings(&self) -> bool {
        self.rows.iter().any(|r| matches!(r.last(), Some(Cell::Text(t)) if !t.is_empty()))
    }

    fn data_section(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.iter().map(render).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }
}

/// Command name, resolved parameters and seed; the checksum is added on output.
#[derive(Debug, Clone)]
pub struct Manifest {
    pub command: String,
    pub params: Value,
    pub seed: u64,
}

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Render the table as CSV with a `#` manifest header, or as JSON.
pub fn emit(table: &Table, manifest: &Manifest, as_json: bool) -> String {
    let data = table.data_section();
    let checksum = hex::encode(Sha256::digest(data.as_bytes()));
    if !as_json {
        let mut out = String::new();
        out.push_str(&format!("# command: {}\n", manifest.command));
        out.push_str(&format!("# params: {}\n", manifest.params));
        out.push_str(&format!("# seed: {}\n", manifest.seed));
        out.push_str(&format!("# version: {VERSION}\n"));
        out.push_str(&format!("# sha256: {checksum}\n"));
        out.push_str(&data);
        return out;
    }
    // values come from the CSV strings so both formats carry identical numbers
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|row| {
            let mut obj = Map::new();
            for (name, cell) in table.columns.iter().zip(row) {
                let v = match cell {
                    Cell::Num(x) => {
                        let s = render(cell);
                        match s.parse::<f64>() {
                            Ok(p) if p.is_finite() => json!(p),
                            _ => json!(if x.is_nan() { "nan".to_string() } else { s }),
                        }
                    }
                    Cell::Text(t) => json!(t),
                    Cell::Flag(b) => json!(b),
                    Cell::Missing => Value::Null,
                };
                obj.insert(name.clone(), v);
            }
            Value::Object(obj)
        })
        .collect();
    let doc = json!({
        "manifest": {
            "command": manifest.command,
            "params": manifest.params,
            "seed": manifest.seed,
            "version": VERSION,
            "sha256": checksum,
        },
        "columns": table.columns,
        "rows": rows,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("json");
    s.push('\n');
    s
}

pub fn write_out(text: &str, path: Option<&std::path::Path>) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            let mut h = std::io::stdout().lock();
            h.write_all(text.as_bytes())?;
            h.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_sig(0.0922720123456789, 12), "0.0922720123457");
        assert_eq!(fmt_sig(1.0, 12), "1");
        assert_eq!(fmt_sig(-2.5e-9, 12), "-2.5e-9");
        assert_eq!(fmt_sig(1810856.47035835, 12), "1810856.47036");
        assert_eq!(fmt_sig(3.0e14, 12), "3e14");
        assert_eq!(fmt_sig(f64::NAN, 12), "nan");
    }

    #[test]
    fn json_matches_csv_values() {
        let mut t = Table::new(&["x", "name"]);
        t.push(vec![Cell::Num(std::f64::consts::PI), "a".into()], None);
        let m = Manifest { command: "t".into(), params: json!({}), seed: 0 };
        let csv = emit(&t, &m, false);
        let js: Value = serde_json::from_str(&emit(&t, &m, true)).unwrap();
        let from_csv: f64 = csv.lines().last().unwrap().split(',').next().unwrap().parse().unwrap();
        assert_eq!(js["rows"][0]["x"].as_f64().unwrap(), from_csv);
        assert!(!t.has_warnings());
        let sum_csv = csv.lines().find(|l| l.starts_with("# sha256")).unwrap().split(' ').next_back().unwrap();
        assert_eq!(js["manifest"]["sha256"].as_str().unwrap(), sum_csv);
    }
}
