//! Output assembly shared by the table, CSV, and JSON writers.
//!
//! Every floating-point value goes through [`sig12`] exactly once, so the
//! three formats agree on digits and two runs over the same input agree
//! byte for byte.

use serde_json::{Map, Number, Value};

/// Renders `x` with 12 significant digits.
///
/// Values in a moderate exponent range come out positionally with trailing
/// zeros trimmed (integral values keep one: `2` renders as `2.0`); the rest
/// use scientific notation. Zero is `0.0` regardless of sign.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0.0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let mut out = format!("{x:.decimals$}");
        if out.contains('.') {
            while out.ends_with('0') {
                out.pop();
            }
            if out.ends_with('.') {
                out.push('0');
            }
        } else {
            out.push_str(".0");
        }
        out
    } else {
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{exp}")
    }
}

/// A float as a JSON number carrying the [`sig12`] digits verbatim.
pub fn num(x: f64) -> Value {
    Value::Number(Number::from_string_unchecked(sig12(x)))
}

/// A JSON object with the given fields. Keys serialize alphabetically.
pub fn obj<'a>(fields: impl IntoIterator<Item = (&'a str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in fields {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

/// Wraps per-vertex records and global results in the common document shape
/// and serializes it. `graph` is the `(n, m)` header, absent for commands
/// that take no input graph.
pub fn json_document(graph: Option<(usize, usize)>, vertices: Vec<Value>, global: Value) -> String {
    let graph = match graph {
        Some((n, m)) => obj([
            ("n", Value::from(n as u64)),
            ("m", Value::from(m as u64)),
        ]),
        None => Value::Null,
    };
    let root = obj([
        ("graph", graph),
        ("vertices", Value::Array(vertices)),
        ("global", global),
    ]);
    let mut out = serde_json::to_string_pretty(&root).expect("value serializes");
    out.push('\n');
    out
}

/// Row-oriented data behind the table and CSV formats: a header, rows of
/// pre-rendered cells, and trailing annotation lines (plain text after a
/// blank line in tables, `#`-prefixed comments in CSV).
pub struct Sheet {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub footers: Vec<String>,
}

impl Sheet {
    pub fn render_table(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let mut out = String::new();
        let mut push_line = |cells: &[String]| {
            let mut line = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(cell);
                if i + 1 < cells.len() {
                    line.extend(std::iter::repeat(' ').take(widths[i] - cell.len()));
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        };
        let header: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        push_line(&header);
        for row in &self.rows {
            push_line(row);
        }
        if !self.footers.is_empty() {
            out.push('\n');
            for line in &self.footers {
                out.push_str(line);
                out.push('\n');
            }
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row.iter().map(|c| csv_field(c)).collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        for line in &self.footers {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
