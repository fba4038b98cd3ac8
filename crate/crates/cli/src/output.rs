//! Rendering of command results as text, JSON or CSV.
//!
//! Rationals always travel as `p/q` strings next to a fixed-point decimal.

use clap::ValueEnum;
use quadisc::display;
use quadisc::Rational;
use serde_json::{json, Map, Value as Json};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub enum Value {
    Exact(Rational),
    Exacts(Vec<Rational>),
    Text(String),
    Flag(bool),
    Float(f64),
    Count(u64),
}

/// An ordered list of named results.
#[derive(Debug, Clone)]
pub struct Report {
    digits: usize,
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn new(digits: usize) -> Self {
        Report {
            digits,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: Value) -> &mut Self {
        self.entries.push((key.into(), value));
        self
    }

    pub fn exact(&mut self, key: impl Into<String>, v: &Rational) -> &mut Self {
        self.push(key, Value::Exact(v.clone()))
    }

    pub fn exacts(&mut self, key: impl Into<String>, v: Vec<Rational>) -> &mut Self {
        self.push(key, Value::Exacts(v))
    }

    pub fn text(&mut self, key: impl Into<String>, v: impl Into<String>) -> &mut Self {
        self.push(key, Value::Text(v.into()))
    }

    pub fn flag(&mut self, key: impl Into<String>, v: bool) -> &mut Self {
        self.push(key, Value::Flag(v))
    }

    pub fn float(&mut self, key: impl Into<String>, v: f64) -> &mut Self {
        self.push(key, Value::Float(v))
    }

    pub fn count(&mut self, key: impl Into<String>, v: u64) -> &mut Self {
        self.push(key, Value::Count(v))
    }

    fn decimal(&self, v: &Rational) -> String {
        display::to_fixed(v, self.digits)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => {
                let mut map = Map::new();
                for (k, v) in &self.entries {
                    map.insert(k.clone(), self.json_value(v));
                }
                let mut s = serde_json::to_string_pretty(&Json::Object(map)).expect("json");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv_writer();
                w.write_record(["field", "exact", "decimal"]).expect("csv");
                for (k, v) in &self.entries {
                    match v {
                        Value::Exact(r) => {
                            w.write_record([k.as_str(), &display::exact(r), &self.decimal(r)])
                        }
                        Value::Exacts(rs) => rs.iter().enumerate().try_for_each(|(i, r)| {
                            w.write_record([
                                format!("{k}[{i}]"),
                                display::exact(r),
                                self.decimal(r),
                            ])
                        }),
                        Value::Text(t) => w.write_record([k.as_str(), t, ""]),
                        Value::Flag(b) => w.write_record([k.as_str(), &b.to_string(), ""]),
                        Value::Float(x) => w.write_record([k.as_str(), "", &x.to_string()]),
                        Value::Count(c) => w.write_record([k.as_str(), &c.to_string(), ""]),
                    }
                    .expect("csv");
                }
                finish(w)
            }
        }
    }

    fn render_text(&self) -> String {
        let width = self
            .entries
            .iter()
            .map(|(k, _)| k.chars().count())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.entries {
            let shown = match v {
                Value::Exact(r) => {
                    if r.is_integer() {
                        display::exact(r)
                    } else {
                        format!("{} ({})", display::exact(r), self.decimal(r))
                    }
                }
                Value::Exacts(rs) => rs.iter().map(display::exact).collect::<Vec<_>>().join(" "),
                Value::Text(t) => t.clone(),
                Value::Flag(b) => if *b { "yes" } else { "no" }.to_string(),
                Value::Float(x) => format!("{x:.prec$}", prec = self.digits),
                Value::Count(c) => c.to_string(),
            };
            let pad = width - k.chars().count();
            out.push_str(&format!("{k}:{} {shown}\n", " ".repeat(pad)));
        }
        out
    }

    fn json_value(&self, v: &Value) -> Json {
        match v {
            Value::Exact(r) => json!({ "exact": display::exact(r), "decimal": self.decimal(r) }),
            Value::Exacts(rs) => {
                Json::Array(rs.iter().map(|r| Json::String(display::exact(r))).collect())
            }
            Value::Text(t) => Json::String(t.clone()),
            Value::Flag(b) => Json::Bool(*b),
            Value::Float(x) => json!(x),
            Value::Count(c) => json!(c),
        }
    }
}

/// Rows of strings under a header.
#[derive(Debug, Clone)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.headers.len());
        self.rows.push(cells);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut w = csv_writer();
                w.write_record(&self.headers).expect("csv");
                for r in &self.rows {
                    w.write_record(r).expect("csv");
                }
                finish(w)
            }
            Format::Json => {
                let rows: Vec<Json> = self
                    .rows
                    .iter()
                    .map(|r| {
                        let mut m = Map::new();
                        for (h, c) in self.headers.iter().zip(r) {
                            m.insert(h.clone(), Json::String(c.clone()));
                        }
                        Json::Object(m)
                    })
                    .collect();
                let mut s = serde_json::to_string_pretty(&Json::Array(rows)).expect("json");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut widths: Vec<usize> =
                    self.headers.iter().map(|h| h.chars().count()).collect();
                for r in &self.rows {
                    for (w, c) in widths.iter_mut().zip(r) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let line = |cells: &[String]| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect();
                    padded.join("  ").trim_end().to_string() + "\n"
                };
                let mut out = line(&self.headers);
                for r in &self.rows {
                    out.push_str(&line(r));
                }
                out
            }
        }
    }
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::Writer::from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("csv")).expect("utf8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn report_formats() {
        let mut rep = Report::new(3);
        rep.exact("D", &r(35, 32)).count("N", 16).flag("ok", true);
        assert_eq!(
            rep.render(Format::Text),
            "D:  35/32 (1.094)\nN:  16\nok: yes\n"
        );
        let j: Json = serde_json::from_str(&rep.render(Format::Json)).unwrap();
        assert_eq!(j["D"]["exact"], "35/32");
        assert_eq!(j["N"], 16);
        assert_eq!(
            rep.render(Format::Csv),
            "field,exact,decimal\nD,35/32,1.094\nN,16,\nok,true,\n"
        );
    }

    #[test]
    fn integer_shown_once() {
        let mut rep = Report::new(2);
        rep.exact("x", &r(4, 1));
        assert_eq!(rep.render(Format::Text), "x: 4\n");
    }

    #[test]
    fn table_formats() {
        let mut t = Table::new(["m", "D"]);
        t.row(vec!["4".into(), "1.571".into()]);
        assert_eq!(t.render(Format::Csv), "m,D\n4,1.571\n");
        assert_eq!(t.render(Format::Text), "m      D\n4  1.571\n");
    }
}
