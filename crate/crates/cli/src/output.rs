//! Rows rendered as JSON, CSV or plain text.

use std::io::{self, Write};
use std::str::FromStr;

use clap::ValueEnum;
use identity_lab::Value as LabValue;
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};
use series_core::CycInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn big(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

pub fn cyc(c: &CycInt) -> Value {
    json!({ "t": c.order(), "c": c.coeffs().iter().map(big).collect::<Vec<_>>() })
}

pub fn lab_value(v: &LabValue) -> Value {
    match v {
        LabValue::Int(i) => big(i),
        LabValue::Cyc(c) => cyc(c),
        LabValue::Text(s) => Value::String(s.clone()),
    }
}

/// A command's output: named columns, one row per object.
pub struct Table {
    pub command: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    /// Replaces the default text rendering when present.
    pub text: Option<Vec<String>>,
    pub metadata: Option<Value>,
}

impl Table {
    pub fn new(command: &'static str, columns: &[&'static str]) -> Self {
        Table { command, columns: columns.to_vec(), rows: Vec::new(), text: None, metadata: None }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| {
                        Value::Object(
                            self.columns.iter().map(|c| c.to_string()).zip(r.iter().cloned()).collect::<Map<_, _>>(),
                        )
                    })
                    .collect();
                let mut doc = json!({ "command": self.command, "rows": rows });
                if let Some(m) = &self.metadata {
                    doc["metadata"] = m.clone();
                }
                serde_json::to_writer_pretty(&mut *out, &doc)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for r in &self.rows {
                    w.write_record(r.iter().map(cell))?;
                }
                w.flush()
            }
            Format::Text => {
                match &self.text {
                    Some(lines) => {
                        for l in lines {
                            writeln!(out, "{l}")?;
                        }
                    }
                    None => {
                        for r in &self.rows {
                            writeln!(out, "{}", r.iter().map(cell).collect::<Vec<_>>().join(" "))?;
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

/// Strings raw, numbers as written, objects as compact JSON, null empty.
fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new("demo", &["n", "value"]);
        t.push(vec![json!(1), big(&BigInt::from(10).pow(30))]);
        t.push(vec![json!(2), cyc(&CycInt::zeta_pow(5, 1))]);
        t
    }

    fn render(t: &Table, f: Format) -> String {
        let mut buf = Vec::new();
        t.write(f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn encodings_agree() {
        let t = sample();
        let csv = render(&t, Format::Csv);
        assert_eq!(csv, "n,value\n1,1000000000000000000000000000000\n2,\"{\"\"t\"\":5,\"\"c\"\":[0,1,0,0]}\"\n");
        let json: Value = serde_json::from_str(&render(&t, Format::Json)).unwrap();
        assert_eq!(json["rows"][0]["value"].to_string(), "1000000000000000000000000000000");
        assert_eq!(json["rows"][1]["value"], json!({"t": 5, "c": [0, 1, 0, 0]}));
        assert_eq!(render(&t, Format::Text).lines().next(), Some("1 1000000000000000000000000000000"));
    }
}
