//! Rendering of command records as JSON lines, CSV or human-readable text.
//!
//! Every record carries `{command, inputs, outputs, version}`. Floating-point
//! values are written with 17 significant digits in the machine formats and
//! 6 in the human format. Non-finite values become `null`.
//!
//! CSV output is in long form with the fixed header
//! `command,record,field,value`: one row per scalar leaf, `record` is the
//! zero-based index of the record within the run and `field` is the dotted
//! path of the leaf (for example `outputs.terms.0.value`).

use std::io::{self, Write};
use std::str::FromStr;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Map, Number, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub command: &'static str,
    pub inputs: Value,
    pub outputs: Value,
}

impl Record {
    pub fn new(command: &'static str, inputs: Value, outputs: impl Serialize) -> Result<Self> {
        Ok(Self {
            command,
            inputs,
            outputs: serde_json::to_value(outputs)?,
        })
    }

    fn to_value(&self, digits: usize) -> Value {
        json!({
            "command": self.command,
            "inputs": reformat(&self.inputs, digits),
            "outputs": reformat(&self.outputs, digits),
            "version": VERSION,
        })
    }
}

/// `v` with `digits` significant digits in scientific notation.
fn sci(v: f64, digits: usize) -> String {
    format!("{:.*e}", digits - 1, v)
}

/// `v` with six significant digits, in fixed notation when that is short.
pub fn human_number(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let mag = v.abs().log10().floor() as i32;
    if (-4..6).contains(&mag) {
        let decimals = (5 - mag).max(0) as usize;
        let s = format!("{v:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        sci(v, 6)
    }
}

/// Rewrites every floating-point number in `v` with `digits` significant
/// digits. Integers are left untouched.
fn reformat(v: &Value, digits: usize) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => match n.as_f64() {
            Some(f) if f.is_finite() => {
                Number::from_str(&sci(f, digits)).map_or(Value::Null, Value::Number)
            }
            _ => Value::Null,
        },
        Value::Array(a) => Value::Array(a.iter().map(|x| reformat(x, digits)).collect()),
        Value::Object(o) => Value::Object(
            o.iter()
                .map(|(k, x)| (k.clone(), reformat(x, digits)))
                .collect::<Map<_, _>>(),
        ),
        other => other.clone(),
    }
}

fn leaves(prefix: &str, v: &Value, out: &mut Vec<(String, Value)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(o) => o.iter().for_each(|(k, x)| leaves(&join(k), x, out)),
        Value::Array(a) => a
            .iter()
            .enumerate()
            .for_each(|(i, x)| leaves(&join(&i.to_string()), x, out)),
        leaf => out.push((prefix.to_string(), leaf.clone())),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn scalar_text(v: &Value, human: bool) -> String {
    match v {
        Value::Null => "null".to_string(),
        Value::String(s) => s.clone(),
        Value::Number(n) if human && n.is_f64() => n.as_f64().map_or_else(|| n.to_string(), human_number),
        other => other.to_string(),
    }
}

/// Writes `records` in `format`. `start` is the index of the first record
/// within the run, used for the CSV `record` column.
pub fn write_records(out: &mut dyn Write, format: Format, records: &[Record], start: usize) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.to_value(17))?;
            }
        }
        Format::Csv => {
            for (i, r) in records.iter().enumerate() {
                let mut rows = Vec::new();
                leaves("inputs", &reformat(&r.inputs, 17), &mut rows);
                leaves("outputs", &reformat(&r.outputs, 17), &mut rows);
                for (field, v) in rows {
                    writeln!(
                        out,
                        "{},{},{},{}",
                        r.command,
                        start + i,
                        csv_field(&field),
                        csv_field(&scalar_text(&v, false))
                    )?;
                }
            }
        }
        Format::Human => {
            for r in records {
                writeln!(out, "== {} ==", r.command)?;
                let mut rows = Vec::new();
                leaves("", &r.inputs, &mut rows);
                leaves("", &r.outputs, &mut rows);
                let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in rows {
                    writeln!(out, "  {k:width$}  {}", scalar_text(&v, true))?;
                }
            }
        }
    }
    Ok(())
}

pub const CSV_HEADER: &str = "command,record,field,value";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        let v = reformat(&json!({"a": 0.1, "n": 7, "s": "x", "bad": null}), 17);
        assert_eq!(v["a"].to_string(), "1.0000000000000001e-1");
        assert_eq!(v["a"].as_f64(), Some(0.1));
        assert_eq!(v["n"].to_string(), "7");
        assert_eq!(v["s"], "x");
    }

    #[test]
    fn human_numbers() {
        assert_eq!(human_number(268.0123456), "268.012");
        assert_eq!(human_number(0.5), "0.5");
        assert_eq!(human_number(1e29), "1.00000e29");
        assert_eq!(human_number(-237.934), "-237.934");
        assert_eq!(human_number(0.0), "0");
    }

    #[test]
    fn csv_rows_are_long_form() {
        let r = Record::new("bound", json!({"q": 3}), json!({"total": 1.5, "terms": [{"label": "a,b"}]})).unwrap();
        let mut buf = Vec::new();
        write_records(&mut buf, Format::Csv, &[r], 4).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("bound,4,inputs.q,3\n"));
        assert!(text.contains("bound,4,outputs.terms.0.label,\"a,b\"\n"));
        assert!(text.contains("bound,4,outputs.total,1.5000000000000000e+0\n"));
    }

    #[test]
    fn json_record_has_schema_keys() {
        let r = Record::new("count", json!({}), json!({"pi": 1})).unwrap();
        let mut buf = Vec::new();
        write_records(&mut buf, Format::Json, &[r], 0).unwrap();
        let v: Value = serde_json::from_slice(&buf).unwrap();
        for k in ["command", "inputs", "outputs", "version"] {
            assert!(v.get(k).is_some(), "{k}");
        }
    }
}
