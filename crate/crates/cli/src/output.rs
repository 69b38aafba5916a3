//! Rendering of command results as JSON, CSV or plain text.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Plain,
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn csv_rows(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv output is utf-8")
}

fn keys(v: &Value) -> Vec<String> {
    match v {
        Value::Object(m) => m.keys().cloned().collect(),
        _ => vec!["value".to_string()],
    }
}

fn values(v: &Value, header: &[String]) -> Vec<String> {
    match v {
        Value::Object(m) => header.iter().map(|k| m.get(k).map(cell).unwrap_or_default()).collect(),
        other => vec![cell(other)],
    }
}

/// A single result is one JSON object; a table is one object per line.
pub fn render(v: &Value, format: Format) -> String {
    match (format, v) {
        (Format::Json, Value::Array(rows)) => {
            rows.iter().map(|r| format!("{r}\n")).collect()
        }
        (Format::Json, other) => format!("{other}\n"),
        (Format::Csv, Value::Array(rows)) => {
            let header = rows.first().map(keys).unwrap_or_default();
            let body: Vec<Vec<String>> = rows.iter().map(|r| values(r, &header)).collect();
            csv_rows(&header, &body)
        }
        (Format::Csv, other) => {
            let header = keys(other);
            let row = values(other, &header);
            csv_rows(&header, &[row])
        }
        (Format::Plain, Value::Array(rows)) => rows
            .iter()
            .map(|r| {
                let header = keys(r);
                format!("{}\n", values(r, &header).join("\t"))
            })
            .collect(),
        (Format::Plain, Value::Object(m)) if m.len() == 1 => {
            format!("{}\n", cell(m.values().next().expect("one entry")))
        }
        (Format::Plain, Value::Object(m)) => {
            m.iter().map(|(k, v)| format!("{k}: {}\n", cell(v))).collect()
        }
        (Format::Plain, other) => format!("{}\n", cell(other)),
    }
}
