//! Output records and the JSON, CSV and text projections.

use std::io;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use spinfake::poly::TruncatedSeries;
use spinfake::scalar::{rational_string, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
pub struct OutputArgs {
    /// Output format; JSON is canonical, CSV and text are projections of it.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Add a Unix timestamp to the JSON metadata (off by default so that
    /// repeated runs are byte-identical).
    #[arg(long)]
    pub timestamp: bool,
}

#[derive(Serialize)]
pub struct Record {
    kind: &'static str,
    metadata: Value,
    payload: Value,
}

impl Record {
    pub fn new(kind: &'static str, ty: Option<String>, n: usize, payload: Value) -> Self {
        let metadata = json!({"type": ty, "n": n, "tool_version": env!("CARGO_PKG_VERSION")});
        Record { kind, metadata, payload }
    }
}

impl OutputArgs {
    pub fn emit_json(&self, mut record: Record) {
        if self.timestamp {
            let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
            record.metadata["timestamp"] = json!(secs);
        }
        println!("{}", serde_json::to_string_pretty(&record).expect("records serialize"));
    }
}

pub fn write_csv(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(io::stdout());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

/// A JSON integer when it fits in 64 bits, its decimal string otherwise.
pub fn integer_json(v: &num_bigint::BigInt) -> Value {
    use num_traits::ToPrimitive;
    v.to_i64().map(Value::from).unwrap_or_else(|| Value::from(v.to_string()))
}

fn rational_json(r: &Rational) -> Value {
    if r.is_integer() {
        integer_json(r.numer())
    } else {
        Value::from(rational_string(r))
    }
}

pub fn series_json(s: &TruncatedSeries) -> Value {
    Value::Array(s.coeffs().iter().map(rational_json).collect())
}

/// Arrays as space-separated values, strings without quotes.
pub fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
