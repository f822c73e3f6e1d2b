use std::fmt::Display;
use std::io::{self, Write};

use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "reflect-rings/1";

/// Decimal string for any number.
pub fn num<T: Display>(x: T) -> Value {
    Value::String(x.to_string())
}

pub fn nums<T: Display>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(num).collect())
}

/// Per-item rows, serialized under `key` as an array of objects.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub key: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(key: &str, columns: &[&str]) -> Self {
        Table { key: key.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn objects(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> = self.columns.iter().cloned().zip(r.iter().cloned()).collect();
                Value::Object(obj)
            })
            .collect();
        Value::Array(rows)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub command: String,
    pub identity: String,
    pub parameter_range: String,
    pub checked: u64,
    pub violations: Vec<Value>,
    pub data: Map<String, Value>,
    pub table: Option<Table>,
    pub wall_time_ms: Option<u128>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Pretty,
    Csv,
}

impl Report {
    pub fn new(command: &str, identity: &str, parameter_range: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            identity: identity.into(),
            parameter_range: parameter_range.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn set(&mut self, key: &str, v: Value) {
        self.data.insert(key.into(), v);
    }

    pub fn to_json(&self) -> Value {
        let mut data = self.data.clone();
        if let Some(t) = &self.table {
            data.insert(t.key.clone(), t.objects());
        }
        let mut out = json!({
            "schema": SCHEMA,
            "command": self.command,
            "identity": self.identity,
            "parameter_range": self.parameter_range,
            "status": if self.passed() { "pass" } else { "fail" },
            "checked_count": num(self.checked),
            "violations": self.violations,
            "data": Value::Object(data),
        });
        if let Some(ms) = self.wall_time_ms {
            out["wall_time_ms"] = num(ms);
        }
        out
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&self.to_json())?),
            Format::Csv => self.write_csv(out),
            Format::Pretty => self.write_pretty(out),
        }
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let Some(t) = &self.table else {
            return writeln!(out, "status,{}", if self.passed() { "pass" } else { "fail" });
        };
        writeln!(out, "{}", t.columns.join(","))?;
        for r in &t.rows {
            let cells: Vec<String> = r.iter().map(|c| csv_cell(&cell(c))).collect();
            writeln!(out, "{}", cells.join(","))?;
        }
        Ok(())
    }

    fn write_pretty(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{}  [{}]", self.command, if self.passed() { "PASS" } else { "FAIL" })?;
        if !self.identity.is_empty() {
            writeln!(out, "  identity: {}", self.identity)?;
        }
        writeln!(out, "  range:    {}", self.parameter_range)?;
        writeln!(out, "  checked:  {}", self.checked)?;
        for (k, v) in &self.data {
            writeln!(out, "  {k}: {}", cell(v))?;
        }
        if let Some(ms) = self.wall_time_ms {
            writeln!(out, "  wall time: {ms} ms")?;
        }
        if let Some(t) = &self.table {
            let text: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(cell).collect()).collect();
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|i| text.iter().map(|r| r[i].len()).chain([t.columns[i].len()]).max().unwrap_or(0))
                .collect();
            let line = |cells: &[String]| {
                cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect::<Vec<_>>().join("  ")
            };
            writeln!(out)?;
            writeln!(out, "{}", line(&t.columns))?;
            writeln!(out, "{}", widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  "))?;
            for r in &text {
                writeln!(out, "{}", line(r))?;
            }
        }
        if !self.violations.is_empty() {
            writeln!(out)?;
            writeln!(out, "violations ({}):", self.violations.len())?;
            for v in &self.violations {
                writeln!(out, "  {}", cell(v))?;
            }
        }
        Ok(())
    }
}

/// Plain-text rendering used by the table and CSV writers.
pub fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("[{}]", xs.iter().map(cell).collect::<Vec<_>>().join(",")),
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={}", cell(v))).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
