//! Buffered output: tables are printed line by line, JSON as one document at the end.

use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Value};

/// Version of `schema/report.schema.json` the JSON output conforms to.
pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

pub struct Printer {
    format: Format,
    command: &'static str,
    /// Lines of runs already headed.
    done: String,
    /// Lines not yet attached to a run header.
    text: String,
    runs: Vec<Value>,
    payload: Option<Value>,
}

impl Printer {
    pub fn new(format: Format, command: &'static str) -> Self {
        Printer {
            format,
            command,
            done: String::new(),
            text: String::new(),
            runs: Vec::new(),
            payload: None,
        }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn text(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
    }

    /// One ring's result, tagged with the header that reproduces it.
    pub fn push_run(&mut self, header: Value, result: Value) {
        if self.format == Format::Table {
            let h = &header;
            let line = format!(
                "# ring={} hash={} max_size={} max_gens={} seed={}",
                h["ring"].as_str().unwrap_or(""),
                h["hash"].as_str().unwrap_or(""),
                h["max_size"],
                h["max_gens"],
                h["seed"]
            );
            self.done.push_str(&line);
            self.done.push('\n');
            self.done.push_str(&std::mem::take(&mut self.text));
            return;
        }
        self.runs.push(json!({ "header": header, "result": result }));
    }

    pub fn set_payload(&mut self, v: Value) {
        self.payload = Some(v);
    }

    /// Print everything; a closed stdout (e.g. a pipe into `head`) is not an error.
    pub fn finish(self) {
        let body = match self.format {
            Format::Table => format!("{}{}", self.done, self.text),
            Format::Json => {
                let mut doc = json!({ "schema_version": SCHEMA_VERSION, "command": self.command, "runs": self.runs });
                if let Some(p) = self.payload {
                    doc["suites"] = p;
                }
                serde_json::to_string_pretty(&doc).expect("json output") + "\n"
            }
        };
        let _ = std::io::stdout().lock().write_all(body.as_bytes());
    }
}
