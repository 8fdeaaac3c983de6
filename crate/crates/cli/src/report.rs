use combdyn::{Error, Rational};
use serde_json::{Map, Value};

/// Why a command did not produce a report.
#[derive(Debug)]
pub enum Failure {
    /// Bad input values or a library error: exit status 1.
    Domain(String),
    /// Malformed command line: exit status 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// The outcome of one command, printable as text or JSON.
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub result: Value,
    pub text: String,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), inputs: Map::new(), result: Value::Null, text: String::new() }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn result(mut self, result: Value, text: impl Into<String>) -> Self {
        self.result = result;
        self.text = text.into();
        self
    }

    pub fn to_json(&self, timing_ms: f64) -> Value {
        let mut doc = Map::new();
        doc.insert("command".into(), Value::String(self.command.clone()));
        doc.insert("inputs".into(), Value::Object(self.inputs.clone()));
        doc.insert("result".into(), self.result.clone());
        doc.insert("timing_ms".into(), timing_ms.into());
        Value::Object(doc)
    }
}

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

/// Entropy with twelve decimals, as a string so the digits survive JSON.
pub fn entropy(h: f64) -> String {
    format!("{h:.12}")
}

pub fn joined<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
