use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Why a run stopped short of producing its result.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Budget(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Budget(_) => 3,
        }
    }
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

#[derive(Debug, Serialize)]
pub struct InputDigest {
    pub source: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
struct Header<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    inputs: &'a [InputDigest],
}

#[derive(Debug, Serialize)]
struct Document<'a> {
    header: Header<'a>,
    body: &'a Value,
}

/// Inputs read so far, for the report header.
#[derive(Debug, Default)]
pub struct Inputs(pub Vec<InputDigest>);

impl Inputs {
    pub fn read(&mut self, path: &Path) -> Result<String, Failure> {
        let bytes =
            fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        self.record(path.display().to_string(), &bytes);
        String::from_utf8(bytes).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }

    pub fn record(&mut self, source: String, bytes: &[u8]) {
        let sha256 = format!("{:x}", Sha256::digest(bytes));
        self.0.push(InputDigest { source, sha256 });
    }
}

/// What a subcommand produced.
pub struct Outcome {
    pub summary: String,
    pub body: Value,
    /// Graph or complex JSON, for commands that build one.
    pub artifact: Option<String>,
    pub violations: bool,
}

impl Outcome {
    pub fn new(summary: impl Into<String>, body: impl Serialize) -> Self {
        Self {
            summary: summary.into(),
            body: serde_json::to_value(body).expect("report bodies serialize"),
            artifact: None,
            violations: false,
        }
    }

    pub fn with_artifact(mut self, artifact: String) -> Self {
        self.artifact = Some(artifact);
        self
    }

    pub fn with_violations(mut self, violations: bool) -> Self {
        self.violations = violations;
        self
    }
}

pub fn render(command: &str, inputs: &Inputs, body: &Value) -> String {
    let doc = Document {
        header: Header {
            tool: "cubist",
            version: env!("CARGO_PKG_VERSION"),
            command,
            inputs: &inputs.0,
        },
        body,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("reports serialize");
    s.push('\n');
    s
}

pub fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

pub fn emit(
    outcome: &Outcome,
    command: &str,
    inputs: &Inputs,
    out: Option<&Path>,
    report: Option<&Path>,
) -> Result<(), Failure> {
    if let Some(path) = report {
        write_file(path, &render(command, inputs, &outcome.body))?;
    }
    let stdout = std::io::stdout();
    let mut stdout = stdout.lock();
    match (&outcome.artifact, out) {
        (Some(a), Some(path)) => {
            write_file(path, &format!("{a}\n"))?;
            writeln!(stdout, "{}", outcome.summary)?;
        }
        (Some(a), None) => {
            writeln!(stdout, "{a}")?;
            eprintln!("{}", outcome.summary);
        }
        (None, _) => writeln!(stdout, "{}", outcome.summary)?,
    }
    Ok(())
}
