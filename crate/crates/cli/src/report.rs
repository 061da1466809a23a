//! Deterministic JSON run reports and exit-code mapping.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub fn sha256(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// A command failure: exit code 2 for bad input, 3 for an exhausted budget.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: String) -> Failure {
        Failure { code: 2, message }
    }

    /// Prefix the message with the index of the offending input graph.
    pub fn at(mut self, index: usize) -> Failure {
        self.message = format!("graph {index}: {}", self.message);
        self
    }
}

/// Everything a run reports. Field order and map ordering are fixed, and no
/// wall-clock data is included, so identical inputs give identical bytes.
pub struct Report {
    pub command: &'static str,
    pub inputs: Vec<Value>,
    pub params: Value,
    pub results: Value,
    pub counts: Value,
    pub completeness: Value,
    pub artifacts: Vec<Value>,
    /// A verification check failed; the process exits with code 1.
    pub failed: bool,
}

impl Report {
    pub fn new(command: &'static str, inputs: Vec<Value>, params: Value) -> Report {
        Report {
            command,
            inputs,
            params,
            results: Value::Null,
            counts: Value::Null,
            completeness: Value::Null,
            artifacts: Vec::new(),
            failed: false,
        }
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "command": self.command,
            "version": env!("CARGO_PKG_VERSION"),
            "inputs": self.inputs,
            "params": self.params,
            "counts": self.counts,
            "completeness": self.completeness,
            "results": self.results,
            "artifacts": self.artifacts,
        });
        serde_json::to_string_pretty(&v).expect("serializable")
    }

    pub fn exit_code(&self) -> u8 {
        u8::from(self.failed)
    }
}
