use realruled::checks::Check;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// The machine-readable output of every command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub human: String,
}

impl Report {
    pub fn new(command: &str, inputs: Value, result: Value, checks: Vec<Check>, human: String) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            result,
            checks,
            human,
        }
    }
}

/// A report plus the verdict deciding the exit status.
pub struct Outcome {
    pub report: Report,
    pub ok: bool,
}
