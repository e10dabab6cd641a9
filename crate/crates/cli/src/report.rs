//! Machine-readable run reports.

use detold_core::{Failure, Ratio, Verdict, VertexSet};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(path: &str, bytes: &[u8]) -> InputDigest {
        let hash = Sha256::digest(bytes);
        InputDigest { path: path.to_string(), sha256: hash.iter().map(|b| format!("{b:02x}")).collect() }
    }
}

/// Everything one invocation produced. Only `wall_time_ms` depends on
/// anything but the inputs and flags.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub results: Value,
    pub wall_time_ms: u64,
    pub workers: usize,
}

pub fn emit(report: &RunReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Tsv => {
            let mut out = String::new();
            let mut row = |k: &str, v: &Value| {
                let text = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("{k}\t{text}\n"));
            };
            row("command", &json!(report.command.join(" ")));
            for d in &report.inputs {
                row(&format!("input:{}", d.path), &json!(d.sha256));
            }
            match &report.results {
                Value::Object(map) => map.iter().for_each(|(k, v)| row(k, v)),
                other => row("results", other),
            }
            row("wall_time_ms", &json!(report.wall_time_ms));
            row("workers", &json!(report.workers));
            out
        }
    }
}

pub fn ratio(r: &Ratio) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn set(s: &VertexSet) -> Value {
    json!(s.to_vec())
}

pub fn failure<V: Serialize>(f: &Failure<V>) -> Value {
    match f {
        Failure::UnderDominated { vertex, have, need } => {
            json!({"type": "under-dominated", "vertex": vertex, "have": have, "need": need})
        }
        Failure::Undistinguished { u, v, kind, have, need } => {
            let kind = match kind {
                detold_core::PairKind::Plain => "plain",
                detold_core::PairKind::Sharp => "sharp",
            };
            json!({"type": "undistinguished", "u": u, "v": v, "kind": kind, "have": have, "need": need})
        }
    }
}

pub fn failures<V: Serialize>(v: &Verdict<V>) -> Value {
    Value::Array(v.failures.iter().map(failure).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(results: Value) -> RunReport {
        RunReport { command: vec!["solve".into()], inputs: vec![], results, wall_time_ms: 3, workers: 1 }
    }

    #[test]
    fn stable_json() {
        let r = report(json!({"feasible": true, "optimum": 9, "witness": [0, 1]}));
        let text = emit(&r, Format::Json);
        let a = text.find("feasible").unwrap();
        assert!(a < text.find("optimum").unwrap() && text.find("optimum").unwrap() < text.find("witness").unwrap());
        assert_eq!(text, emit(&r, Format::Json));
        assert_eq!(ratio(&Ratio::new(26, 60)), "13/30");
    }

    #[test]
    fn tsv_rows() {
        let text = emit(&report(json!({"feasible": false})), Format::Tsv);
        assert!(text.contains("feasible\tfalse\n"));
        assert!(text.starts_with("command\tsolve\n"));
    }

    #[test]
    fn digest() {
        assert_eq!(
            InputDigest::new("x", b"abc").sha256,
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
