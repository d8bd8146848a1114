//! Machine-readable run reports with a stable field set.
//!
//! Reports are printed to stdout as pretty JSON. Timing data is only
//! populated under `--timings`, so that repeated runs with the same inputs
//! and seed are byte-identical.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Serialize)]
pub struct InputDigest {
    pub path: String,
    pub fnv1a64: String,
}

#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    pub timings_ms: Option<BTreeMap<String, u64>>,
    pub artifacts: Vec<String>,
    pub data: serde_json::Value,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            inputs: Vec::new(),
            seed: None,
            checks: Vec::new(),
            timings_ms: None,
            artifacts: Vec::new(),
            data: serde_json::Value::Null,
        }
    }

    pub fn input(&mut self, path: &str, bytes: &[u8]) {
        self.inputs.push(InputDigest { path: path.to_string(), fnv1a64: fnv1a64_hex(bytes) });
    }

    pub fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), pass, detail: detail.into() });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn timing(&mut self, name: &str, ms: u64, enabled: bool) {
        if enabled {
            self.timings_ms.get_or_insert_with(BTreeMap::new).insert(name.to_string(), ms);
        }
    }

    pub fn print(&self) {
        println!("{}", serde_json::to_string_pretty(self).expect("serializable report"));
    }
}

pub fn fnv1a64_hex(bytes: &[u8]) -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("{hash:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_stable() {
        assert_eq!(fnv1a64_hex(b""), "cbf29ce484222325");
        assert_eq!(fnv1a64_hex(b"a"), fnv1a64_hex(b"a"));
        assert_ne!(fnv1a64_hex(b"a"), fnv1a64_hex(b"b"));
    }
}
