//! Machine-readable verification reports.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub params: Map<String, Value>,
    pub checks: Vec<Check>,
    pub derived_values: Map<String, Value>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerifyReport {
            suite: suite.into(),
            params: Map::new(),
            checks: Vec::new(),
            derived_values: Map::new(),
            elapsed_ms: 0,
        }
    }

    pub fn param(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), v.into());
        self
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool) -> &mut Check {
        self.checks.push(Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: None,
            value: None,
        });
        self.checks.last_mut().unwrap()
    }

    /// Pass/fail check carrying an optional witness for failures.
    pub fn check_with(&mut self, name: impl Into<String>, witness: Option<String>) -> &mut Check {
        let ok = witness.is_none();
        let c = self.check(name, ok);
        c.witness = witness;
        c
    }

    pub fn derive(&mut self, key: impl Into<String>, v: impl Into<Value>) -> &mut Self {
        self.derived_values.insert(key.into(), v.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// Appends another report's checks and derived values under a prefix.
    pub fn absorb(&mut self, prefix: &str, other: VerifyReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
        for (k, v) in other.derived_values {
            self.derived_values.insert(format!("{prefix}{k}"), v);
        }
    }

    pub fn finish(&mut self, start: Instant) -> &mut Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    /// Pretty JSON with `elapsed_ms` zeroed, for comparisons.
    pub fn canonical_json(&self) -> String {
        let mut c = self.clone();
        c.elapsed_ms = 0;
        serde_json::to_string_pretty(&c).expect("report serializes")
    }
}

impl Check {
    pub fn value(&mut self, v: impl Into<Value>) -> &mut Self {
        self.value = Some(v.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let mut r = VerifyReport::new("relations");
        r.param("n", 2);
        r.check("unit", true).value(4);
        r.check_with("quadratic", Some("(1,2,1,2) at v_1".into()));
        let v: Value = serde_json::from_str(&r.canonical_json()).unwrap();
        assert_eq!(v["checks"][0]["status"], "pass");
        assert_eq!(v["checks"][1]["status"], "fail");
        assert!(v["checks"][0].get("witness").is_none());
        assert!(!r.passed());
    }
}
