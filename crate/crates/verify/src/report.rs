//! Check results and their JSON-lines / text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    PaperDiscrepancy,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
            Status::PaperDiscrepancy => "paper-discrepancy",
        }
    }
}

/// Integer parameters of one check invocation, keyed by name.
pub type Params = BTreeMap<&'static str, u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub check_id: &'static str,
    pub params: Params,
    pub primes: [u32; 2],
    pub status: Status,
    pub details: String,
    pub wall_ms: u64,
}

impl CheckResult {
    pub fn to_json(&self) -> Value {
        let mut params = serde_json::Map::new();
        for (k, v) in &self.params {
            params.insert((*k).to_string(), json!(v));
        }
        params.insert("p".into(), json!(self.primes));
        json!({
            "check_id": self.check_id,
            "params": Value::Object(params),
            "status": self.status,
            "details": self.details,
            "wall_ms": self.wall_ms,
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub paper_discrepancy: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    /// Field description per `n`: the two primes used.
    pub fields: BTreeMap<u32, [u32; 2]>,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for r in &self.results {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skip => s.skip += 1,
                Status::PaperDiscrepancy => s.paper_discrepancy += 1,
            }
        }
        s
    }

    fn fields_json(&self) -> Value {
        Value::Object(self.fields.iter().map(|(n, p)| (n.to_string(), json!(p))).collect())
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&r.to_json().to_string());
            out.push('\n');
        }
        let tail = json!({
            "summary": self.summary(),
            "tool": self.tool,
            "version": self.version,
            "primes": self.fields_json(),
        });
        out.push_str(&tail.to_string());
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.tool, self.version);
        for (n, [p1, p2]) in &self.fields {
            let _ = writeln!(out, "n={n}: F_{p1} and F_{p2}");
        }
        for r in &self.results {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(
                out,
                "{:<20} {:<14} {:<18} {}",
                r.check_id,
                params.join(" "),
                r.status.as_str(),
                r.details
            );
        }
        let s = self.summary();
        let _ = writeln!(
            out,
            "summary: pass {} fail {} skip {} paper-discrepancy {}",
            s.pass, s.fail, s.skip, s.paper_discrepancy
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_line_shape() {
        let r = CheckResult {
            check_id: "C1-detC",
            params: [("n", 3), ("t", 2)].into_iter().collect(),
            primes: [10009, 10039],
            status: Status::PaperDiscrepancy,
            details: "x".into(),
            wall_ms: 0,
        };
        assert_eq!(
            r.to_json().to_string(),
            r#"{"check_id":"C1-detC","details":"x","params":{"n":3,"p":[10009,10039],"t":2},"status":"paper-discrepancy","wall_ms":0}"#
        );
        let rep = Report { tool: "t", version: "0", fields: BTreeMap::new(), results: vec![r] };
        let last = rep.to_json_lines().lines().last().unwrap().to_string();
        let v: Value = serde_json::from_str(&last).unwrap();
        assert_eq!(v["summary"]["paper_discrepancy"], 1);
    }
}
