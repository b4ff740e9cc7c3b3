//! Machine-readable verification reports.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub statement: String,
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Value>,
}

impl Report {
    pub fn new(
        statement: impl Into<String>,
        instance: impl Into<String>,
        lhs: impl ToString,
        rhs: impl ToString,
        ok: bool,
    ) -> Self {
        Report {
            statement: statement.into(),
            instance: instance.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            verdict: Verdict::from_bool(ok),
            witnesses: Vec::new(),
        }
    }

    pub fn with_witness(mut self, w: impl Serialize) -> Self {
        self.witnesses.push(serde_json::to_value(w).expect("witness serializes"));
        self
    }
}
