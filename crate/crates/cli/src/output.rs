//! Rendering reports as text, CSV or JSON.

use frstab::fr::Report;
use serde::Serialize;

use crate::Format;

#[derive(Serialize)]
pub struct Entry {
    #[serde(flatten)]
    pub report: Report,
    /// Reference-only entries are shown but do not affect the exit status.
    pub required: bool,
}

pub struct Outcome {
    pub command: &'static str,
    pub entries: Vec<Entry>,
    /// Replaces the generic CSV rendering when set.
    pub csv: Option<String>,
}

#[derive(Serialize)]
struct JsonDoc<'a> {
    command: &'a str,
    seed: u64,
    passed: bool,
    reports: &'a [Entry],
}

impl Outcome {
    pub fn new(command: &'static str) -> Self {
        Outcome {
            command,
            entries: Vec::new(),
            csv: None,
        }
    }

    pub fn push(&mut self, report: Report) {
        self.entries.push(Entry { report, required: true });
    }

    pub fn push_reference(&mut self, report: Report) {
        self.entries.push(Entry {
            report,
            required: false,
        });
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| !e.required || e.report.verdict.is_pass())
    }

    pub fn render(&self, format: Format, seed: u64) -> String {
        match format {
            Format::Json => {
                let doc = JsonDoc {
                    command: self.command,
                    seed,
                    passed: self.passed(),
                    reports: &self.entries,
                };
                serde_json::to_string_pretty(&doc).expect("reports serialize") + "\n"
            }
            Format::Csv => self.csv.clone().unwrap_or_else(|| self.generic_csv()),
            Format::Text => {
                let mut out = String::new();
                for e in &self.entries {
                    let r = &e.report;
                    let tag = match (e.required, r.verdict.is_pass()) {
                        (_, true) => "PASS",
                        (true, false) => "FAIL",
                        (false, false) => "NOTE",
                    };
                    out.push_str(&format!("{tag} {} [{}]: {} | {}\n", r.statement, r.instance, r.lhs, r.rhs));
                }
                out.push_str(&format!("{}: {}\n", self.command, if self.passed() { "pass" } else { "fail" }));
                out
            }
        }
    }

    fn generic_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["statement", "instance", "lhs", "rhs", "verdict", "required"])
            .expect("in-memory write");
        for e in &self.entries {
            let r = &e.report;
            let verdict = if r.verdict.is_pass() { "pass" } else { "fail" };
            w.write_record([
                r.statement.as_str(),
                &r.instance,
                &r.lhs,
                &r.rhs,
                verdict,
                &e.required.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
    }
}
