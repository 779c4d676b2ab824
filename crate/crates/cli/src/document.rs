use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};
use strange_core::report::{Status, VerificationReport};

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub verified: usize,
    pub counterexample: usize,
    pub vacuous: usize,
    pub error: usize,
}

impl Summary {
    pub fn tally(cases: &[VerificationReport]) -> Self {
        let mut s = Summary::default();
        for c in cases {
            match c.status {
                Status::Verified => s.verified += 1,
                Status::Counterexample => s.counterexample += 1,
                Status::Vacuous => s.vacuous += 1,
                Status::Error => s.error += 1,
            }
        }
        s
    }
}

/// A verification run as written to disk. Field order is fixed.
#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub params: Map<String, Value>,
    pub cases: Vec<VerificationReport>,
    pub summary: Summary,
    pub total_ms: u64,
}

impl ReportDocument {
    pub fn new(
        command: &str,
        params: Map<String, Value>,
        mut cases: Vec<VerificationReport>,
        total_ms: u64,
    ) -> Self {
        strange_core::report::sort_reports(&mut cases);
        let summary = Summary::tally(&cases);
        ReportDocument {
            tool: "strange",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            params,
            cases,
            summary,
            total_ms,
        }
    }

    /// 0 when every case passed, 1 on any counterexample, 2 on any error.
    pub fn exit_code(&self) -> i32 {
        if self.summary.error > 0 {
            2
        } else if self.summary.counterexample > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("case_id,status,ms\n");
        for c in &self.cases {
            let _ = writeln!(out, "{},{},{}", c.case_id, c.status.as_str(), c.elapsed.as_millis());
        }
        out
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let _ = write!(out, "{:<32} {}", c.case_id, c.status.as_str());
            if let Some(w) = &c.witness {
                let _ = write!(out, "  [{}: {}]", w.detail, w.poly);
            }
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{}: verified={} counterexample={} vacuous={} error={} ({} ms)",
            self.command, s.verified, s.counterexample, s.vacuous, s.error, self.total_ms
        );
        out
    }
}
