//! Structured outcomes of verification cases.

use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyring::IntPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Counterexample,
    Vacuous,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Counterexample => "counterexample",
            Status::Vacuous => "vacuous",
            Status::Error => "error",
        }
    }

    /// Verified and vacuous cases both count as passing.
    pub fn is_pass(self) -> bool {
        matches!(self, Status::Verified | Status::Vacuous)
    }
}

/// Evidence attached to a failing case: a short description and a
/// polynomial (a nonzero remainder, difference, or offending value).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub detail: String,
    pub poly: IntPoly,
}

impl Witness {
    pub fn new(detail: impl Into<String>, poly: IntPoly) -> Self {
        Witness {
            detail: detail.into(),
            poly,
        }
    }

    /// A witness carrying a single integer as a constant polynomial.
    pub fn value(detail: impl Into<String>, v: impl Into<num_bigint::BigInt>) -> Self {
        Self::new(detail, IntPoly::constant(v))
    }
}

/// Result of checking one case before it is stamped with an id and timing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Verified,
    Vacuous,
    Counterexample(Witness),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub case_id: String,
    pub status: Status,
    pub witness: Option<Witness>,
    #[serde(rename = "ms", serialize_with = "serialize_ms")]
    pub elapsed: Duration,
}

fn serialize_ms<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl VerificationReport {
    pub fn from_outcome(case_id: impl Into<String>, outcome: Outcome, elapsed: Duration) -> Self {
        let (status, witness) = match outcome {
            Outcome::Verified => (Status::Verified, None),
            Outcome::Vacuous => (Status::Vacuous, None),
            Outcome::Counterexample(w) => {
                debug_assert!(!w.poly.is_zero(), "counterexample witness must be nonzero");
                (Status::Counterexample, Some(w))
            }
        };
        VerificationReport {
            case_id: case_id.into(),
            status,
            witness,
            elapsed,
        }
    }

    pub fn error(case_id: impl Into<String>, err: &Error) -> Self {
        VerificationReport {
            case_id: case_id.into(),
            status: Status::Error,
            witness: Some(Witness::new(err.to_string(), IntPoly::zero())),
            elapsed: Duration::ZERO,
        }
    }

    /// Collapses a fallible verification into a report, mapping errors to
    /// `Status::Error` under the given id.
    pub fn or_error(case_id: impl Into<String>, result: Result<VerificationReport>) -> Self {
        result.unwrap_or_else(|e| Self::error(case_id, &e))
    }
}

/// Runs `check` and stamps the outcome with `case_id` and the elapsed time.
pub fn timed(
    case_id: impl Into<String>,
    check: impl FnOnce() -> Result<Outcome>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let outcome = check()?;
    Ok(VerificationReport::from_outcome(case_id, outcome, start.elapsed()))
}

/// Sorts reports into ascending `case_id` order.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| a.case_id.cmp(&b.case_id));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serialized_key_order() {
        let r = VerificationReport::from_outcome(
            "thm1/t=5/N=4",
            Outcome::Counterexample(Witness::value("i=3", 2)),
            Duration::from_millis(7),
        );
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"case_id":"thm1/t=5/N=4","status":"counterexample","witness":{"detail":"i=3","poly":["2"]},"ms":7}"#
        );
    }

    #[test]
    fn errors_become_error_status() {
        let r = VerificationReport::or_error("x", Err(Error::Domain("bad".into())));
        assert_eq!(r.status, Status::Error);
        assert!(!r.status.is_pass());
        assert!(Status::Vacuous.is_pass());
    }
}
