//! Named verification checks, their results, and the JSON report.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;

/// What a check found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub passed: bool,
    /// Terms left in the residual (0 when the identity holds).
    pub residual_terms: usize,
    pub detail: String,
}

impl Outcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        Self {
            passed: true,
            residual_terms: 0,
            detail: detail.into(),
        }
    }

    pub fn fail(residual_terms: usize, detail: impl Into<String>) -> Self {
        Self {
            passed: false,
            residual_terms,
            detail: detail.into(),
        }
    }

    /// Folds several sub-results: passes iff all pass, residuals add up.
    pub fn all(parts: Vec<(String, Outcome)>) -> Self {
        let passed = parts.iter().all(|(_, o)| o.passed);
        let residual_terms = parts.iter().map(|(_, o)| o.residual_terms).sum();
        let detail = if passed {
            format!("{} identities hold", parts.len())
        } else {
            parts
                .iter()
                .filter(|(_, o)| !o.passed)
                .map(|(name, o)| format!("{name}: {}", o.detail))
                .collect::<Vec<_>>()
                .join("; ")
        };
        Self {
            passed,
            residual_terms,
            detail,
        }
    }
}

type Job = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

/// A registered check: a stable id and the computation behind it.
pub struct Check {
    pub id: String,
    job: Job,
}

impl Check {
    pub fn new(id: impl Into<String>, job: impl Fn() -> Result<Outcome> + Send + Sync + 'static) -> Self {
        Self {
            id: id.into(),
            job: Box::new(job),
        }
    }

    pub fn run(&self) -> CheckRecord {
        let start = Instant::now();
        let (status, residual_terms, detail) = match (self.job)() {
            Ok(o) if o.passed => (Status::Pass, o.residual_terms, o.detail),
            Ok(o) => (Status::Fail, o.residual_terms, o.detail),
            Err(e) => (Status::Fail, 0, format!("error: {e}")),
        };
        CheckRecord {
            check_id: self.id.clone(),
            status,
            residual_terms,
            elapsed_ms: start.elapsed().as_millis() as u64,
            detail,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub status: Status,
    pub residual_terms: usize,
    pub elapsed_ms: u64,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Runs checks in parallel; records come back ordered by id.
pub fn run(suite: &str, checks: &[Check]) -> Report {
    let mut records: Vec<CheckRecord> = checks.par_iter().map(Check::run).collect();
    records.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    let mut summary = Summary {
        total: records.len(),
        ..Summary::default()
    };
    for r in &records {
        match r.status {
            Status::Pass => summary.passed += 1,
            Status::Fail => summary.failed += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    Report {
        version: 1,
        suite: suite.to_string(),
        checks: records,
        summary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn ordering_and_summary() {
        let checks = vec![
            Check::new("b", || Ok(Outcome::pass("ok"))),
            Check::new("a", || Ok(Outcome::fail(3, "residual"))),
            Check::new("c", || Err(Error::DivisionByZero)),
        ];
        let r = run("t", &checks);
        let ids: Vec<_> = r.checks.iter().map(|c| c.check_id.as_str()).collect();
        assert_eq!(ids, ["a", "b", "c"]);
        assert_eq!(r.summary.passed, 1);
        assert_eq!(r.summary.failed, 2);
        assert!(!r.all_passed());
        assert_eq!(r.checks[0].residual_terms, 3);
    }

    #[test]
    fn folding() {
        let o = Outcome::all(vec![
            ("x".into(), Outcome::pass("")),
            ("y".into(), Outcome::fail(2, "bad")),
        ]);
        assert!(!o.passed);
        assert_eq!(o.residual_terms, 2);
        assert_eq!(o.detail, "y: bad");
    }
}
