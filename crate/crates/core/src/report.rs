//! Check outcomes and the JSON shapes they are reported in.

use serde::Serialize;

use crate::catalog;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Known discrepancy or observation; never fails a run.
    Informational,
}

/// One verified (or refuted) statement.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub paper_ref: String,
    pub status: Status,
    /// Printed residual for failures and informational entries.
    pub residual: Option<String>,
    pub detail: Option<String>,
}

impl Check {
    pub fn new(id: &str, status: Status) -> Self {
        Check {
            id: id.to_string(),
            paper_ref: catalog::paper_ref(id).unwrap_or("unmapped").to_string(),
            status,
            residual: None,
            detail: None,
        }
    }

    /// Pass iff `ok`; the residual is recorded only on failure.
    pub fn from_outcome(id: &str, ok: bool, residual: impl FnOnce() -> String) -> Self {
        let mut c = Check::new(id, if ok { Status::Pass } else { Status::Fail });
        if !ok {
            c.residual = Some(residual());
        }
        c
    }

    pub fn informational(id: &str, residual: Option<String>, detail: impl Into<String>) -> Self {
        let mut c = Check::new(id, Status::Informational);
        c.residual = residual;
        c.detail = Some(detail.into());
        c
    }

    pub fn fail(id: &str, detail: impl Into<String>) -> Self {
        let mut c = Check::new(id, Status::Fail);
        c.detail = Some(detail.into());
        c
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_residual(mut self, residual: impl Into<String>) -> Self {
        self.residual = Some(residual.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub informational: usize,
}

/// Ordered list of checks. Order is insertion order, never scheduling order.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub checks: Vec<Check>,
}

/// Row of the identity-suite JSON array.
#[derive(Serialize)]
struct IdentityRow<'a> {
    identity_id: &'a str,
    paper_ref: &'a str,
    status: Status,
    residual: Option<&'a str>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Informational => s.informational += 1,
            }
        }
        s
    }

    /// `true` when nothing failed; informational entries are ignored.
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// `[{identity_id, paper_ref, status, residual}]`.
    pub fn to_identity_json(&self) -> serde_json::Value {
        let rows: Vec<IdentityRow> = self
            .checks
            .iter()
            .map(|c| IdentityRow {
                identity_id: &c.id,
                paper_ref: &c.paper_ref,
                status: c.status,
                residual: c.residual.as_deref(),
            })
            .collect();
        serde_json::to_value(rows).expect("identity rows serialize")
    }
}

impl FromIterator<Check> for Report {
    fn from_iter<I: IntoIterator<Item = Check>>(it: I) -> Self {
        Report {
            checks: it.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn informational_does_not_fail() {
        let r: Report = [
            Check::new("susy.td.anticomm_qdag_q", Status::Pass),
            Check::informational("superosc.sp.adaga_general.literal", None, "x"),
        ]
        .into_iter()
        .collect();
        assert!(r.ok());
        assert_eq!(
            r.summary(),
            Summary {
                passed: 1,
                failed: 0,
                informational: 1
            }
        );
    }

    #[test]
    fn residual_only_on_failure() {
        let c = Check::from_outcome("susy.td.anticomm_qdag_q", true, || unreachable!());
        assert!(c.residual.is_none());
        let c = Check::from_outcome("susy.td.anticomm_qdag_q", false, || "X".into());
        assert_eq!(c.residual.as_deref(), Some("X"));
    }
}
