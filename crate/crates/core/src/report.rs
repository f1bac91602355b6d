//! Uniform pass/fail records for every verification routine.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The data agree with an unproven statement; not a verification.
    ConjectureConsistent,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_discrepancy: Option<String>,
}

impl CheckReport {
    pub fn pass(check: impl Into<String>, params: Value) -> Self {
        CheckReport { check: check.into(), params, status: Status::Pass, first_discrepancy: None }
    }

    pub fn fail(check: impl Into<String>, params: Value, why: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            params,
            status: Status::Fail,
            first_discrepancy: Some(why.into()),
        }
    }

    /// Pass when `discrepancy` is `None`, fail with it otherwise.
    pub fn from_outcome(check: impl Into<String>, params: Value, discrepancy: Option<String>) -> Self {
        match discrepancy {
            None => Self::pass(check, params),
            Some(d) => Self::fail(check, params, d),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Collects the first failure message while checking many cases.
#[derive(Default)]
pub struct FirstFailure(Option<String>);

impl FirstFailure {
    pub fn new() -> Self {
        FirstFailure(None)
    }

    /// Records `msg()` if `ok` is false and nothing was recorded yet.
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok && self.0.is_none() {
            self.0 = Some(msg());
        }
    }

    pub fn record(&mut self, msg: String) {
        if self.0.is_none() {
            self.0 = Some(msg);
        }
    }

    pub fn into_inner(self) -> Option<String> {
        self.0
    }
}
