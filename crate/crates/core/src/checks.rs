//! Named pass/fail results shared by the verification suites.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    /// Passes when `actual == expected`, recording both in the detail.
    pub fn expect<T: PartialEq + std::fmt::Debug>(name: impl Into<String>, actual: T, expected: T) -> Self {
        let passed = actual == expected;
        Check::new(name, passed, format!("got {actual:?}, expected {expected:?}"))
    }
}

/// The symbolic identities, their negative controls and the elliptic suite.
pub fn paper_suite() -> Vec<Check> {
    let mut out = crate::symbolic::fixture::run_all();
    out.extend(crate::elliptic::corspin_suite());
    out
}
