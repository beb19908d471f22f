//! Pass/fail lines shared by the checklists and the regression corpus.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    /// Passes when `actual == expected`; the detail shows both on failure.
    pub fn equal<T: PartialEq + std::fmt::Display>(name: impl Into<String>, actual: T, expected: T) -> Self {
        let passed = actual == expected;
        let detail = if passed { actual.to_string() } else { format!("got {actual}, expected {expected}") };
        Check::new(name, passed, detail)
    }
}
