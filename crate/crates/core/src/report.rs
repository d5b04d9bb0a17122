//! Named pass/fail outcomes shared by the verification routines.

use alloc::string::{String, ToString};
use core::fmt::Display;

/// One verified identity with the values that were compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// The identity being tested, in words.
    pub identity: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Check {
    /// Passes when `expected == got`.
    pub fn equal<T: PartialEq + Display + ?Sized>(
        name: impl Into<String>,
        identity: impl Into<String>,
        expected: &T,
        got: &T,
    ) -> Self {
        Self {
            name: name.into(),
            identity: identity.into(),
            expected: expected.to_string(),
            got: got.to_string(),
            pass: expected == got,
        }
    }

    pub fn holds(
        name: impl Into<String>,
        identity: impl Into<String>,
        pass: bool,
        expected: impl Into<String>,
        got: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            identity: identity.into(),
            expected: expected.into(),
            got: got.into(),
            pass,
        }
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}
