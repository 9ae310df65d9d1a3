//! Structured verification results.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// One checked identity instance. `pass` is computed from an exact
/// comparison of the two sides, never from their renderings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub parameters: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl VerificationReport {
    pub fn compare<T: PartialEq + fmt::Display>(
        identity: &str,
        parameters: &[(&str, String)],
        lhs: &T,
        rhs: &T,
    ) -> Self {
        Self::compare_with(identity, parameters, lhs, rhs, |v| v.to_string())
    }

    pub fn compare_with<T: PartialEq>(
        identity: &str,
        parameters: &[(&str, String)],
        lhs: &T,
        rhs: &T,
        render: impl Fn(&T) -> String,
    ) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            parameters: parameters.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            lhs: render(lhs),
            rhs: render(rhs),
            pass: lhs == rhs,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let (tag, rel) = if self.pass { ("PASS", "=") } else { ("FAIL", "!=") };
        write!(f, "{tag} {} [{params}]: {} {rel} {}", self.identity, self.lhs, self.rhs)
    }
}

pub fn all_pass<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> bool {
    reports.into_iter().all(|r| r.pass)
}

/// Serializes any integer-like value as its decimal string, so JSON
/// consumers limited to 64-bit numbers never see lossy values.
pub(crate) fn decimal<T: fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}
