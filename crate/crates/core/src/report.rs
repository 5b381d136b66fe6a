//! Structured pass/fail records for identity checks.
//!
//! Reports serialize to one JSON object per line with the fixed key order
//! `identity, params, lhs, rhs, pass, count, ms`. All numeric values are
//! decimal strings so that exact equality survives serialization, and
//! histograms are ordered maps, so identical checks produce identical
//! bytes apart from the timing field.

use std::collections::BTreeMap;
use std::time::Duration;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Either a single exact integer or a histogram of exact integers, stored
/// as canonical decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportValue {
    Int(String),
    Histogram(BTreeMap<String, String>),
}

impl ReportValue {
    pub fn int(value: &BigInt) -> Self {
        ReportValue::Int(value.to_string())
    }

    pub fn count(value: u64) -> Self {
        ReportValue::Int(value.to_string())
    }

    pub fn histogram<K, V>(entries: impl IntoIterator<Item = (K, V)>) -> Self
    where
        K: ToString,
        V: ToString,
    {
        ReportValue::Histogram(
            entries
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        )
    }
}

/// Outcome of one named identity check: an exact left-hand side, an exact
/// right-hand side, and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub pass: bool,
    /// How many objects the enumeration side visited.
    pub count: u64,
    pub ms: u128,
}

impl VerificationReport {
    pub fn new(
        identity: impl Into<String>,
        params: BTreeMap<String, String>,
        lhs: ReportValue,
        rhs: ReportValue,
        count: u64,
        elapsed: Duration,
    ) -> Self {
        let pass = lhs == rhs;
        Self {
            identity: identity.into(),
            params,
            lhs,
            rhs,
            pass,
            count,
            ms: elapsed.as_millis(),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn from_json_line(line: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(line)
    }

    /// Serialization with the timing zeroed; identical inputs must produce
    /// byte-identical stable JSON.
    pub fn stable_json(&self) -> String {
        let mut clone = self.clone();
        clone.ms = 0;
        clone.to_json_line()
    }
}

/// Builds a params map from string pairs.
pub fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_is_recomputable_from_serialized_sides() {
        let report = VerificationReport::new(
            "demo",
            params(&[("n", "3".to_string())]),
            ReportValue::count(4),
            ReportValue::count(4),
            4,
            Duration::from_millis(7),
        );
        let line = report.to_json_line();
        let parsed = VerificationReport::from_json_line(&line).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(parsed.pass, parsed.lhs == parsed.rhs);

        let hist = VerificationReport::new(
            "demo_hist",
            BTreeMap::new(),
            ReportValue::histogram([("1,2", 5), ("", 0)]),
            ReportValue::histogram([("", 0), ("1,2", 6)]),
            11,
            Duration::from_millis(1),
        );
        assert!(!hist.pass);
        let parsed = VerificationReport::from_json_line(&hist.to_json_line()).unwrap();
        assert_eq!(parsed.pass, parsed.lhs == parsed.rhs);
    }

    #[test]
    fn key_order_is_fixed() {
        let report = VerificationReport::new(
            "demo",
            BTreeMap::new(),
            ReportValue::count(1),
            ReportValue::count(1),
            1,
            Duration::ZERO,
        );
        let line = report.to_json_line();
        let identity_pos = line.find("\"identity\"").unwrap();
        let params_pos = line.find("\"params\"").unwrap();
        let lhs_pos = line.find("\"lhs\"").unwrap();
        let pass_pos = line.find("\"pass\"").unwrap();
        let ms_pos = line.find("\"ms\"").unwrap();
        assert!(identity_pos < params_pos && params_pos < lhs_pos);
        assert!(lhs_pos < pass_pos && pass_pos < ms_pos);
    }
}
