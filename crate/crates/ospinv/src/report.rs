//! Deterministic machine-readable verification reports.
//!
//! A [`SuiteReport`] is a named list of [`CheckResult`]s plus the suite's
//! own parameters.  Serialization is byte-identical for identical inputs
//! regardless of how many worker threads produced the checks: checks are
//! sorted by `(name, params)` before rendering, maps are ordered, and the
//! elapsed-time field participates only when the `OSPINV_TIMINGS`
//! environment variable is set to `1`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// Outcome of one check.  `Skip` marks a parameter combination where the
/// statement is vacuous or out of range; it never fails a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

/// One named check at one parameter point.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckResult {
    pub fn new(
        name: &str,
        params: BTreeMap<String, String>,
        status: CheckStatus,
        detail: impl Into<String>,
    ) -> Self {
        CheckResult {
            name: name.to_string(),
            params,
            status,
            detail: detail.into(),
        }
    }

    /// Pass/fail from a boolean.
    pub fn verdict(
        name: &str,
        params: BTreeMap<String, String>,
        ok: bool,
        detail: impl Into<String>,
    ) -> Self {
        let status = if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        CheckResult::new(name, params, status, detail)
    }

    pub fn skip(name: &str, params: BTreeMap<String, String>, detail: impl Into<String>) -> Self {
        CheckResult::new(name, params, CheckStatus::Skip, detail)
    }
}

/// Convenience constructor for ordered parameter maps.
pub fn param_map<I, K, V>(pairs: I) -> BTreeMap<String, String>
where
    I: IntoIterator<Item = (K, V)>,
    K: Into<String>,
    V: ToString,
{
    pairs
        .into_iter()
        .map(|(k, v)| (k.into(), v.to_string()))
        .collect()
}

/// Output format for rendered reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

/// A full suite run: versioned schema, suite name, suite-level
/// parameters, sorted checks, and elapsed wall time (0 unless timings
/// are explicitly enabled, to keep output reproducible).
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn new(suite: &str, params: BTreeMap<String, String>) -> Self {
        SuiteReport {
            schema: 1,
            suite: suite.to_string(),
            params,
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend<I: IntoIterator<Item = CheckResult>>(&mut self, checks: I) {
        self.checks.extend(checks);
    }

    /// Fix the aggregation order: by name, then by parameter map.
    pub fn finalize(&mut self) {
        self.checks
            .sort_by(|a, b| (&a.name, &a.params).cmp(&(&b.name, &b.params)));
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for check in &self.checks {
            match check.status {
                CheckStatus::Pass => c.0 += 1,
                CheckStatus::Fail => c.1 += 1,
                CheckStatus::Skip => c.2 += 1,
            }
        }
        c
    }

    /// Record elapsed time, honored only when `OSPINV_TIMINGS=1` so that
    /// default reports are byte-identical across runs.
    pub fn set_elapsed(&mut self, ms: u64) {
        if std::env::var("OSPINV_TIMINGS").as_deref() == Ok("1") {
            self.elapsed_ms = ms;
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}", self.suite);
        if !self.params.is_empty() {
            let ps: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            let _ = writeln!(out, "params: {}", ps.join(" "));
        }
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skip => "skip",
            };
            let ps: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let loc = if ps.is_empty() {
                String::new()
            } else {
                format!(" ({})", ps.join(", "))
            };
            let detail = if c.detail.is_empty() {
                String::new()
            } else {
                format!(": {}", c.detail)
            };
            let _ = writeln!(out, "[{tag}] {}{loc}{detail}", c.name);
        }
        let (p, f, s) = self.counts();
        let _ = writeln!(out, "summary: {p} passed, {f} failed, {s} skipped");
        if self.elapsed_ms > 0 {
            let _ = writeln!(out, "elapsed_ms: {}", self.elapsed_ms);
        }
        out
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => self.to_json(),
            ReportFormat::Text => self.to_text(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SuiteReport {
        let mut r = SuiteReport::new("sample", param_map([("m", 1), ("n", 1)]));
        r.push(CheckResult::verdict(
            "zeta",
            param_map([("k", 2)]),
            true,
            "both sides equal",
        ));
        r.push(CheckResult::verdict(
            "alpha",
            param_map([("k", 1)]),
            true,
            "",
        ));
        r.push(CheckResult::skip(
            "omega",
            param_map([("k", 3)]),
            "out of range",
        ));
        r.finalize();
        r
    }

    #[test]
    fn checks_are_sorted_and_counted() {
        let r = sample();
        assert_eq!(r.checks[0].name, "alpha");
        assert_eq!(r.checks[2].name, "zeta");
        assert_eq!(r.counts(), (2, 0, 1));
        assert!(r.all_pass());
    }

    #[test]
    fn skip_does_not_fail_but_fail_does() {
        let mut r = sample();
        assert!(r.all_pass());
        r.push(CheckResult::verdict(
            "beta",
            param_map([("k", 1)]),
            false,
            "off by sign",
        ));
        assert!(!r.all_pass());
    }

    #[test]
    fn json_has_versioned_schema_and_stable_order() {
        let r = sample();
        let j = r.to_json();
        assert!(j.contains("\"schema\": 1"));
        let a = serde_json::from_str::<serde_json::Value>(&j).unwrap();
        assert_eq!(a["checks"][0]["name"], "alpha");
        assert_eq!(a["checks"][0]["status"], "pass");
        // two renders agree byte for byte
        assert_eq!(j, sample().to_json());
    }

    #[test]
    fn text_rendering_lists_every_check() {
        let t = sample().to_text();
        assert!(t.contains("[pass] alpha (k=1)"));
        assert!(t.contains("[skip] omega (k=3): out of range"));
        assert!(t.contains("summary: 2 passed, 0 failed, 1 skipped"));
    }

    #[test]
    fn elapsed_is_suppressed_without_the_env_flag() {
        // The suite does not set OSPINV_TIMINGS, so elapsed stays 0.
        let mut r = sample();
        r.set_elapsed(1234);
        assert_eq!(r.elapsed_ms, 0);
    }
}
