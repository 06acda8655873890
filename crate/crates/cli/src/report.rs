//! Structured run reports. The JSON schema is fixed: top-level fields
//! `scenario`, `params`, `checks[] {name, status, details}`, `seed`,
//! `elapsed_ms`. Identical inputs and seed produce identical reports
//! except for the elapsed time.

use std::collections::BTreeMap;
use std::fmt;

use cauchy_core::rational::Rat;
use num_bigint::BigInt;
use serde::Serialize;

/// Six-digit decimal approximation of a rational, for report details.
/// Integer arithmetic only; the exact value stays in the computation.
pub fn approx_decimal(r: &Rat) -> String {
    let scale = BigInt::from(1_000_000);
    let scaled = (r.numer() * &scale) / r.denom();
    let sign = if scaled < BigInt::from(0) { "-" } else { "" };
    let magnitude = if scaled < BigInt::from(0) { -scaled } else { scaled };
    let whole = &magnitude / &scale;
    let frac = &magnitude % &scale;
    format!("{sign}{whole}.{frac:06}")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Fuel or depth exhaustion: an honest non-answer, not a failure.
    Inconclusive,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: String,
    pub details: String,
}

impl Check {
    pub fn new(name: &str, status: CheckStatus, details: impl Into<String>) -> Check {
        Check {
            name: name.to_string(),
            status: status.to_string(),
            details: details.into(),
        }
    }

    pub fn pass(name: &str, details: impl Into<String>) -> Check {
        Check::new(name, CheckStatus::Pass, details)
    }

    pub fn fail(name: &str, details: impl Into<String>) -> Check {
        Check::new(name, CheckStatus::Fail, details)
    }

    pub fn inconclusive(name: &str, details: impl Into<String>) -> Check {
        Check::new(name, CheckStatus::Inconclusive, details)
    }

    pub fn of(name: &str, ok: bool, details: impl Into<String>) -> Check {
        if ok {
            Check::pass(name, details)
        } else {
            Check::fail(name, details)
        }
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail.to_string()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub scenario: String,
    /// Which theorem row and column this scenario instantiates.
    pub traceability: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub seed: u64,
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| c.failed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("scenario: {}\n", self.scenario));
        out.push_str(&format!("row: {}\n", self.traceability));
        for (key, value) in &self.params {
            out.push_str(&format!("param {key} = {value}\n"));
        }
        out.push_str(&format!("seed: {}\n", self.seed));
        for check in &self.checks {
            out.push_str(&format!(
                "check {}: {} - {}\n",
                check.name, check.status, check.details
            ));
        }
        out.push_str(&format!("elapsed_ms: {}\n", self.elapsed_ms));
        out
    }

    /// The report with the time field cleared, for determinism diffing.
    pub fn timeless(&self) -> RunReport {
        let mut clone = self.clone();
        clone.elapsed_ms = 0;
        clone
    }
}
