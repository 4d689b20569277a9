//! Structured verification reports.
//!
//! Every verification returns an [`EnumReport`]. Serialization is stable:
//! maps are ordered and witnesses are canonical basis matrices, so equal
//! configurations give byte-identical JSON apart from `wall_time_ms`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactlin::Subspace;

/// Enumeration limit on the estimated number of candidate states.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Refuses an enumeration whose estimate exceeds `budget`.
pub fn check_budget(estimate: u128, budget: u128) -> crate::Result<()> {
    if estimate > budget {
        Err(crate::Error::BudgetExceeded { estimate, budget })
    } else {
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReportConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perm: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A failing (or illustrative) point, as canonical basis matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: String,
    pub spaces: Vec<Vec<Vec<u8>>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnumReport {
    pub command: String,
    pub config: ReportConfig,
    pub counts: BTreeMap<String, u128>,
    pub checks: Vec<Check>,
    pub witnesses: Vec<Witness>,
    /// Empirical observations that are not pass/fail criteria.
    pub observations: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl EnumReport {
    pub fn new(command: impl Into<String>, config: ReportConfig) -> Self {
        EnumReport {
            command: command.into(),
            config,
            counts: BTreeMap::new(),
            checks: Vec::new(),
            witnesses: Vec::new(),
            observations: BTreeMap::new(),
            wall_time_ms: None,
        }
    }

    pub fn count(&mut self, key: &str, value: impl Into<u128>) {
        self.counts.insert(key.to_string(), value.into());
    }

    pub fn check(&mut self, name: &str, passed: bool) -> bool {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: None,
        });
        passed
    }

    pub fn check_with(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: Some(detail.into()),
        });
        passed
    }

    pub fn observe(&mut self, key: &str, value: impl ToString) {
        self.observations.insert(key.to_string(), value.to_string());
    }

    pub fn witness(&mut self, check: &str, spaces: &[&Subspace]) {
        // Keep reports bounded; the first few witnesses are enough to debug.
        if self.witnesses.iter().filter(|w| w.check == check).count() >= 4 {
            return;
        }
        self.witnesses.push(Witness {
            check: check.to_string(),
            spaces: spaces.iter().map(|s| s.rows_vec()).collect(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }

    /// Folds another report's checks and counts into this one, prefixing
    /// keys with `prefix`.
    pub fn absorb(&mut self, prefix: &str, other: EnumReport) {
        for (k, v) in other.counts {
            self.counts.insert(format!("{prefix}.{k}"), v);
        }
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
        for mut w in other.witnesses {
            w.check = format!("{prefix}.{}", w.check);
            self.witnesses.push(w);
        }
        for (k, v) in other.observations {
            self.observations.insert(format!("{prefix}.{k}"), v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_fail_and_absorb() {
        let mut r = EnumReport::new("x", ReportConfig::default());
        r.check("a", true);
        assert!(r.passed());
        let mut other = EnumReport::new("y", ReportConfig::default());
        other.check("b", false);
        other.count("points", 3u32);
        r.absorb("sub", other);
        assert!(!r.passed());
        assert_eq!(r.failed_checks(), vec!["sub.b"]);
        assert_eq!(r.counts["sub.points"], 3);
    }

    #[test]
    fn budget_guard() {
        assert!(check_budget(10, 10).is_ok());
        assert!(matches!(
            check_budget(11, 10),
            Err(crate::Error::BudgetExceeded { estimate: 11, budget: 10 })
        ));
    }
}
