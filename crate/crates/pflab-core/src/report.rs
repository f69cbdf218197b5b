//! Check records, suite reports, and errata entries.
//!
//! Every verification routine appends [`CheckRecord`]s to a [`SuiteReport`].
//! Records are kept in insertion order, which is deterministic because all
//! enumeration inside the suites walks ordered collections. A record never
//! carries floating-point data: witnesses are exact strings.

use alloc::string::String;
use alloc::vec::Vec;

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Identity held exactly.
    Pass,
    /// Identity held exactly, but only after fitting a pinned constant;
    /// the fitted value is reported in the suite errata.
    PassPinned,
    /// Identity failed; the witness holds the first counterexample.
    Fail,
    /// Check could not run because a denominator vanished at this weight;
    /// not a failure, but reported so skips are visible.
    SkippedSingular,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::PassPinned => "pass-pinned",
            Status::Fail => "FAIL",
            Status::SkippedSingular => "skipped-singular",
        }
    }

    pub fn is_failure(self) -> bool {
        matches!(self, Status::Fail)
    }
}

/// One verified (or failed) identity instance.
#[derive(Clone, Debug)]
pub struct CheckRecord {
    /// Stable machine id, e.g. `pf.commutator.case2`.
    pub id: String,
    /// Human-readable statement of what was checked.
    pub anchor: String,
    /// Instance parameters, e.g. `N=5 I={-2,-1,1,2} j1=1 j2=2`.
    pub params: String,
    pub status: Status,
    /// For failures: the exact counterexample. For pinned passes: the
    /// fitted constant. Empty otherwise.
    pub witness: String,
}

/// A pinned constant or observed discrepancy, reported rather than silently
/// absorbed.
#[derive(Clone, Debug)]
pub struct ErrataEntry {
    /// Stable machine id, e.g. `pin.hc-shift`.
    pub id: String,
    /// What was ambiguous or wrong, and what value was adopted.
    pub note: String,
}

/// All records produced by one verification suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub errata: Vec<ErrataEntry>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport {
            suite: String::from(suite),
            records: Vec::new(),
            errata: Vec::new(),
        }
    }

    pub fn push(&mut self, id: &str, anchor: &str, params: &str, status: Status, witness: &str) {
        self.records.push(CheckRecord {
            id: String::from(id),
            anchor: String::from(anchor),
            params: String::from(params),
            status,
            witness: String::from(witness),
        });
    }

    pub fn push_erratum(&mut self, id: &str, note: &str) {
        self.errata.push(ErrataEntry {
            id: String::from(id),
            note: String::from(note),
        });
    }

    /// Convenience for boolean checks with no special witness.
    pub fn push_bool(&mut self, id: &str, anchor: &str, params: &str, ok: bool, witness: &str) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(id, anchor, params, status, if ok { "" } else { witness });
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn passed(&self) -> usize {
        self.count(Status::Pass) + self.count(Status::PassPinned)
    }

    pub fn failed(&self) -> usize {
        self.count(Status::Fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(Status::SkippedSingular)
    }

    pub fn all_green(&self) -> bool {
        self.failed() == 0
    }

    /// Merge another suite's records and errata into this one.
    pub fn absorb(&mut self, other: SuiteReport) {
        self.records.extend(other.records);
        self.errata.extend(other.errata);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting() {
        let mut r = SuiteReport::new("demo");
        r.push("a", "x", "", Status::Pass, "");
        r.push("b", "x", "", Status::Fail, "bad");
        r.push("c", "x", "", Status::SkippedSingular, "");
        assert_eq!(r.passed(), 1);
        assert_eq!(r.failed(), 1);
        assert_eq!(r.skipped(), 1);
        assert!(!r.all_green());
    }
}
