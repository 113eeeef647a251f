use serde::{Deserialize, Serialize};
use skewcat::cat::{CheckReport, Status, Witness};
use skewcat::skewmon::Scan;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDoc {
    pub fixture: String,
    pub suites: Vec<SuiteReport>,
    pub summary: Summary,
    pub environment: Environment,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scan: Option<Scan>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub cases: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Environment {
    pub version: String,
    pub seed: u64,
    pub wall_ms: u64,
}

impl Summary {
    pub fn tally<'a>(reps: impl IntoIterator<Item = &'a CheckReport>) -> Summary {
        let mut s = Summary::default();
        for r in reps {
            s.checks += 1;
            s.cases += r.cases;
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

impl ReportDoc {
    pub fn checks(&self) -> impl Iterator<Item = &CheckReport> {
        self.suites.iter().flat_map(|s| s.checks.iter())
    }

    pub fn check(&self, id: &str) -> Option<&CheckReport> {
        self.checks().find(|c| c.id == id)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.suite == name)
    }

    /// 0 when nothing failed, 1 otherwise. Skips do not count.
    pub fn exit_code(&self) -> i32 {
        if self.summary.failed > 0 {
            1
        } else {
            0
        }
    }

    /// The failing witnesses, in report order.
    pub fn witnesses(&self) -> Vec<WitnessRef> {
        self.checks()
            .filter(|c| c.failed())
            .filter_map(|c| {
                c.witness.clone().map(|w| WitnessRef {
                    check: c.id.clone(),
                    witness: w,
                })
            })
            .collect()
    }

    /// The report with timing fields zeroed, for comparing runs.
    pub fn without_timing(&self) -> ReportDoc {
        let mut r = self.clone();
        r.environment.wall_ms = 0;
        for s in &mut r.suites {
            for c in &mut s.checks {
                c.timing_ms = 0;
            }
        }
        r
    }
}

/// A witness tagged with the check it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRef {
    pub check: String,
    pub witness: Witness,
}

/// What `--replay-witness` accepts: a whole report, or one or more tagged
/// witnesses.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ReplayDoc {
    Report(Box<ReportDoc>),
    One(WitnessRef),
    Many(Vec<WitnessRef>),
}

impl ReplayDoc {
    pub fn witnesses(self) -> Vec<WitnessRef> {
        match self {
            ReplayDoc::Report(r) => r.witnesses(),
            ReplayDoc::One(w) => vec![w],
            ReplayDoc::Many(ws) => ws,
        }
    }
}
