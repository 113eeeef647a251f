//! Front end for skewcat: fixture documents, suite orchestration, JSON
//! reports and witness replay.

pub mod demos;
pub mod fixture;
pub mod report;
pub mod suites;

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use rayon::prelude::*;
use skewcat::cat::{replay, run, Replay};
use skewcat::limits::{self, Caps};

pub use fixture::FixtureDoc;
pub use report::{ReplayDoc, ReportDoc, SuiteReport, Summary, WitnessRef};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const CAP_ENV: &str = "SKEWCAT_CAP_OVERRIDE";

#[derive(Debug, Clone, Default)]
pub struct CheckOptions {
    /// Restrict to these suites; empty means the fixture's own list.
    pub suites: Vec<String>,
    pub jobs: Option<usize>,
    pub seed: Option<u64>,
}

/// Raise the caps to the fixture's values and to the environment override.
pub fn apply_caps(fx: &FixtureDoc) -> Result<()> {
    limits::raise(fx.caps());
    if let Ok(v) = std::env::var(CAP_ENV) {
        let n: usize = v.trim().parse().with_context(|| format!("{CAP_ENV} must be a non-negative integer, got {v:?}"))?;
        limits::raise(Caps {
            max_set: n,
            max_dim: n,
            max_hom: n,
        });
    }
    Ok(())
}

fn selected(fx: &FixtureDoc, opts: &CheckOptions) -> Result<Vec<String>> {
    if opts.suites.is_empty() {
        return Ok(fx.suites.clone());
    }
    for s in &opts.suites {
        if !fixture::SUITES.contains(&s.as_str()) {
            return Err(anyhow!("unknown suite {s:?}"));
        }
    }
    let mut probe = fx.clone();
    probe.suites = opts.suites.clone();
    probe.validate()?;
    Ok(opts.suites.clone())
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build()?;
            Ok(pool.install(f))
        }
    }
}

/// Run the selected suites and assemble the report.
pub fn check(fx: &FixtureDoc, opts: &CheckOptions) -> Result<ReportDoc> {
    apply_caps(fx)?;
    let suites = selected(fx, opts)?;
    let seed = opts.seed.unwrap_or(fx.seed());
    let start = Instant::now();
    let reports = in_pool(opts.jobs, || -> Result<Vec<SuiteReport>> {
        suites
            .iter()
            .map(|name| {
                suites::with_suite(fx, name, seed, |sc| {
                    let checks = sc.checks.par_iter().map(run).collect();
                    SuiteReport {
                        suite: name.clone(),
                        checks,
                        scan: sc.scan.map(|f| f()),
                    }
                })
            })
            .collect()
    })??;
    let summary = Summary::tally(reports.iter().flat_map(|s| s.checks.iter()));
    Ok(ReportDoc {
        fixture: fx.name.clone(),
        suites: reports,
        summary,
        environment: report::Environment {
            version: VERSION.to_string(),
            seed,
            wall_ms: start.elapsed().as_millis() as u64,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayLine {
    pub check: String,
    pub case: String,
    pub result: Replay,
}

impl ReplayLine {
    pub fn reproduced(&self) -> bool {
        self.result == Replay::Reproduced
    }
}

/// Re-run each witness against the same check built from `fx`.
pub fn replay_witnesses(fx: &FixtureDoc, opts: &CheckOptions, ws: &[WitnessRef]) -> Result<Vec<ReplayLine>> {
    apply_caps(fx)?;
    let suites = selected(fx, opts)?;
    let seed = opts.seed.unwrap_or(fx.seed());
    let mut out: Vec<Option<ReplayLine>> = vec![None; ws.len()];
    for name in &suites {
        suites::with_suite(fx, name, seed, |sc| {
            for (w, slot) in ws.iter().zip(out.iter_mut()) {
                if slot.is_some() {
                    continue;
                }
                if let Some(c) = sc.checks.iter().find(|c| c.id == w.check) {
                    *slot = Some(ReplayLine {
                        check: w.check.clone(),
                        case: w.witness.case.clone(),
                        result: replay(c, &w.witness),
                    });
                }
            }
        })?;
    }
    Ok(out
        .into_iter()
        .zip(ws)
        .map(|(l, w)| {
            l.unwrap_or(ReplayLine {
                check: w.check.clone(),
                case: w.witness.case.clone(),
                result: Replay::UnknownCase,
            })
        })
        .collect())
}

pub fn load_replay(path: &Path) -> Result<Vec<WitnessRef>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let doc: ReplayDoc = serde_json::from_str(&text).with_context(|| format!("{} is not a report or witness document", path.display()))?;
    Ok(doc.witnesses())
}

/// Write the named demo fixture into `dir`, returning its path.
pub fn materialize(name: &str, dir: &Path) -> Result<PathBuf> {
    let text = demos::fixture(name).ok_or_else(|| anyhow!("unknown demo {name:?} (known: {})", demos::names().join(", ")))?;
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(path)
}
