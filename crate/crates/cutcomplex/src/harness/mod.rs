//! Theorem-by-theorem verification suites, conjecture sweeps, and the
//! Betti-table emitter.
//!
//! Every suite compares closed-form predictions coded straight from the
//! statements being checked against values computed by the engine; no
//! expected value is ever read back from the engine itself. Cases that
//! would blow a resource cap are recorded as skipped and the suite keeps
//! going.

pub mod corpus;
mod suites;
mod sweep;
mod table;

pub use sweep::{sweep_conjecture, ConjectureRow};
pub use table::{emit_table, BettiTable, TableFamily};

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::ExecMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub params: String,
    pub expected: String,
    pub actual: String,
    pub status: CaseStatus,
}

impl CaseResult {
    /// Pass exactly when the two sides are equal as strings (all suite
    /// quantities are integers rendered canonically).
    pub fn check(params: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        let (expected, actual) = (expected.into(), actual.into());
        let status = if expected == actual { CaseStatus::Pass } else { CaseStatus::Fail };
        CaseResult { params: params.into(), expected, actual, status }
    }

    pub fn skip(params: impl Into<String>, reason: impl Into<String>) -> Self {
        CaseResult {
            params: params.into(),
            expected: String::new(),
            actual: reason.into(),
            status: CaseStatus::Skip,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SuiteResult {
    pub suite_id: String,
    pub cases: Vec<CaseResult>,
    /// Wall-clock milliseconds; excluded from the canonical serialization
    /// so reruns serialize identically.
    #[serde(skip)]
    pub runtime_ms: u64,
}

impl SuiteResult {
    /// (passed, failed, skipped)
    pub fn tally(&self) -> (usize, usize, usize) {
        let mut t = (0, 0, 0);
        for c in &self.cases {
            match c.status {
                CaseStatus::Pass => t.0 += 1,
                CaseStatus::Fail => t.1 += 1,
                CaseStatus::Skip => t.2 += 1,
            }
        }
        t
    }

    pub fn passed(&self) -> bool {
        self.tally().1 == 0
    }

    pub fn all_skipped(&self) -> bool {
        let (p, f, s) = self.tally();
        p == 0 && f == 0 && s > 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| c.status == CaseStatus::Fail)
    }
}

/// Parameter ranges for a suite run; unset fields fall back to the suite's
/// defaults. Parsed from strings like `n=2..6,k=2..5,count=30,seed=7`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Ranges {
    pub n: Option<(usize, usize)>,
    pub k: Option<(usize, usize)>,
    pub m: Option<(usize, usize)>,
    pub count: Option<usize>,
    pub seed: Option<u64>,
}

impl Ranges {
    pub fn parse(s: &str) -> Result<Ranges> {
        let mut r = Ranges::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("range `{part}` wants key=value")))?;
            let parse_span = |v: &str| -> Result<(usize, usize)> {
                if let Some((lo, hi)) = v.split_once("..") {
                    let lo = lo.trim().parse().map_err(|_| Error::Parse(format!("bad range `{v}`")))?;
                    let hi = hi.trim().parse().map_err(|_| Error::Parse(format!("bad range `{v}`")))?;
                    Ok((lo, hi))
                } else {
                    let x = v.trim().parse().map_err(|_| Error::Parse(format!("bad range `{v}`")))?;
                    Ok((x, x))
                }
            };
            match key.trim() {
                "n" => r.n = Some(parse_span(val)?),
                "k" => r.k = Some(parse_span(val)?),
                "m" => r.m = Some(parse_span(val)?),
                "count" => {
                    r.count = Some(
                        val.trim().parse().map_err(|_| Error::Parse(format!("bad count `{val}`")))?,
                    )
                }
                "seed" => {
                    r.seed = Some(
                        val.trim().parse().map_err(|_| Error::Parse(format!("bad seed `{val}`")))?,
                    )
                }
                other => return Err(Error::Parse(format!("unknown range key `{other}`"))),
            }
        }
        Ok(r)
    }

    pub fn n_or(&self, lo: usize, hi: usize) -> (usize, usize) {
        self.n.unwrap_or((lo, hi))
    }
    pub fn k_or(&self, lo: usize, hi: usize) -> (usize, usize) {
        self.k.unwrap_or((lo, hi))
    }
    pub fn m_or(&self, lo: usize, hi: usize) -> (usize, usize) {
        self.m.unwrap_or((lo, hi))
    }
    pub fn count_or(&self, c: usize) -> usize {
        self.count.unwrap_or(c)
    }
    pub fn seed_or(&self, s: u64) -> u64 {
        self.seed.unwrap_or(s)
    }
}

/// Suite identifiers accepted by [`run_suite`].
pub const SUITE_IDS: &[&str] = &[
    "ridge_facet",
    "isolated_decomposition",
    "link_lemma",
    "deletion_lemma",
    "suspension",
    "les_euler",
    "nesting",
    "edgeless",
    "bipartite",
    "prism",
    "chordal",
    "trees",
    "cycles",
    "grid",
    "squared_cycle",
    "realizability",
];

pub fn run_suite(id: &str, ranges: &Ranges) -> Result<SuiteResult> {
    run_suite_with_mode(id, ranges, ExecMode::default())
}

pub fn run_suite_with_mode(id: &str, ranges: &Ranges, mode: ExecMode) -> Result<SuiteResult> {
    let start = Instant::now();
    let cases = match id {
        "ridge_facet" => suites::ridge_facet(ranges, mode),
        "isolated_decomposition" => suites::isolated_decomposition(ranges, mode),
        "link_lemma" => suites::link_lemma(ranges, mode),
        "deletion_lemma" => suites::deletion_lemma(ranges, mode),
        "suspension" => suites::suspension(ranges, mode),
        "les_euler" => suites::les_euler(ranges, mode),
        "nesting" => suites::nesting(ranges, mode),
        "edgeless" => suites::edgeless(ranges, mode),
        "bipartite" => suites::bipartite(ranges, mode),
        "prism" => suites::prism(ranges, mode),
        "chordal" => suites::chordal(ranges, mode),
        "trees" => suites::trees(ranges, mode),
        "cycles" => suites::cycles(ranges, mode),
        "grid" => suites::grid(ranges, mode),
        "squared_cycle" => suites::squared_cycle(ranges, mode),
        "realizability" => suites::realizability(ranges, mode),
        other => return Err(Error::UnknownSuite(other.to_string())),
    }?;
    Ok(SuiteResult {
        suite_id: id.to_string(),
        cases,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}
