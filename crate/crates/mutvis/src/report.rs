//! Machine-readable output. Every command that takes `--json` prints one
//! object with the same five keys:
//!
//! ```text
//! {
//!   "verdict": string,            // command-specific, see below
//!   "mu":      integer | null,    // size of the reported set, if any
//!   "witness": [integer] | null,  // ascending vertex ids
//!   "stats":   { "nodes": integer | null, "elapsed_ms": number | null,
//!                "method": string | null, "threads": integer | null },
//!   "flags":   [string]           // e.g. "lower-bound-only"
//! }
//! ```
//!
//! Verdicts: `verify` gives `visible`, `blocked` or `components` (the
//! witness is then the offending pair); `solve` gives `optimal` or
//! `lower-bound`; `solve --decide` gives `yes`, `no` or `unknown`; `mu`
//! gives the class tag.

use serde::Serialize;

use mutvis_core::PointSet;

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Stats {
    pub nodes: Option<u64>,
    pub elapsed_ms: Option<f64>,
    pub method: Option<String>,
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub verdict: String,
    pub mu: Option<usize>,
    pub witness: Option<Vec<usize>>,
    pub stats: Stats,
    pub flags: Vec<String>,
}

impl Report {
    pub fn new(verdict: impl Into<String>) -> Self {
        Report {
            verdict: verdict.into(),
            mu: None,
            witness: None,
            stats: Stats::default(),
            flags: Vec::new(),
        }
    }

    pub fn with_set(mut self, p: &PointSet) -> Self {
        self.mu = Some(p.len());
        self.witness = Some(p.to_vec());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
