//! Exact search under a wall-clock budget, spread over threads.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use mutvis_core::solver::{
    canonical_witness, mu_decision_with, Decision, ExactSearch, Interrupt, Method, SearchStats,
    SolveResult, SolverError,
};
use mutvis_core::{Graph, PointSet};

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "MV_THREADS";

/// `MV_THREADS` if set to a positive integer, else the machine width.
pub fn default_threads() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&t: &usize| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Return the lexicographically least maximum set.
    pub canonical: bool,
    pub budget: Option<Duration>,
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            canonical: false,
            budget: None,
            threads: default_threads(),
        }
    }
}

/// Fires once the deadline passes; the clock is read every 64 polls.
pub struct Deadline {
    end: Option<Instant>,
    polls: AtomicU64,
    fired: AtomicBool,
}

impl Deadline {
    pub fn new(budget: Option<Duration>) -> Self {
        Deadline {
            end: budget.map(|b| Instant::now() + b),
            polls: AtomicU64::new(0),
            fired: AtomicBool::new(false),
        }
    }

    pub fn fired(&self) -> bool {
        self.fired.load(Ordering::Relaxed)
    }
}

impl Interrupt for Deadline {
    fn should_stop(&self) -> bool {
        let Some(end) = self.end else {
            return false;
        };
        if self.fired.load(Ordering::Relaxed) {
            return true;
        }
        if self.polls.fetch_add(1, Ordering::Relaxed) % 64 == 0 && Instant::now() >= end {
            self.fired.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub result: SolveResult,
    /// The witness is the lexicographically least maximum set.
    pub canonical: bool,
    pub threads: usize,
}

/// `μ(G)` with a witness. When the budget runs out the result has
/// `optimal == false` and `mu` is only a lower bound.
pub fn solve(g: &Graph, opts: &SolveOptions) -> Result<Solution, SolverError> {
    let start = Instant::now();
    let deadline = Deadline::new(opts.budget);
    let threads = opts.threads.max(1);
    let search = ExactSearch::new(g)?;
    let best = AtomicUsize::new(search.lower_bound().len());
    let witness = Mutex::new(search.lower_bound().clone());
    let nodes = AtomicU64::new(0);

    let offer = |found: Option<PointSet>| {
        if let Some(set) = found {
            let mut w = witness.lock().expect("witness lock");
            if set.len() > w.len() {
                *w = set;
            }
        }
    };

    for part in 0..search.part_count() {
        if deadline.fired() || search.part_size(part) <= best.load(Ordering::Relaxed) {
            continue;
        }
        let want = if threads > 1 { threads * 8 } else { 1 };
        let (tasks, progress) = search.tasks(part, &best, want, &deadline);
        nodes.fetch_add(progress.nodes, Ordering::Relaxed);
        offer(progress.found);
        let next = AtomicUsize::new(0);
        std::thread::scope(|s| {
            for _ in 0..threads.min(tasks.len()) {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(task) = tasks.get(i) else { break };
                    let pr = search.run(task, &best, &deadline);
                    nodes.fetch_add(pr.nodes, Ordering::Relaxed);
                    offer(pr.found);
                    if pr.stopped {
                        break;
                    }
                });
            }
        });
    }

    let witness = witness.into_inner().expect("witness lock");
    let mut result = SolveResult {
        mu: witness.len(),
        witness,
        method: Method::BranchBound,
        optimal: !deadline.fired(),
        stats: SearchStats {
            nodes: nodes.into_inner(),
            elapsed: None,
        },
    };
    let mut canonical = false;
    if opts.canonical && result.optimal {
        if let Some((w, extra)) = canonical_witness(g, result.mu, &deadline)? {
            result.witness = w;
            result.stats.nodes += extra;
            canonical = true;
        }
    }
    result.stats.elapsed = Some(start.elapsed());
    Ok(Solution {
        result,
        canonical,
        threads,
    })
}

/// Whether a set of at least `k` points exists, within the budget.
pub fn decide(g: &Graph, k: usize, budget: Option<Duration>) -> Result<Decision, SolverError> {
    mu_decision_with(g, k, &Deadline::new(budget))
}
