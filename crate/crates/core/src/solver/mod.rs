//! Exact computation of the mutual-visibility number.
//!
//! Two independent routes are provided: [`mu_bruteforce`] enumerates subsets
//! largest-first and checks each with [`is_mv_set`]; [`mu_exact`] is a
//! branch-and-bound search with its own incremental bitset feasibility test.
//! Tests cross-check one against the other.

use core::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use core::time::Duration;

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::graph::{
    articulation_vertices, connected_components, convex_hull, Graph, GraphError, Vertex,
};
use crate::visibility::is_mv_set;
use crate::PointSet;

mod engine;

use engine::{Engine, Geometry, Goal, Subproblem};
pub use engine::{Interrupt, NoInterrupt, NodeLimit};

/// Default vertex limit for [`mu_bruteforce`].
pub const BRUTE_FORCE_LIMIT: usize = 20;
/// Default vertex limit for [`all_max_sets`].
pub const ENUMERATION_LIMIT: usize = 16;
/// Memory ceiling for the distance layers of one search component.
const GEOMETRY_BYTES_LIMIT: usize = 1 << 30;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolverError {
    #[error("graph has {n} vertices, above the limit of {limit} for {what}; use the branch-and-bound solver instead")]
    TooLarge {
        n: usize,
        limit: usize,
        what: &'static str,
    },
    #[error("component with {n} vertices is too large for exact search")]
    ComponentTooLarge { n: usize },
    #[error("vertex {0} is not covered by any part")]
    Uncovered(Vertex),
    #[error("threshold {k} exceeds the vertex count {n}")]
    ThresholdTooLarge { k: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    BranchBound,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::BranchBound => "branch_bound",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    /// Filled in by callers that own a clock.
    pub elapsed: Option<Duration>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub mu: usize,
    pub witness: PointSet,
    pub method: Method,
    /// `false` when the search was interrupted: `mu` is then a lower bound.
    pub optimal: bool,
    pub stats: SearchStats,
}

/// Answer to "is there a mutual-visibility set with at least `k` points?".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(PointSet),
    No,
    /// The search was interrupted before it could decide.
    Unknown,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchConfig {
    /// Return the lexicographically least maximum set.
    pub canonical: bool,
}

/// All `k`-subsets of `0..n` in lexicographic order.
struct Combinations {
    idx: Vec<usize>,
    n: usize,
    first: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            idx: (0..k).collect(),
            n,
            first: true,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(self.idx.clone());
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(self.idx.clone());
            }
        }
        None
    }
}

/// Exhaustive `μ`: tries subset sizes from `n` down and returns the first
/// mutual-visibility set found (lexicographically least of its size).
pub fn mu_bruteforce(g: &Graph) -> Result<SolveResult, SolverError> {
    mu_bruteforce_with_limit(g, BRUTE_FORCE_LIMIT)
}

pub fn mu_bruteforce_with_limit(g: &Graph, limit: usize) -> Result<SolveResult, SolverError> {
    let n = g.n();
    if n > limit {
        return Err(SolverError::TooLarge {
            n,
            limit,
            what: "subset enumeration",
        });
    }
    let mut nodes = 0;
    for k in (1..=n).rev() {
        for combo in Combinations::new(n, k) {
            nodes += 1;
            let p = PointSet::collect(n, combo);
            if is_mv_set(g, &p) {
                return Ok(SolveResult {
                    mu: k,
                    witness: p,
                    method: Method::Brute,
                    optimal: true,
                    stats: SearchStats {
                        nodes,
                        elapsed: None,
                    },
                });
            }
        }
    }
    Ok(SolveResult {
        mu: 0,
        witness: PointSet::new(n),
        method: Method::Brute,
        optimal: true,
        stats: SearchStats::default(),
    })
}

/// Every maximum mutual-visibility set, in lexicographic order.
pub fn all_max_sets(g: &Graph) -> Result<Vec<PointSet>, SolverError> {
    let n = g.n();
    if n > ENUMERATION_LIMIT {
        return Err(SolverError::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
            what: "enumeration of all maximum sets",
        });
    }
    let mu = mu_exact(g)?.mu;
    Ok(Combinations::new(n, mu)
        .map(|c| PointSet::collect(n, c))
        .filter(|p| is_mv_set(g, p))
        .collect())
}

/// A clique grown greedily from each vertex (descending degree), keeping
/// the largest. Cliques are mutual-visibility sets.
pub fn greedy_clique(g: &Graph) -> Vec<Vertex> {
    let mut order: Vec<Vertex> = (0..g.n()).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let mut best: Vec<Vertex> = Vec::new();
    for &s in &order {
        if g.degree(s) < best.len() {
            break;
        }
        let mut clique = vec![s];
        for &v in &order {
            if v != s && clique.iter().all(|&c| g.has_edge(c, v)) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// Open neighbourhood of a maximum-degree vertex. Any two of its members are
/// adjacent or see each other through the centre.
pub fn max_degree_neighborhood(g: &Graph) -> Vec<Vertex> {
    (0..g.n())
        .max_by_key(|&v| (g.degree(v), core::cmp::Reverse(v)))
        .map(|v| g.neighbors(v).to_vec())
        .unwrap_or_default()
}

/// One connected component prepared for search.
struct Part {
    /// `ids[i]` is the original id of search vertex `i`.
    ids: Vec<Vertex>,
    geo: Geometry,
    candidates: Bits,
}

impl Part {
    /// `order` lists the component's vertices in branching order.
    fn new(g: &Graph, order: Vec<Vertex>, skip: &PointSet) -> Result<Part, SolverError> {
        let k = order.len();
        let bytes = k.saturating_mul(k).saturating_mul(k.div_ceil(64) * 8 + 4);
        if bytes > GEOMETRY_BYTES_LIMIT {
            return Err(SolverError::ComponentTooLarge { n: k });
        }
        let sub = g.induced_subgraph(&order);
        let geo = Geometry::new(&sub);
        let mut candidates = Bits::new(k);
        for (i, &v) in order.iter().enumerate() {
            if !skip.contains(v) {
                candidates.insert(i);
            }
        }
        Ok(Part {
            ids: order,
            geo,
            candidates,
        })
    }

    fn to_original(&self, n: usize, set: &[Vertex]) -> PointSet {
        PointSet::collect(n, set.iter().map(|&i| self.ids[i]))
    }
}

/// Search progress reported by [`ExactSearch::run`].
#[derive(Debug, Clone, Default)]
pub struct Progress {
    pub nodes: u64,
    /// The interrupt fired before the subtree was exhausted.
    pub stopped: bool,
    /// Best set found that beat the shared bound, in original ids.
    pub found: Option<PointSet>,
}

/// An open subtree of one component's search, for distribution over
/// threads.
#[derive(Debug, Clone)]
pub struct Task {
    part: usize,
    sub: Subproblem,
}

impl Task {
    pub fn part(&self) -> usize {
        self.part
    }
}

/// Branch-and-bound search for `μ(G)`, split into per-component parts.
///
/// The shared bound `best` is the size of the best set known so far; parts
/// and tasks only look for strictly larger sets. Restricting candidates to
/// non-articulation vertices is sound because some maximum set avoids
/// every articulation vertex.
pub struct ExactSearch {
    n: usize,
    parts: Vec<Part>,
    lower: PointSet,
}

impl ExactSearch {
    pub fn new(g: &Graph) -> Result<ExactSearch, SolverError> {
        let n = g.n();
        let clique = greedy_clique(g);
        let star = max_degree_neighborhood(g);
        let lower = if star.len() > clique.len() {
            star
        } else {
            clique
        };
        let lower = PointSet::collect(n, lower);

        let mut comps = connected_components(g);
        comps.sort_by_key(|c| core::cmp::Reverse(c.len()));
        let mut parts = Vec::new();
        for comp in comps {
            if comp.len() <= lower.len() {
                continue;
            }
            let sub = g.induced_subgraph(&comp);
            let art = articulation_vertices(&sub);
            let mut order: Vec<usize> = (0..comp.len()).collect();
            order.sort_by_key(|&i| (core::cmp::Reverse(sub.degree(i)), comp[i]));
            let mut skip = PointSet::new(n);
            for a in art.iter() {
                skip.insert(comp[a]);
            }
            let order: Vec<Vertex> = order.into_iter().map(|i| comp[i]).collect();
            parts.push(Part::new(g, order, &skip)?);
        }
        Ok(ExactSearch { n, parts, lower })
    }

    /// Best set known before searching (clique or max-degree neighbourhood).
    pub fn lower_bound(&self) -> &PointSet {
        &self.lower
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn part_size(&self, part: usize) -> usize {
        self.parts[part].ids.len()
    }

    /// Splits a part into at least `want` open subtrees when the tree is big
    /// enough. Sets found while splitting are reported in the progress.
    pub fn tasks(
        &self,
        part: usize,
        best: &AtomicUsize,
        want: usize,
        interrupt: &dyn Interrupt,
    ) -> (Vec<Task>, Progress) {
        let p = &self.parts[part];
        let found = AtomicBool::new(false);
        let mut engine = Engine::new(&p.geo, Goal::Maximize, best, &found, interrupt);
        let root = Subproblem {
            chosen: Vec::new(),
            candidates: p.candidates.clone(),
        };
        let subs = if want <= 1 {
            vec![root]
        } else {
            engine.split(root, want)
        };
        let progress = Progress {
            nodes: engine.nodes,
            stopped: engine.stopped,
            found: engine.best_set.as_deref().map(|s| p.to_original(self.n, s)),
        };
        let tasks = subs.into_iter().map(|sub| Task { part, sub }).collect();
        (tasks, progress)
    }

    /// Exhausts one subtree (unless interrupted).
    pub fn run(&self, task: &Task, best: &AtomicUsize, interrupt: &dyn Interrupt) -> Progress {
        let p = &self.parts[task.part];
        let found = AtomicBool::new(false);
        let mut engine = Engine::new(&p.geo, Goal::Maximize, best, &found, interrupt);
        engine.solve(&task.sub);
        Progress {
            nodes: engine.nodes,
            stopped: engine.stopped,
            found: engine.best_set.as_deref().map(|s| p.to_original(self.n, s)),
        }
    }
}

/// Exact `μ(G)` by branch and bound.
pub fn mu_exact(g: &Graph) -> Result<SolveResult, SolverError> {
    mu_exact_with(g, &SearchConfig::default(), &NoInterrupt)
}

/// [`mu_exact`] with options and cooperative cancellation. When
/// interrupted, the result carries the best set found so far and
/// `optimal == false`.
pub fn mu_exact_with(
    g: &Graph,
    config: &SearchConfig,
    interrupt: &dyn Interrupt,
) -> Result<SolveResult, SolverError> {
    let search = ExactSearch::new(g)?;
    let best = AtomicUsize::new(search.lower_bound().len());
    let mut witness = search.lower_bound().clone();
    let mut nodes = 0;
    let mut stopped = false;
    for part in 0..search.part_count() {
        if search.part_size(part) <= best.load(Ordering::Relaxed) {
            continue;
        }
        let (tasks, progress) = search.tasks(part, &best, 1, interrupt);
        nodes += progress.nodes;
        for task in &tasks {
            let pr = search.run(task, &best, interrupt);
            nodes += pr.nodes;
            stopped |= pr.stopped;
            if let Some(set) = pr.found {
                if set.len() > witness.len() {
                    witness = set;
                }
            }
            if stopped {
                break;
            }
        }
        if stopped {
            break;
        }
    }
    let mut result = SolveResult {
        mu: witness.len(),
        witness,
        method: Method::BranchBound,
        optimal: !stopped,
        stats: SearchStats {
            nodes,
            elapsed: None,
        },
    };
    if config.canonical && result.optimal {
        match canonical_witness(g, result.mu, interrupt)? {
            Some((w, extra)) => {
                result.witness = w;
                result.stats.nodes += extra;
            }
            None => result.optimal = false,
        }
    }
    debug_assert!(is_mv_set(g, &result.witness));
    Ok(result)
}

/// Lexicographically least mutual-visibility set of size `mu` (over all
/// components, articulation vertices included). Returns `None` if
/// interrupted.
pub fn canonical_witness(
    g: &Graph,
    mu: usize,
    interrupt: &dyn Interrupt,
) -> Result<Option<(PointSet, u64)>, SolverError> {
    let n = g.n();
    if mu == 0 {
        return Ok(Some((PointSet::new(n), 0)));
    }
    let mut best: Option<PointSet> = None;
    let mut nodes = 0;
    let none = PointSet::new(n);
    for comp in connected_components(g) {
        if comp.len() < mu {
            continue;
        }
        let part = Part::new(g, comp, &none)?;
        let bound = AtomicUsize::new(0);
        let found = AtomicBool::new(false);
        let mut engine = Engine::new(&part.geo, Goal::Reach(mu), &bound, &found, interrupt);
        engine.solve(&Subproblem {
            chosen: Vec::new(),
            candidates: part.candidates.clone(),
        });
        nodes += engine.nodes;
        if engine.stopped {
            return Ok(None);
        }
        if let Some(set) = engine.best_set {
            let cand = part.to_original(n, &set);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    Ok(best.map(|b| (b, nodes)))
}

/// Decides whether some mutual-visibility set has at least `k` points.
pub fn mu_decision(g: &Graph, k: usize) -> Result<Decision, SolverError> {
    mu_decision_with(g, k, &NoInterrupt)
}

pub fn mu_decision_with(
    g: &Graph,
    k: usize,
    interrupt: &dyn Interrupt,
) -> Result<Decision, SolverError> {
    let n = g.n();
    if k > n {
        return Err(SolverError::ThresholdTooLarge { k, n });
    }
    if k == 0 {
        return Ok(Decision::Yes(PointSet::new(n)));
    }
    let search = ExactSearch::new(g)?;
    if search.lower_bound().len() >= k {
        return Ok(Decision::Yes(search.lower_bound().clone()));
    }
    for (idx, part) in search.parts.iter().enumerate() {
        if search.part_size(idx) < k {
            continue;
        }
        let bound = AtomicUsize::new(0);
        let found = AtomicBool::new(false);
        let mut engine = Engine::new(&part.geo, Goal::Reach(k), &bound, &found, interrupt);
        engine.solve(&Subproblem {
            chosen: Vec::new(),
            candidates: part.candidates.clone(),
        });
        if let Some(set) = engine.best_set {
            return Ok(Decision::Yes(part.to_original(n, &set)));
        }
        if engine.stopped {
            return Ok(Decision::Unknown);
        }
    }
    Ok(Decision::No)
}

/// Upper bound `Σ μ(conv(Vᵢ))` for parts covering `V`. Each hull is
/// computed in `g`, and its `μ` exactly on the induced subgraph.
pub fn mu_upper_bound_partition(g: &Graph, parts: &[PointSet]) -> Result<usize, SolverError> {
    let mut covered = PointSet::new(g.n());
    for part in parts {
        for v in part.iter() {
            covered.insert(v);
        }
    }
    if let Some(v) = covered.complement().iter().next() {
        return Err(SolverError::Uncovered(v));
    }
    let mut total = 0;
    for part in parts {
        let hull = convex_hull(g, part)?;
        let sub = g.induced_subgraph(&hull.to_vec());
        total += mu_exact(&sub)?.mu;
    }
    Ok(total)
}
