//! Branch-and-bound search over one connected graph.
//!
//! Vertices are relabelled so that branching order is ascending id. The
//! state keeps, for every pair of chosen points, the interior of one
//! point-free shortest path between them. Adding a vertex `w` checks `w`
//! against every chosen point and rechecks only the pairs whose stored path
//! runs through `w`.
//!
//! At each node, every remaining candidate whose insertion would already
//! break visibility is dropped; since visibility only gets harder as points
//! are added, such a candidate is infeasible in the whole subtree. The bound
//! is then `|chosen| + |feasible candidates|`.

use core::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{words_for, Bits};
use crate::graph::{bfs_distances, Graph, Vertex};

/// Cooperative cancellation for long searches.
pub trait Interrupt: Sync {
    fn should_stop(&self) -> bool;
}

/// Never interrupts.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoInterrupt;

impl Interrupt for NoInterrupt {
    fn should_stop(&self) -> bool {
        false
    }
}

/// Stops after a fixed number of search nodes (approximate under
/// concurrency).
#[derive(Debug, Default)]
pub struct NodeLimit {
    limit: u64,
    used: core::sync::atomic::AtomicU64,
}

impl NodeLimit {
    pub fn new(limit: u64) -> Self {
        NodeLimit {
            limit,
            used: core::sync::atomic::AtomicU64::new(0),
        }
    }
}

impl Interrupt for NodeLimit {
    fn should_stop(&self) -> bool {
        self.used.fetch_add(1, Ordering::Relaxed) >= self.limit
    }
}

/// Distance structure with per-source distance layers as bitsets.
pub(crate) struct Geometry {
    n: usize,
    words: usize,
    adj: Vec<Bits>,
    dist: Vec<u32>,
    /// `layers[a][k]` = vertices at distance exactly `k` from `a`.
    layers: Vec<Vec<Bits>>,
}

impl Geometry {
    /// # Panics
    /// If `g` is not connected.
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let words = words_for(n);
        let adj = (0..n)
            .map(|v| {
                let mut b = Bits::with_words(words);
                for &w in g.neighbors(v) {
                    b.insert(w);
                }
                b
            })
            .collect();
        let mut dist = vec![0u32; n * n];
        let mut layers = Vec::with_capacity(n);
        for a in 0..n {
            let row = bfs_distances(g, a).expect("vertex in range");
            let ecc = row
                .iter()
                .map(|d| d.expect("search graph must be connected"))
                .max()
                .unwrap_or(0) as usize;
            let mut lay = vec![Bits::with_words(words); ecc + 1];
            for (b, d) in row.iter().enumerate() {
                let d = d.unwrap_or(0);
                dist[a * n + b] = d;
                lay[d as usize].insert(b);
            }
            layers.push(lay);
        }
        Geometry {
            n,
            words,
            adj,
            dist,
            layers,
        }
    }

    #[inline]
    fn dist(&self, a: usize, b: usize) -> u32 {
        self.dist[a * self.n + b]
    }

    /// Forward sweep through the geodesic layers between `a` and `b`,
    /// avoiding `blocked`. Fills `frontiers[k]` for `k` in `1..d`.
    /// Returns whether `b` is reached.
    fn sweep(&self, a: usize, b: usize, blocked: &Bits, frontiers: &mut Vec<Bits>) -> bool {
        let d = self.dist(a, b) as usize;
        if d <= 1 {
            return true;
        }
        while frontiers.len() < d {
            frontiers.push(Bits::with_words(self.words));
        }
        frontiers[0].clear();
        frontiers[0].insert(a);
        let la = &self.layers[a];
        let lb = &self.layers[b];
        for k in 1..d {
            let (prev, rest) = frontiers.split_at_mut(k);
            let next = &mut rest[0];
            next.clear();
            for x in prev[k - 1].iter() {
                next.union_with(&self.adj[x]);
            }
            next.intersect_with(&la[k]);
            next.intersect_with(&lb[d - k]);
            next.difference_with(blocked);
            if next.is_empty() {
                return false;
            }
        }
        true
    }

    /// Interior of one point-free shortest path, read back from the
    /// frontiers of a successful [`Geometry::sweep`].
    fn trace(&self, a: usize, b: usize, frontiers: &[Bits]) -> Bits {
        let d = self.dist(a, b) as usize;
        let mut interior = Bits::with_words(self.words);
        let mut cur = b;
        for k in (1..d).rev() {
            let prev = frontiers[k]
                .iter()
                .find(|&x| self.adj[cur].contains(x))
                .expect("frontier links back");
            interior.insert(prev);
            cur = prev;
        }
        interior
    }
}

/// Search goal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Goal {
    /// Find the largest set, beating the shared bound when possible.
    Maximize,
    /// Stop at the first set of at least this size.
    Reach(usize),
}

/// An open subtree: the points chosen so far and the candidates left.
#[derive(Debug, Clone)]
pub(crate) struct Subproblem {
    pub chosen: Vec<Vertex>,
    pub candidates: Bits,
}

pub(crate) struct Engine<'a> {
    geo: &'a Geometry,
    goal: Goal,
    best: &'a AtomicUsize,
    found: &'a AtomicBool,
    interrupt: &'a dyn Interrupt,
    chosen: Vec<Vertex>,
    chosen_bits: Bits,
    /// `witness[j][i]` = interior of the stored path between chosen `i < j`.
    witness: Vec<Vec<Bits>>,
    undo: Vec<(usize, usize, Bits)>,
    frontiers: Vec<Bits>,
    scratch: Bits,
    pub nodes: u64,
    pub stopped: bool,
    pub best_set: Option<Vec<Vertex>>,
}

impl<'a> Engine<'a> {
    pub fn new(
        geo: &'a Geometry,
        goal: Goal,
        best: &'a AtomicUsize,
        found: &'a AtomicBool,
        interrupt: &'a dyn Interrupt,
    ) -> Self {
        Engine {
            geo,
            goal,
            best,
            found,
            interrupt,
            chosen: Vec::new(),
            chosen_bits: Bits::with_words(geo.words),
            witness: Vec::new(),
            undo: Vec::new(),
            frontiers: Vec::new(),
            scratch: Bits::with_words(geo.words),
            nodes: 0,
            stopped: false,
            best_set: None,
        }
    }

    /// Whether `w` can join the chosen points. Does not modify the state.
    fn can_insert(&mut self, w: usize) -> bool {
        self.scratch.copy_from(&self.chosen_bits);
        self.scratch.insert(w);
        for j in 0..self.chosen.len() {
            for i in 0..j {
                if self.witness[j][i].contains(w)
                    && !self.geo.sweep(
                        self.chosen[i],
                        self.chosen[j],
                        &self.scratch,
                        &mut self.frontiers,
                    )
                {
                    return false;
                }
            }
        }
        for i in 0..self.chosen.len() {
            if !self
                .geo
                .sweep(self.chosen[i], w, &self.scratch, &mut self.frontiers)
            {
                return false;
            }
        }
        true
    }

    /// Adds `w`, storing fresh witnesses. Returns `false` (state unchanged)
    /// if `w` would break visibility.
    fn push(&mut self, w: usize) -> bool {
        let mark = self.undo.len();
        self.scratch.copy_from(&self.chosen_bits);
        self.scratch.insert(w);
        for j in 0..self.chosen.len() {
            for i in 0..j {
                if !self.witness[j][i].contains(w) {
                    continue;
                }
                let (a, b) = (self.chosen[i], self.chosen[j]);
                if !self.geo.sweep(a, b, &self.scratch, &mut self.frontiers) {
                    self.rollback(mark);
                    return false;
                }
                let fresh = self.geo.trace(a, b, &self.frontiers);
                let old = core::mem::replace(&mut self.witness[j][i], fresh);
                self.undo.push((j, i, old));
            }
        }
        let mut row = Vec::with_capacity(self.chosen.len());
        for i in 0..self.chosen.len() {
            let a = self.chosen[i];
            if !self.geo.sweep(a, w, &self.scratch, &mut self.frontiers) {
                self.rollback(mark);
                return false;
            }
            row.push(self.geo.trace(a, w, &self.frontiers));
        }
        self.undo.push((usize::MAX, mark, Bits::with_words(0)));
        self.witness.push(row);
        self.chosen.push(w);
        self.chosen_bits.insert(w);
        true
    }

    fn rollback(&mut self, mark: usize) {
        while self.undo.len() > mark {
            let (j, i, old) = self.undo.pop().expect("non-empty");
            self.witness[j][i] = old;
        }
    }

    fn pop(&mut self) {
        let (tag, mark, _) = self.undo.pop().expect("push marker");
        debug_assert_eq!(tag, usize::MAX);
        self.witness.pop();
        let w = self.chosen.pop().expect("non-empty");
        self.chosen_bits.remove(w);
        self.rollback(mark);
    }

    fn target(&self) -> usize {
        match self.goal {
            Goal::Maximize => self.best.load(Ordering::Relaxed) + 1,
            Goal::Reach(k) => k,
        }
    }

    fn halted(&mut self) -> bool {
        if self.stopped || self.found.load(Ordering::Relaxed) {
            return true;
        }
        if self.interrupt.should_stop() {
            self.stopped = true;
        }
        self.stopped
    }

    fn record(&mut self) {
        let size = self.chosen.len();
        match self.goal {
            Goal::Maximize => {
                if self.best.fetch_max(size, Ordering::AcqRel) < size {
                    self.best_set = Some(self.chosen.clone());
                }
            }
            Goal::Reach(k) => {
                if size >= k && !self.found.swap(true, Ordering::AcqRel) {
                    self.best_set = Some(self.chosen.clone());
                }
            }
        }
    }

    fn filter(&mut self, candidates: &Bits) -> Bits {
        let mut kept = candidates.clone();
        for c in candidates.iter() {
            if !self.can_insert(c) {
                kept.remove(c);
            }
        }
        kept
    }

    fn dfs(&mut self, candidates: Bits) {
        self.nodes += 1;
        if self.halted() {
            return;
        }
        if self.chosen.len() >= self.target() {
            self.record();
            if matches!(self.goal, Goal::Reach(_)) {
                return;
            }
        }
        let mut cands = self.filter(&candidates);
        while let Some(c) = cands.first() {
            if self.chosen.len() + cands.count() < self.target() {
                return;
            }
            cands.remove(c);
            if self.push(c) {
                self.dfs(cands.clone());
                self.pop();
                if self.halted() {
                    return;
                }
            }
        }
    }

    /// Replays a subproblem's choices and searches its subtree.
    pub fn solve(&mut self, sub: &Subproblem) {
        for &v in &sub.chosen {
            let ok = self.push(v);
            assert!(ok, "subproblem choices must be feasible");
        }
        self.dfs(sub.candidates.clone());
        for _ in &sub.chosen {
            self.pop();
        }
    }

    /// Expands the tree breadth-first until at least `want` open subtrees
    /// exist (or the tree is exhausted). Complete solutions met on the way
    /// are recorded.
    pub fn split(&mut self, root: Subproblem, want: usize) -> Vec<Subproblem> {
        let mut layer = vec![root];
        for _ in 0..64 {
            if layer.len() >= want {
                break;
            }
            let mut next = Vec::new();
            let mut grew = false;
            for sub in layer {
                for &v in &sub.chosen {
                    let ok = self.push(v);
                    assert!(ok, "subproblem choices must be feasible");
                }
                self.nodes += 1;
                if self.chosen.len() >= self.target() {
                    self.record();
                }
                let cands = self.filter(&sub.candidates);
                if self.chosen.len() + cands.count() >= self.target() {
                    if let Some(c) = cands.first() {
                        grew = true;
                        let mut rest = cands.clone();
                        rest.remove(c);
                        if self.can_insert(c) {
                            let mut chosen = sub.chosen.clone();
                            chosen.push(c);
                            next.push(Subproblem {
                                chosen,
                                candidates: rest.clone(),
                            });
                        }
                        next.push(Subproblem {
                            chosen: sub.chosen.clone(),
                            candidates: rest,
                        });
                    }
                }
                for _ in &sub.chosen {
                    self.pop();
                }
            }
            layer = next;
            if !grew {
                break;
            }
        }
        layer
    }
}
