//! Closed-form `μ` with constructive witnesses for the graph classes where
//! it is known, plus the small-`μ` characterization report.
//!
//! Every function that returns a [`ClassResult`] checks its witness with
//! [`is_mv_set`] before returning and panics if the check fails, since that
//! can only mean a bug in the construction.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::generators;
use crate::graph::{
    articulation_vertices, connected_components, is_block_graph, is_cograph, twin_free_subgraph,
    Graph, Vertex,
};
use crate::visibility::is_mv_set;
use crate::PointSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Edgeless,
    Complete,
    PathUnion,
    Path,
    Cycle,
    Tree,
    BlockGraph,
    Grid,
    CompleteBipartite,
    Join,
    Cograph,
    /// Some vertex meets the `|V|-1` criterion of [`lemma_v1_check`].
    NearComplete,
}

impl GraphClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            GraphClass::Edgeless => "edgeless",
            GraphClass::Complete => "complete",
            GraphClass::PathUnion => "path_union",
            GraphClass::Path => "path",
            GraphClass::Cycle => "cycle",
            GraphClass::Tree => "tree",
            GraphClass::BlockGraph => "block_graph",
            GraphClass::Grid => "grid",
            GraphClass::CompleteBipartite => "complete_bipartite",
            GraphClass::Join => "join",
            GraphClass::Cograph => "cograph",
            GraphClass::NearComplete => "near_complete",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassError {
    #[error("{what} must be at least {min}, got {value}")]
    Parameter {
        what: &'static str,
        value: usize,
        min: usize,
    },
    #[error("graph is not a {0}")]
    NotInClass(GraphClass),
    #[error("join operands must be non-empty")]
    EmptyOperand,
    #[error("internal error: {0}")]
    Internal(&'static str),
}

/// An exact `μ` together with a maximum mutual-visibility set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassResult {
    pub mu: usize,
    pub witness: PointSet,
    pub class: GraphClass,
}

fn verified(g: &Graph, witness: PointSet, class: GraphClass) -> ClassResult {
    assert!(
        is_mv_set(g, &witness),
        "{class} construction produced a set that is not mutually visible: {witness}"
    );
    ClassResult {
        mu: witness.len(),
        witness,
        class,
    }
}

fn at_least(what: &'static str, value: usize, min: usize) -> Result<(), ClassError> {
    if value < min {
        return Err(ClassError::Parameter { what, value, min });
    }
    Ok(())
}

/// Which of the four small-`μ` characterizations apply to a graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CharReport {
    /// `μ = 1`: at least one vertex and no edges.
    pub edgeless: bool,
    /// `μ = 2`: `n > 1`, every component is a path and some component has an
    /// edge.
    pub paths: bool,
    /// `μ = |V|`: complete graph.
    pub complete: bool,
    /// `μ = |E|` for connected graphs with `n > 2`: star or triangle.
    pub star_or_triangle: bool,
}

impl CharReport {
    /// Human-readable lines for every case that applies.
    pub fn lines(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.edgeless {
            out.push("mu = 1 (empty graph)");
        }
        if self.paths {
            out.push("mu = 2 (union of paths)");
        }
        if self.complete {
            out.push("mu = |V| (complete)");
        }
        if self.star_or_triangle {
            out.push(if self.complete {
                "mu = |E| (triangle)"
            } else {
                "mu = |E| (star)"
            });
        }
        out
    }
}

fn is_path_component(g: &Graph, comp: &[Vertex]) -> bool {
    let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
    edges + 1 == comp.len() && comp.iter().all(|&v| g.degree(v) <= 2)
}

fn is_path_union(g: &Graph) -> bool {
    g.n() > 1
        && g.m() > 0
        && connected_components(g)
            .iter()
            .all(|c| is_path_component(g, c))
}

fn is_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 2 && g.m() == n - 1 && (0..n).any(|v| g.degree(v) == n - 1)
}

pub fn classify(g: &Graph) -> CharReport {
    let n = g.n();
    let connected = g.is_connected();
    CharReport {
        edgeless: n >= 1 && g.m() == 0,
        paths: is_path_union(g),
        complete: g.is_complete(),
        star_or_triangle: connected && n > 2 && (is_star(g) || (n == 3 && g.m() == 3)),
    }
}

/// `μ(P_n) = 2` for `n >= 2`, witnessed by the first edge.
pub fn mu_path(n: usize) -> Result<ClassResult, ClassError> {
    at_least("path length", n, 2)?;
    Ok(verified(
        &generators::path(n),
        PointSet::collect(n, [0, 1]),
        GraphClass::Path,
    ))
}

fn cycle_points(order: &[Vertex]) -> [Vertex; 3] {
    let half = order.len().div_ceil(2);
    [order[0], order[half - 1], order[half]]
}

/// `μ(C_n) = 3` for `n >= 3`, witnessed by `{x₀, x_{⌈n/2⌉-1}, x_{⌈n/2⌉}}`.
pub fn mu_cycle(n: usize) -> Result<ClassResult, ClassError> {
    at_least("cycle length", n, 3)?;
    let order: Vec<Vertex> = (0..n).collect();
    Ok(verified(
        &generators::cycle(n),
        PointSet::collect(n, cycle_points(&order)),
        GraphClass::Cycle,
    ))
}

fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.m() + 1 == g.n() && g.is_connected()
}

/// Trees: the leaves (both vertices of `K_2`, the single vertex of `K_1`).
pub fn mu_tree(g: &Graph) -> Result<ClassResult, ClassError> {
    if !is_tree(g) {
        return Err(ClassError::NotInClass(GraphClass::Tree));
    }
    let n = g.n();
    let witness = if n <= 2 {
        PointSet::full(n)
    } else {
        PointSet::collect(n, (0..n).filter(|&v| g.degree(v) == 1))
    };
    Ok(verified(g, witness, GraphClass::Tree))
}

/// Connected block graphs: every vertex that is not an articulation vertex.
pub fn mu_block_graph(g: &Graph) -> Result<ClassResult, ClassError> {
    if g.n() == 0 || !g.is_connected() || !is_block_graph(g) {
        return Err(ClassError::NotInClass(GraphClass::BlockGraph));
    }
    let witness = articulation_vertices(g).complement();
    Ok(verified(g, witness, GraphClass::BlockGraph))
}

/// `μ(Γ_{m,n})` for `m, n >= 1` in `rows x cols` coordinates with
/// `rows <= cols`.
fn grid_cells(rows: usize, cols: usize) -> Vec<(usize, usize)> {
    debug_assert!(rows <= cols);
    let last = cols - 1;
    match (rows, cols) {
        (1, 1) => vec![(0, 0)],
        (1, _) => vec![(0, 0), (0, 1)],
        (2, 2) => vec![(0, 0), (0, 1), (1, 0)],
        (2, _) => vec![(0, 0), (0, last), (1, 0), (1, last)],
        // found by exhaustive search; no pattern applies at this size
        (3, 3) => vec![(0, 0), (0, 1), (1, 2), (2, 0), (2, 1)],
        (3, 4) => vec![(0, 0), (0, 2), (1, 0), (1, 3), (2, 1), (2, 2)],
        (3, _) => vec![(0, 0), (0, last), (2, 0), (2, last), (1, 1), (1, cols - 2)],
        (4, _) => vec![
            (1, 0),
            (2, 0),
            (0, 1),
            (3, 1),
            (0, 2),
            (3, 2),
            (1, 3),
            (2, 3),
        ],
        (k, _) => {
            let mut cells = vec![(1, 0), (2, 0), (0, 1), (3, 1)];
            for j in 2..=k - 3 {
                cells.push((j - 2, j));
                cells.push((j + 2, j));
            }
            cells.extend([
                (k - 4, k - 2),
                (k - 1, k - 2),
                (k - 3, k - 1),
                (k - 2, k - 1),
            ]);
            cells
        }
    }
}

/// Grid `Γ_{m,n}` (`m` rows, `n` columns, id `r * n + c`).
///
/// For `min(m, n) >= 4` the witness has two points in every row and column
/// of the leading `k x k` block, `k = min(m, n)`.
pub fn mu_grid(m: usize, n: usize) -> Result<ClassResult, ClassError> {
    at_least("grid rows", m, 1)?;
    at_least("grid columns", n, 1)?;
    let cells = if m <= n {
        grid_cells(m, n)
    } else {
        grid_cells(n, m).into_iter().map(|(r, c)| (c, r)).collect()
    };
    let witness = PointSet::collect(m * n, cells.into_iter().map(|(r, c)| r * n + c));
    Ok(verified(&generators::grid(m, n), witness, GraphClass::Grid))
}

/// Witness for a complete bipartite graph with sides `a` and `b`.
fn bipartite_witness(n: usize, a: &[Vertex], b: &[Vertex]) -> PointSet {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut w = PointSet::full(n);
    match (small.len(), large.len()) {
        (1, 1) => {}
        (1, _) => {
            w.remove(small[0]);
        }
        (2, _) => {
            w.remove(small[0]);
        }
        _ => {
            w.remove(small[0]);
            w.remove(large[0]);
        }
    }
    w
}

/// `K_{m,n}` with side A `0..m` and side B `m..m+n`.
pub fn mu_complete_bipartite(m: usize, n: usize) -> Result<ClassResult, ClassError> {
    at_least("side size", m, 1)?;
    at_least("side size", n, 1)?;
    let a: Vec<Vertex> = (0..m).collect();
    let b: Vec<Vertex> = (m..m + n).collect();
    let witness = bipartite_witness(m + n, &a, &b);
    Ok(verified(
        &generators::complete_bipartite(m, n),
        witness,
        GraphClass::CompleteBipartite,
    ))
}

/// Lowest-id vertex `v` adjacent to every `u != v` with
/// `deg_{G-v}(u) < |V| - 2`. Such a `v` exists iff `μ(G) >= |V| - 1`, and
/// then `V ∖ {v}` is a mutual-visibility set.
pub fn lemma_v1_check(g: &Graph) -> Option<Vertex> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    // A non-neighbour u of v keeps its full degree in G - v, so it passes
    // only when it is adjacent to everything except v.
    let full: Vec<bool> = (0..n).map(|u| g.degree(u) + 2 == n).collect();
    let mut mark = vec![false; n];
    (0..n).find(|&v| {
        for &w in g.neighbors(v) {
            mark[w] = true;
        }
        let ok = (0..n).all(|u| u == v || mark[u] || full[u]);
        for &w in g.neighbors(v) {
            mark[w] = false;
        }
        ok
    })
}

/// Which case of the join classification applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinCase {
    /// Both operands complete: `μ = |V|`.
    Complete,
    /// One operand has `μ(Gᵢ) >= |Vᵢ| - 1`: `μ = |V| - 1`.
    MinusOne,
    /// Otherwise: `μ = |V| - 2`.
    MinusTwo,
}

#[derive(Debug, Clone)]
pub struct JoinOutcome {
    pub graph: Graph,
    pub case: JoinCase,
    pub result: ClassResult,
}

/// Case and witness for `j = G[side1] + G[side2]`, given that every edge
/// between the sides is present.
fn join_witness(j: &Graph, side1: &[Vertex], side2: &[Vertex]) -> (JoinCase, PointSet) {
    let n = j.n();
    let g1 = j.induced_subgraph(side1);
    let g2 = j.induced_subgraph(side2);
    if g1.is_complete() && g2.is_complete() {
        return (JoinCase::Complete, PointSet::full(n));
    }
    let mut w = PointSet::full(n);
    for (g, side) in [(&g1, side1), (&g2, side2)] {
        if let Some(v) = lemma_v1_check(g) {
            w.remove(side[v]);
            return (JoinCase::MinusOne, w);
        }
    }
    w.remove(side1[0]);
    w.remove(side2[0]);
    (JoinCase::MinusTwo, w)
}

/// `μ(G₁ + G₂)`. In the join, `G₁` keeps ids `0..n₁` and `G₂` is shifted
/// to `n₁..n₁+n₂`.
pub fn mu_join(g1: &Graph, g2: &Graph) -> Result<JoinOutcome, ClassError> {
    if g1.n() == 0 || g2.n() == 0 {
        return Err(ClassError::EmptyOperand);
    }
    let graph = g1.join(g2);
    let n1 = g1.n();
    let side1: Vec<Vertex> = (0..n1).collect();
    let side2: Vec<Vertex> = (n1..graph.n()).collect();
    let (case, witness) = join_witness(&graph, &side1, &side2);
    let result = verified(&graph, witness, GraphClass::Join);
    Ok(JoinOutcome {
        graph,
        case,
        result,
    })
}

/// Splits a connected cograph with at least two vertices into `V₁, V₂` with
/// `G = G[V₁] + G[V₂]`, by replaying twin pruning backwards.
pub fn cograph_partition(g: &Graph) -> Result<(Vec<Vertex>, Vec<Vertex>), ClassError> {
    if g.n() < 2 || !is_cograph(g).unwrap_or(false) {
        return Err(ClassError::NotInClass(GraphClass::Cograph));
    }
    let pruning = twin_free_subgraph(g);
    let mut side = vec![0u8; g.n()];
    let mut steps = pruning.eliminations.iter().rev();
    let last = steps
        .next()
        .ok_or(ClassError::Internal("cograph pruning removed nothing"))?;
    side[last.survivor] = 1;
    side[last.removed] = 2;
    for e in steps {
        side[e.removed] = side[e.survivor];
    }
    let v1: Vec<Vertex> = (0..g.n()).filter(|&v| side[v] == 1).collect();
    let v2: Vec<Vertex> = (0..g.n()).filter(|&v| side[v] == 2).collect();
    let across = v1.iter().all(|&a| v2.iter().all(|&b| g.has_edge(a, b)));
    if v1.len() + v2.len() != g.n() || !across {
        return Err(ClassError::Internal("cograph partition is not a join"));
    }
    Ok((v1, v2))
}

/// Connected cographs: `μ ∈ {n, n-1, n-2}` via the join decomposition.
pub fn mu_cograph(g: &Graph) -> Result<ClassResult, ClassError> {
    if g.n() == 1 {
        return Ok(verified(g, PointSet::full(1), GraphClass::Cograph));
    }
    let (v1, v2) = cograph_partition(g)?;
    let (_, witness) = join_witness(g, &v1, &v2);
    Ok(verified(g, witness, GraphClass::Cograph))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attainment {
    Yes,
    No,
    Unknown,
}

impl Attainment {
    pub fn as_str(&self) -> &'static str {
        match self {
            Attainment::Yes => "yes",
            Attainment::No => "no",
            Attainment::Unknown => "unknown",
        }
    }
}

/// Upper bound for a torus and what is known about reaching it. The
/// attainment field is recorded data, never used by the solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusFact {
    pub m: usize,
    pub n: usize,
    pub upper_bound: usize,
    pub attained: Attainment,
    pub source: &'static str,
}

pub fn mu_torus_bound(m: usize, n: usize) -> Result<TorusFact, ClassError> {
    at_least("torus side", m, 3)?;
    at_least("torus side", n, 3)?;
    let (attained, source) = match (m, n) {
        (a, b) if a == b && a <= 11 => (
            Attainment::No,
            "reported exhaustive backtracking search for square tori up to 11",
        ),
        (12, 12) | (15, 15) => (Attainment::Yes, "reported hand construction"),
        _ => (Attainment::Unknown, "open"),
    };
    Ok(TorusFact {
        m,
        n,
        upper_bound: 3 * m.min(n),
        attained,
        source,
    })
}

/// Cycle vertices in walking order from vertex 0, if `g` is a cycle.
fn cycle_order(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    if n < 3 || g.m() != n || !(0..n).all(|v| g.degree(v) == 2) || !g.is_connected() {
        return None;
    }
    let mut order = vec![0];
    let (mut prev, mut cur) = (0, g.neighbors(0)[0].min(g.neighbors(0)[1]));
    while cur != 0 {
        order.push(cur);
        let nb = g.neighbors(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    Some(order)
}

/// Two-colouring of a connected graph, if it is bipartite.
fn bipartition(g: &Graph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let n = g.n();
    let mut colour = vec![u8::MAX; n];
    let mut stack = vec![0];
    colour[0] = 0;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if colour[w] == u8::MAX {
                colour[w] = 1 - colour[u];
                stack.push(w);
            } else if colour[w] == colour[u] {
                return None;
            }
        }
    }
    let a = (0..n).filter(|&v| colour[v] == 0).collect();
    let b = (0..n).filter(|&v| colour[v] == 1).collect();
    Some((a, b))
}

/// Tries the closed forms in a fixed order and returns the first that
/// applies: edgeless, complete, union of paths, cycle, tree, block graph,
/// complete bipartite, cograph, then the `|V|-1` criterion.
pub fn mu_formula(g: &Graph) -> Option<ClassResult> {
    let n = g.n();
    if n >= 1 && g.m() == 0 {
        return Some(verified(g, PointSet::collect(n, [0]), GraphClass::Edgeless));
    }
    if g.is_complete() {
        return Some(verified(g, PointSet::full(n), GraphClass::Complete));
    }
    if is_path_union(g) {
        let (u, v) = g.edges().next()?;
        let class = if g.is_connected() {
            GraphClass::Path
        } else {
            GraphClass::PathUnion
        };
        return Some(verified(g, PointSet::collect(n, [u, v]), class));
    }
    if let Some(order) = cycle_order(g) {
        return Some(verified(
            g,
            PointSet::collect(n, cycle_points(&order)),
            GraphClass::Cycle,
        ));
    }
    if !g.is_connected() {
        return lemma_v1_check(g).map(|v| near_complete(g, v));
    }
    if let Ok(r) = mu_tree(g) {
        return Some(r);
    }
    if let Ok(r) = mu_block_graph(g) {
        return Some(r);
    }
    if let Some((a, b)) = bipartition(g) {
        if g.m() == a.len() * b.len() {
            let witness = bipartite_witness(n, &a, &b);
            return Some(verified(g, witness, GraphClass::CompleteBipartite));
        }
    }
    if let Ok(r) = mu_cograph(g) {
        return Some(r);
    }
    lemma_v1_check(g).map(|v| near_complete(g, v))
}

fn near_complete(g: &Graph, v: Vertex) -> ClassResult {
    let mut w = PointSet::full(g.n());
    w.remove(v);
    verified(g, w, GraphClass::NearComplete)
}
