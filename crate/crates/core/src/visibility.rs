//! Polynomial-time mutual-visibility tests.
//!
//! [`is_mv_set`] runs two point-aware BFS passes from every point: one that
//! walks through points and one that records points but never expands them.
//! A point set is a mutual-visibility set exactly when both passes report the
//! same distance to every other point. Total work is `O(|P|(|V|+|E|))`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Distance, Graph, GraphError, Vertex, UNREACHABLE};
use crate::PointSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VisibilityError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {0} is not a point of the set")]
    NotAPoint(Vertex),
}

/// Distances from a source to each point of `P`, keyed by point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointDistanceMap {
    points: Vec<Vertex>,
    dist: Vec<Distance>,
}

impl PointDistanceMap {
    pub fn get(&self, p: Vertex) -> Option<Distance> {
        self.points.binary_search(&p).ok().map(|i| self.dist[i])
    }

    /// `(point, distance)` pairs in ascending point order.
    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Distance)> + '_ {
        self.points.iter().copied().zip(self.dist.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Reusable buffers for repeated point-aware BFS runs on one graph.
struct Scanner {
    dist: Vec<Distance>,
    touched: Vec<Vertex>,
    queue: VecDeque<Vertex>,
}

impl Scanner {
    fn new(n: usize) -> Self {
        Scanner {
            dist: vec![UNREACHABLE; n],
            touched: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.dist[v] = UNREACHABLE;
        }
        self.touched.clear();
        self.queue.clear();
    }

    /// BFS from `source`. With `through_points == false`, points other than
    /// the source are labelled but never expanded. Stops early once every
    /// point has a distance. Leaves `self.dist` filled for touched vertices.
    fn run(&mut self, g: &Graph, points: &PointSet, source: Vertex, through_points: bool) {
        self.reset();
        self.dist[source] = Some(0);
        self.touched.push(source);
        let mut missing = points.len() - points.contains(source) as usize;
        self.queue.push_back(source);
        while missing > 0 {
            let Some(u) = self.queue.pop_front() else {
                break;
            };
            let du = self.dist[u].unwrap_or(0);
            for &w in g.neighbors(u) {
                if self.dist[w].is_some() {
                    continue;
                }
                self.dist[w] = Some(du + 1);
                self.touched.push(w);
                let is_point = points.contains(w);
                if is_point {
                    missing -= 1;
                }
                if through_points || !is_point {
                    self.queue.push_back(w);
                }
            }
        }
    }

    fn point_row(&self, points: &[Vertex]) -> Vec<Distance> {
        points.iter().map(|&p| self.dist[p]).collect()
    }
}

fn check_universe(g: &Graph, p: &PointSet) {
    assert_eq!(
        p.universe(),
        g.n(),
        "point set universe does not match the graph"
    );
}

/// Point-aware BFS from `v`.
///
/// With `through_points`, the result holds exact distances in `g`;
/// otherwise the distance to each point `u` is measured in the graph with
/// every point except `v` and `u` removed.
pub fn bfs_mv(
    g: &Graph,
    p: &PointSet,
    v: Vertex,
    through_points: bool,
) -> Result<PointDistanceMap, GraphError> {
    g.check_vertex(v)?;
    check_universe(g, p);
    let mut scan = Scanner::new(g.n());
    scan.run(g, p, v, through_points);
    let points = p.to_vec();
    let dist = scan.point_row(&points);
    Ok(PointDistanceMap { points, dist })
}

/// Outcome of a full check, naming an offending pair when there is one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Visible,
    /// Two points lie in different connected components.
    Components(Vertex, Vertex),
    /// Every shortest path between the two points passes another point.
    Blocked(Vertex, Vertex),
}

impl Verdict {
    pub fn is_visible(&self) -> bool {
        matches!(self, Verdict::Visible)
    }
}

/// Like [`is_mv_set`], but reports the first offending pair.
pub fn check_mv_set(g: &Graph, p: &PointSet) -> Verdict {
    check_universe(g, p);
    if p.len() <= 1 {
        return Verdict::Visible;
    }
    let points = p.to_vec();
    let mut open = Scanner::new(g.n());
    let mut guarded = Scanner::new(g.n());

    for (i, &src) in points.iter().enumerate() {
        open.run(g, p, src, true);
        if i == 0 {
            if let Some(&far) = points.iter().find(|&&q| open.dist[q].is_none()) {
                return Verdict::Components(src, far);
            }
        }
        guarded.run(g, p, src, false);
        for &q in &points {
            if open.dist[q] != guarded.dist[q] {
                return Verdict::Blocked(src.min(q), src.max(q));
            }
        }
    }
    Verdict::Visible
}

/// `true` iff every pair of points is joined by a shortest path whose
/// interior avoids `p`. Sets with at most one point are always accepted.
pub fn is_mv_set(g: &Graph, p: &PointSet) -> bool {
    check_mv_set(g, p).is_visible()
}

fn require_points(g: &Graph, p: &PointSet, u: Vertex, v: Vertex) -> Result<(), VisibilityError> {
    check_universe(g, p);
    for x in [u, v] {
        g.check_vertex(x)?;
        if !p.contains(x) {
            return Err(VisibilityError::NotAPoint(x));
        }
    }
    Ok(())
}

/// Whether points `u` and `v` see each other in `p`.
pub fn visible(g: &Graph, p: &PointSet, u: Vertex, v: Vertex) -> Result<bool, VisibilityError> {
    Ok(witness_path(g, p, u, v)?.is_some())
}

/// One shortest `(u, v)`-path whose interior avoids `p`, if any exists.
pub fn witness_path(
    g: &Graph,
    p: &PointSet,
    u: Vertex,
    v: Vertex,
) -> Result<Option<Vec<Vertex>>, VisibilityError> {
    require_points(g, p, u, v)?;
    if u == v {
        return Ok(Some(vec![u]));
    }
    let n = g.n();
    let mut open = Scanner::new(n);
    open.run(g, p, u, true);
    let Some(target) = open.dist[v] else {
        return Ok(None);
    };

    let mut dist = vec![UNREACHABLE; n];
    let mut parent = vec![usize::MAX; n];
    dist[u] = Some(0);
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        let dx = dist[x].unwrap_or(0);
        if dx + 1 > target {
            break;
        }
        for &w in g.neighbors(x) {
            if dist[w].is_some() {
                continue;
            }
            if w == v {
                dist[w] = Some(dx + 1);
                parent[w] = x;
                queue.clear();
                break;
            }
            if !p.contains(w) {
                dist[w] = Some(dx + 1);
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    if dist[v] != Some(target) {
        return Ok(None);
    }
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    Ok(Some(path))
}
