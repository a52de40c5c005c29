//! Immutable simple undirected graphs and the structural routines built on
//! top of them.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

mod blocks;
mod convex;
mod twins;

pub use blocks::{articulation_vertices, block_decomposition, is_block_graph, BlockDecomposition};
pub use convex::{convex_hull, geodesic_interval, is_convex};
pub use twins::{
    find_twins, is_cograph, twin_free_subgraph, twin_free_subgraph_by_priority, Elimination,
    TwinFree, TwinKind, TwinPair,
};

/// Dense vertex id in `0..n`.
pub type Vertex = usize;

/// A BFS distance; `None` means the vertex cannot be reached.
pub type Distance = Option<u32>;

pub const UNREACHABLE: Distance = None;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge {0}-{1} appears more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertices {0} and {1} lie in different connected components")]
    DifferentComponents(Vertex, Vertex),
    #[error("the graph is not connected")]
    Disconnected,
}

/// Finite simple undirected graph on the vertices `0..n`.
///
/// Adjacency lists are strictly increasing, symmetric and loop-free; the
/// constructors enforce this and the graph never changes afterwards.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, repeated
    /// edges (in either orientation) and out-of-range ids.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    /// For generators whose edges are distinct by construction.
    pub(crate) fn from_edges_trusted(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        match Graph::from_edge_list(n, edges) {
            Ok(g) => g,
            Err(e) => panic!("generator produced an invalid edge list: {e}"),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&v| v <= u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || connected_components(self).len() == 1
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    /// Returns the subgraph; `vertices[i]` is the original id of new vertex `i`.
    ///
    /// # Panics
    /// If `vertices` repeats an id or contains one out of range.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            assert!(index[v] == usize::MAX, "vertex {v} repeated");
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut m = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX {
                    adj[i].push(j);
                    m += 1;
                }
            }
            adj[i].sort_unstable();
        }
        Graph { adj, m: m / 2 }
    }

    /// Applies the permutation `perm` (old id `v` becomes `perm[v]`).
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut seen = vec![false; self.n()];
        for &p in perm {
            assert!(!core::mem::replace(&mut seen[p], true), "not a permutation");
        }
        let mut adj = vec![Vec::new(); self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            let mut mapped: Vec<Vertex> = list.iter().map(|&v| perm[v]).collect();
            mapped.sort_unstable();
            adj[perm[u]] = mapped;
        }
        Graph { adj, m: self.m }
    }

    /// Disjoint union: `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&v| v + shift).collect::<Vec<_>>()),
        );
        Graph {
            adj,
            m: self.m + other.m,
        }
    }

    /// Join: disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let (n1, n2) = (self.n(), other.n());
        let mut adj = Vec::with_capacity(n1 + n2);
        for l in &self.adj {
            let mut row = l.clone();
            row.extend(n1..n1 + n2);
            adj.push(row);
        }
        for l in &other.adj {
            let mut row: Vec<Vertex> = (0..n1).collect();
            row.extend(l.iter().map(|&v| v + n1));
            adj.push(row);
        }
        Graph {
            adj,
            m: self.m + other.m + n1 * n2,
        }
    }
}

/// Exact BFS distances from `source`; vertices in other components get
/// [`UNREACHABLE`].
pub fn bfs_distances(g: &Graph, source: Vertex) -> Result<Vec<Distance>, GraphError> {
    g.check_vertex(source)?;
    let mut dist = vec![UNREACHABLE; g.n()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap_or(0);
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

/// Component label per vertex; labels are assigned in order of the least
/// vertex of each component.
pub fn component_labels(g: &Graph) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; g.n()];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if label[w] == usize::MAX {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Partition of the vertices into connected components, each sorted, the
/// list ordered by least member.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let (label, count) = component_labels(g);
    let mut comps = vec![Vec::new(); count];
    for (v, &c) in label.iter().enumerate() {
        comps[c].push(v);
    }
    comps
}
