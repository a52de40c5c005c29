//! Graph families.
//!
//! Grid and torus vertices are numbered row-major: `(row r, column c)` of a
//! graph with `n` columns has id `r * n + c`.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex};

/// `P_n`: vertices `0..n` in order.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges_trusted(n, &edges)
}

/// `C_n` with `n >= 3`: vertices `0..n` around the cycle.
///
/// # Panics
/// If `n < 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges_trusted(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges_trusted(n, &edges)
}

/// `K_{1,leaves}` with centre `0`.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges_trusted(leaves + 1, &edges)
}

/// `K_{m,n}`: side A is `0..m`, side B is `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    Graph::empty(m).join(&Graph::empty(n))
}

/// Grid `P_m x P_n`, `m` rows and `n` columns.
pub fn grid(m: usize, n: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..m {
        for c in 0..n {
            let v = r * n + c;
            if c + 1 < n {
                edges.push((v, v + 1));
            }
            if r + 1 < m {
                edges.push((v, v + n));
            }
        }
    }
    Graph::from_edges_trusted(m * n, &edges)
}

/// Torus `C_m x C_n` with `m, n >= 3`.
///
/// # Panics
/// If either side is below 3.
pub fn torus(m: usize, n: usize) -> Graph {
    assert!(m >= 3 && n >= 3, "torus sides must be at least 3");
    let mut edges = Vec::new();
    for r in 0..m {
        for c in 0..n {
            let v = r * n + c;
            edges.push((v, r * n + (c + 1) % n));
            edges.push((v, ((r + 1) % m) * n + c));
        }
    }
    Graph::from_edges_trusted(m * n, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges_trusted(10, &edges)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_trusted(n, &edges)
}

/// Uniform random recursive tree: vertex `i > 0` attaches to a uniformly
/// chosen earlier vertex, then ids are shuffled.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = (1..n)
        .map(|i| (perm[rng.gen_range(0..i)], perm[i]))
        .collect();
    Graph::from_edges_trusted(n, &edges)
}

/// Connected block graph on exactly `n` vertices: cliques of random size
/// are glued one at a time onto a random existing vertex.
pub fn random_block_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    if n == 0 {
        return Graph::empty(0);
    }
    let mut edges = Vec::new();
    let mut count = 1;
    while count < n {
        let anchor = rng.gen_range(0..count);
        let grow = rng.gen_range(1..=(n - count).min(4));
        let mut block = vec![anchor];
        block.extend(count..count + grow);
        for (i, &a) in block.iter().enumerate() {
            for &b in &block[i + 1..] {
                edges.push((a, b));
            }
        }
        count += grow;
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    Graph::from_edges_trusted(n, &edges)
}

/// Connected cograph on `n` vertices built by splittings from `K_1`: the
/// first split is a true twin (so the result is connected), later ones
/// copy a random vertex as a true or false twin.
pub fn random_cograph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
    for v in 1..n {
        let src = rng.gen_range(0..v);
        let true_twin = v == 1 || rng.gen_bool(0.5);
        let copied: Vec<Vertex> = (0..v).filter(|&w| w != src && adj[src][w]).collect();
        for w in copied {
            adj[v][w] = true;
            adj[w][v] = true;
        }
        if true_twin {
            adj[v][src] = true;
            adj[src][v] = true;
        }
    }
    let mut edges = Vec::new();
    for (u, row) in adj.iter().enumerate() {
        for (v, &e) in row.iter().enumerate().skip(u + 1) {
            if e {
                edges.push((u, v));
            }
        }
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    Graph::from_edges_trusted(n, &edges)
}

/// Random relabelling of `g`; returns the new graph and the permutation used.
pub fn shuffled<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> (Graph, Vec<Vertex>) {
    let mut perm: Vec<Vertex> = (0..g.n()).collect();
    perm.shuffle(rng);
    (g.relabel(&perm), perm)
}
