use alloc::vec;
use alloc::vec::Vec;

use super::{Graph, Vertex};
use crate::PointSet;

/// Maximal biconnected subgraphs and the articulation vertices joining them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex set of each block, sorted. Isolated vertices form no block.
    pub blocks: Vec<Vec<Vertex>>,
    pub articulation: PointSet,
}

/// Hopcroft–Tarjan lowpoint DFS, iterative, with an edge stack.
fn decompose(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut articulation = PointSet::new(n);
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    // (vertex, parent, next neighbour index)
    let mut stack: Vec<(Vertex, Vertex, usize)> = Vec::new();
    let mut time = 0;
    let mut mark = vec![usize::MAX; n];

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(u).get(*idx) {
                *idx += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((u, w));
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    low[u] = low[u].min(disc[w]);
                    edge_stack.push((u, w));
                }
                continue;
            }
            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[u]);
            if low[u] >= disc[parent] {
                if parent != root {
                    articulation.insert(parent);
                }
                let mut block = Vec::new();
                let tag = blocks.len();
                while let Some((a, b)) = edge_stack.pop() {
                    for x in [a, b] {
                        if mark[x] != tag {
                            mark[x] = tag;
                            block.push(x);
                        }
                    }
                    if (a, b) == (parent, u) {
                        break;
                    }
                }
                block.sort_unstable();
                blocks.push(block);
            }
        }
        if root_children >= 2 {
            articulation.insert(root);
        }
    }
    BlockDecomposition {
        blocks,
        articulation,
    }
}

/// Vertices whose removal increases the number of connected components.
pub fn articulation_vertices(g: &Graph) -> PointSet {
    decompose(g).articulation
}

pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    decompose(g)
}

/// Every block induces a complete subgraph.
pub fn is_block_graph(g: &Graph) -> bool {
    decompose(g).blocks.iter().all(|b| {
        let k = b.len();
        let edges: usize = b
            .iter()
            .map(|&v| b.iter().filter(|&&w| g.has_edge(v, w)).count())
            .sum();
        edges == k * (k - 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::connected_components;
    use alloc::vec;

    fn brute_articulation(g: &Graph) -> Vec<Vertex> {
        let base = connected_components(g).len();
        (0..g.n())
            .filter(|&v| {
                let rest: Vec<_> = (0..g.n()).filter(|&w| w != v).collect();
                connected_components(&g.induced_subgraph(&rest)).len() > base
            })
            .collect()
    }

    #[test]
    fn articulation_examples() {
        assert_eq!(
            articulation_vertices(&generators::path(3)).to_vec(),
            vec![1]
        );
        assert!(articulation_vertices(&generators::complete(4)).is_empty());
        assert_eq!(
            articulation_vertices(&generators::star(4)).to_vec(),
            vec![0]
        );
    }

    #[test]
    fn tree_blocks_are_edges() {
        let t = Graph::from_edge_list(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let d = block_decomposition(&t);
        assert_eq!(d.blocks.len(), 5);
        assert!(d.blocks.iter().all(|b| b.len() == 2));
        assert!(is_block_graph(&t));
    }

    #[test]
    fn cycle_is_one_block() {
        let d = block_decomposition(&generators::cycle(4));
        assert_eq!(d.blocks, vec![vec![0, 1, 2, 3]]);
        assert!(!is_block_graph(&generators::cycle(4)));
    }

    #[test]
    fn bowtie() {
        let g =
            Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.articulation.to_vec(), vec![2]);
        assert!(is_block_graph(&g));
    }

    #[test]
    fn matches_removal_definition() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..10);
            let g = generators::random_gnp(n, rng.gen_range(0.1..0.6), &mut rng);
            let d = block_decomposition(&g);
            assert_eq!(d.articulation.to_vec(), brute_articulation(&g), "{g:?}");
            // every edge in exactly one block
            for (u, v) in g.edges() {
                let hits = d
                    .blocks
                    .iter()
                    .filter(|b| b.contains(&u) && b.contains(&v))
                    .count();
                assert_eq!(hits, 1);
            }
        }
    }
}
