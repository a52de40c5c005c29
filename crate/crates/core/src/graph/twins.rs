use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{Graph, GraphError, Vertex};
use crate::bits::Bits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwinKind {
    /// Adjacent, equal closed neighbourhoods.
    True,
    /// Non-adjacent, equal open neighbourhoods.
    False,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwinPair {
    pub u: Vertex,
    pub v: Vertex,
    pub kind: TwinKind,
}

/// One pruning step: `removed` had twin `survivor` in the graph at the time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Elimination {
    pub removed: Vertex,
    pub survivor: Vertex,
    pub kind: TwinKind,
}

/// Result of repeated twin removal.
#[derive(Debug, Clone)]
pub struct TwinFree {
    /// Induced subgraph on `survivors`, relabelled `0..k`.
    pub graph: Graph,
    /// Original ids of the remaining vertices, ascending.
    pub survivors: Vec<Vertex>,
    /// Removals in the order they happened.
    pub eliminations: Vec<Elimination>,
}

/// Adjacency masks restricted to the `alive` vertices.
struct Neighbourhoods {
    open: Vec<Bits>,
}

impl Neighbourhoods {
    fn new(g: &Graph) -> Self {
        let open = (0..g.n())
            .map(|v| {
                let mut b = Bits::new(g.n());
                for &w in g.neighbors(v) {
                    b.insert(w);
                }
                b
            })
            .collect();
        Neighbourhoods { open }
    }

    fn remove(&mut self, v: Vertex) {
        for row in &mut self.open {
            row.remove(v);
        }
    }

    /// All twin pairs among `alive`, as `(u, v)` with `u < v`.
    fn twins(&self, alive: &Bits) -> Vec<TwinPair> {
        let mut by_open: BTreeMap<&[u64], Vec<Vertex>> = BTreeMap::new();
        let mut closed_rows = Vec::new();
        for v in alive.iter() {
            by_open.entry(self.open[v].words()).or_default().push(v);
            let mut c = self.open[v].clone();
            c.insert(v);
            closed_rows.push((c, v));
        }
        let mut by_closed: BTreeMap<&[u64], Vec<Vertex>> = BTreeMap::new();
        for (c, v) in &closed_rows {
            by_closed.entry(c.words()).or_default().push(*v);
        }
        let mut out = Vec::new();
        for (groups, kind) in [(by_closed, TwinKind::True), (by_open, TwinKind::False)] {
            for group in groups.values() {
                for (i, &u) in group.iter().enumerate() {
                    for &v in &group[i + 1..] {
                        out.push(TwinPair {
                            u: u.min(v),
                            v: u.max(v),
                            kind,
                        });
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Every twin pair `(u, v, kind)` with `u < v`, sorted.
pub fn find_twins(g: &Graph) -> Vec<TwinPair> {
    Neighbourhoods::new(g).twins(&Bits::full(g.n()))
}

/// Repeatedly removes the lowest-id vertex that has a twin, until none is
/// left. The recorded survivor is that vertex's lowest-id twin.
pub fn twin_free_subgraph(g: &Graph) -> TwinFree {
    let identity: Vec<usize> = (0..g.n()).collect();
    twin_free_subgraph_by_priority(g, &identity)
}

/// Twin pruning where, among vertices that currently have a twin, the one
/// with the smallest `priority` is removed first.
///
/// # Panics
/// If `priority.len() != g.n()`.
pub fn twin_free_subgraph_by_priority(g: &Graph, priority: &[usize]) -> TwinFree {
    assert_eq!(priority.len(), g.n());
    let mut nb = Neighbourhoods::new(g);
    let mut alive = Bits::full(g.n());
    let mut eliminations = Vec::new();
    loop {
        let twins = nb.twins(&alive);
        // (priority, removed, survivor, kind) minimised over both orientations
        let pick = twins
            .iter()
            .flat_map(|t| [(t.u, t.v, t.kind), (t.v, t.u, t.kind)])
            .min_by_key(|&(r, s, _)| (priority[r], r, s));
        let Some((removed, survivor, kind)) = pick else {
            break;
        };
        alive.remove(removed);
        nb.remove(removed);
        eliminations.push(Elimination {
            removed,
            survivor,
            kind,
        });
    }
    let survivors: Vec<Vertex> = alive.iter().collect();
    TwinFree {
        graph: g.induced_subgraph(&survivors),
        survivors,
        eliminations,
    }
}

/// A connected graph is a cograph iff twin pruning reduces it to one vertex.
pub fn is_cograph(g: &Graph) -> Result<bool, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok(twin_free_subgraph(g).survivors.len() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use alloc::vec;

    #[test]
    fn k2_true_twins() {
        let k2 = generators::path(2);
        assert_eq!(
            find_twins(&k2),
            vec![TwinPair {
                u: 0,
                v: 1,
                kind: TwinKind::True
            }]
        );
        assert!(is_cograph(&k2).unwrap());
    }

    #[test]
    fn p4_twin_free() {
        let p4 = generators::path(4);
        assert!(find_twins(&p4).is_empty());
        assert!(!is_cograph(&p4).unwrap());
    }

    #[test]
    fn c4_false_twins() {
        let c4 = generators::cycle(4);
        let t = find_twins(&c4);
        assert!(t.contains(&TwinPair {
            u: 0,
            v: 2,
            kind: TwinKind::False
        }));
        assert!(t.contains(&TwinPair {
            u: 1,
            v: 3,
            kind: TwinKind::False
        }));
        assert_eq!(t.len(), 2);
        assert!(is_cograph(&c4).unwrap());
    }

    #[test]
    fn disconnected_rejected() {
        assert_eq!(is_cograph(&Graph::empty(2)), Err(GraphError::Disconnected));
    }

    #[test]
    fn lowest_id_removed_first() {
        let tf = twin_free_subgraph(&generators::complete(3));
        assert_eq!(tf.survivors, vec![2]);
        assert_eq!(
            tf.eliminations[0],
            Elimination {
                removed: 0,
                survivor: 1,
                kind: TwinKind::True
            }
        );
    }
}
