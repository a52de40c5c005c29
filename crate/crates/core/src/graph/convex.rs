use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{bfs_distances, Distance, Graph, GraphError, Vertex};
use crate::PointSet;

fn interval_from_rows(du: &[Distance], dv: &[Distance], d: u32, out: &mut PointSet) {
    for (w, (a, b)) in du.iter().zip(dv).enumerate() {
        if let (Some(a), Some(b)) = (a, b) {
            if a + b == d {
                out.insert(w);
            }
        }
    }
}

/// All vertices lying on some shortest `(u, v)`-path.
pub fn geodesic_interval(g: &Graph, u: Vertex, v: Vertex) -> Result<PointSet, GraphError> {
    g.check_vertex(v)?;
    let du = bfs_distances(g, u)?;
    let d = du[v].ok_or(GraphError::DifferentComponents(u, v))?;
    let dv = bfs_distances(g, v)?;
    let mut out = PointSet::new(g.n());
    interval_from_rows(&du, &dv, d, &mut out);
    Ok(out)
}

/// Least superset of `s` closed under geodesic intervals.
///
/// Pairwise-interval fixpoint: each round adds the intervals between all
/// members until nothing changes. Distance rows are cached per member.
pub fn convex_hull(g: &Graph, s: &PointSet) -> Result<PointSet, GraphError> {
    assert_eq!(s.universe(), g.n(), "point set universe differs from graph");
    let mut hull = s.clone();
    let Some(first) = s.iter().next() else {
        return Ok(hull);
    };
    let mut rows: BTreeMap<Vertex, Vec<Distance>> = BTreeMap::new();
    let root = bfs_distances(g, first)?;
    if let Some(w) = s.iter().find(|&w| root[w].is_none()) {
        return Err(GraphError::DifferentComponents(first, w));
    }
    rows.insert(first, root);

    // pairs (a, b) already closed; only pairs with a new member need work
    let mut done: Vec<Vertex> = Vec::new();
    loop {
        let members: Vec<Vertex> = hull.iter().filter(|v| !done.contains(v)).collect();
        if members.is_empty() {
            break;
        }
        for &v in &members {
            if let Entry::Vacant(e) = rows.entry(v) {
                e.insert(bfs_distances(g, v)?);
            }
        }
        let mut grown = hull.clone();
        for (i, &a) in members.iter().enumerate() {
            let ra = &rows[&a];
            for &b in done.iter().chain(&members[..i]) {
                let d = ra[b].unwrap_or(0);
                interval_from_rows(ra, &rows[&b], d, &mut grown);
            }
        }
        done.extend(members);
        hull = grown;
    }
    Ok(hull)
}

pub fn is_convex(g: &Graph, s: &PointSet) -> Result<bool, GraphError> {
    Ok(convex_hull(g, s)? == *s)
}
