use std::fmt::Write as _;

use mutvis_core::{Graph, PointSet};

/// Graphviz text for `g`; members of `points` are filled red.
pub fn to_dot(g: &Graph, points: Option<&PointSet>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        if points.is_some_and(|p| p.contains(v)) {
            let _ = writeln!(out, "  {v} [style=filled, fillcolor=red];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use mutvis_core::generators;

    #[test]
    fn marks_points() {
        let p = PointSet::collect(3, [1]);
        let dot = to_dot(&generators::path(3), Some(&p));
        assert_eq!(
            dot,
            "graph G {\n  node [shape=circle];\n  0;\n  1 [style=filled, fillcolor=red];\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
    }
}
