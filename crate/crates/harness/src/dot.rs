//! Graphviz export.

use std::fmt::Write;

use rainbow_core::{Graph, RainbowAssignment};

/// Undirected DOT text for `g`. With a labeling, every vertex shows its color
/// set and is drawn by class: empty vertices as small gray circles, singletons
/// filled black, full sets as black crosses.
pub fn to_dot(g: &Graph, f: Option<&RainbowAssignment>) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", g.family()).unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
    for v in 0..g.vertex_count() {
        match f {
            None => writeln!(out, "  {v};").unwrap(),
            Some(f) => {
                let label = f.label(v);
                let style = if label.is_empty() {
                    "style=filled, fillcolor=gray85, fontcolor=black"
                } else if label.len() == u32::from(f.colors()) {
                    "shape=Msquare, style=filled, fillcolor=black, fontcolor=white"
                } else {
                    "style=filled, fillcolor=black, fontcolor=white"
                };
                writeln!(out, "  {v} [label=\"{v}\\n{label}\", {style}];").unwrap();
            }
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
