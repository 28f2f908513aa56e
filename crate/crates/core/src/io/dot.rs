use std::fmt::Write;

use crate::graph::{MixedGraph, VertexLabel};

fn quoted(label: &VertexLabel) -> String {
    let text = label.to_string();
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Renders `graph` as a DOT digraph: vertex statements in canonical order,
/// then edges as `"u" -> "v" [dir=none];` with `u < v`, then arcs.
pub fn export_dot(graph: &MixedGraph) -> String {
    let names: Vec<String> = graph.vertices().iter().map(quoted).collect();
    let mut out = String::from("digraph G {\n");
    for name in &names {
        let _ = writeln!(out, "  {name};");
    }
    for &(u, v) in graph.edges() {
        let _ = writeln!(out, "  {} -> {} [dir=none];", names[u], names[v]);
    }
    for &(u, v) in graph.arcs() {
        let _ = writeln!(out, "  {} -> {};", names[u], names[v]);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arc_and_edge() {
        let a = VertexLabel::Plain(0);
        let b = VertexLabel::Plain(1);
        let arc = MixedGraph::build([a.clone(), b.clone()], [], [(a.clone(), b.clone())]).unwrap();
        assert_eq!(export_dot(&arc), "digraph G {\n  \"n0\";\n  \"n1\";\n  \"n0\" -> \"n1\";\n}\n");
        let edge = MixedGraph::build([a.clone(), b.clone()], [(b, a)], []).unwrap();
        assert!(export_dot(&edge).contains("\"n0\" -> \"n1\" [dir=none];"));
    }
}
