use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::graph::{MixedGraph, VertexLabel};

use super::Adjacency;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GirthReport {
    pub girth: Girth,
    /// A shortest cycle in traversal order; absent for acyclic graphs.
    pub witness: Option<Vec<VertexLabel>>,
}

/// A first move `from -> to` along `element`, closed into a cycle by a
/// shortest path `to ~> from` that avoids `element`.
#[derive(Debug, Clone, Copy)]
struct Start {
    from: usize,
    to: usize,
    element: usize,
}

struct Scratch {
    dist: Vec<usize>,
    parent: Vec<usize>,
    touched: Vec<usize>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self { dist: vec![usize::MAX; n], parent: vec![usize::MAX; n], touched: Vec::new() }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.dist[v] = usize::MAX;
            self.parent[v] = usize::MAX;
        }
        self.touched.clear();
    }
}

/// Shortest path `start.to ~> start.from` that skips `start.element` and has
/// at most `max_len` steps. Returns the path vertices, `start.to` first.
fn closing_path(adj: &Adjacency, start: Start, max_len: usize, scratch: &mut Scratch) -> Option<Vec<usize>> {
    scratch.reset();
    let (source, target) = (start.to, start.from);
    scratch.dist[source] = 0;
    scratch.touched.push(source);
    let mut frontier = vec![source];
    let mut depth = 0;
    while !frontier.is_empty() && depth < max_len {
        let mut next = Vec::new();
        for &u in &frontier {
            for s in &adj.out[u] {
                if s.element == start.element || scratch.dist[s.to] != usize::MAX {
                    continue;
                }
                scratch.dist[s.to] = depth + 1;
                scratch.parent[s.to] = u;
                scratch.touched.push(s.to);
                if s.to == target {
                    let mut path = vec![target];
                    let mut v = target;
                    while v != source {
                        v = scratch.parent[v];
                        path.push(v);
                    }
                    path.reverse();
                    return Some(path);
                }
                next.push(s.to);
            }
        }
        frontier = next;
        depth += 1;
    }
    None
}

/// Exact girth by one breadth-first search per traversal start: every arc
/// forward, every edge in both orientations. Ties are broken by the canonical
/// order of starts, so the witness is deterministic.
pub fn girth(graph: &MixedGraph) -> GirthReport {
    let adj = Adjacency::new(graph);
    let n_edges = graph.edges().len();
    let mut starts = Vec::with_capacity(2 * n_edges + graph.arcs().len());
    for (element, &(u, v)) in graph.edges().iter().enumerate() {
        starts.push(Start { from: u, to: v, element });
        starts.push(Start { from: v, to: u, element });
    }
    for (i, &(u, v)) in graph.arcs().iter().enumerate() {
        starts.push(Start { from: u, to: v, element: n_edges + i });
    }

    // Best cycle length seen so far. Searches keep cycles of equal length so
    // the canonical minimum never gets pruned.
    let best = AtomicUsize::new(usize::MAX);
    let n = graph.order();
    let found = starts
        .par_iter()
        .enumerate()
        .map_init(
            || Scratch::new(n),
            |scratch, (k, &start)| {
                let limit = best.load(Ordering::Relaxed);
                let max_path = if limit == usize::MAX { n } else { limit - 1 };
                let path = closing_path(&adj, start, max_path, scratch)?;
                let len = path.len();
                best.fetch_min(len, Ordering::Relaxed);
                Some((len, k, start.from, path))
            },
        )
        .flatten()
        .min_by_key(|&(len, k, _, _)| (len, k));

    match found {
        None => GirthReport { girth: Girth::Acyclic, witness: None },
        Some((len, _, from, path)) => {
            let mut cycle = Vec::with_capacity(len);
            cycle.push(graph.label(from).clone());
            cycle.extend(path[..path.len() - 1].iter().map(|&v| graph.label(v).clone()));
            GirthReport { girth: Girth::Finite(len), witness: Some(cycle) }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::is_valid_cycle;
    use crate::generators::{gen_biaffine, gen_circulant, gen_family, gen_moore_tree, gen_projective_incidence};

    fn n(k: usize) -> VertexLabel {
        VertexLabel::Plain(k)
    }

    #[test]
    fn triangle() {
        let g = MixedGraph::build([n(0), n(1), n(2)], [(n(0), n(1)), (n(1), n(2)), (n(0), n(2))], []).unwrap();
        let report = girth(&g);
        assert_eq!(report.girth, Girth::Finite(3));
        assert_eq!(report.witness, Some(vec![n(0), n(1), n(2)]));
    }

    #[test]
    fn digon() {
        let g = MixedGraph::build([n(0), n(1)], [], [(n(0), n(1)), (n(1), n(0))]).unwrap();
        assert_eq!(girth(&g).girth, Girth::Finite(2));
    }

    #[test]
    fn single_edge_is_not_a_cycle() {
        let g = MixedGraph::build([n(0), n(1)], [(n(0), n(1))], []).unwrap();
        assert_eq!(girth(&g), GirthReport { girth: Girth::Acyclic, witness: None });
        assert_eq!(girth(&MixedGraph::default()).girth, Girth::Acyclic);
    }

    #[test]
    fn arcs_only_traverse_forward() {
        // a -> b, b - c, a - c: cycle a b c
        let g = MixedGraph::build([n(0), n(1), n(2)], [(n(1), n(2)), (n(0), n(2))], [(n(0), n(1))]).unwrap();
        assert_eq!(girth(&g).girth, Girth::Finite(3));
        // a -> b, c -> b, a - c: no way back to a
        let g = MixedGraph::build([n(0), n(1), n(2)], [(n(0), n(2))], [(n(0), n(1)), (n(2), n(1))]).unwrap();
        assert_eq!(girth(&g).girth, Girth::Acyclic);
    }

    #[test]
    fn known_girths() {
        assert_eq!(girth(&gen_biaffine(2).unwrap()).girth, Girth::Finite(8));
        assert_eq!(girth(&gen_biaffine(3).unwrap()).girth, Girth::Finite(6));
        assert_eq!(girth(&gen_projective_incidence(2).unwrap()).girth, Girth::Finite(6));
        assert_eq!(girth(&gen_circulant(6, &[1]).unwrap()).girth, Girth::Finite(6));
        assert_eq!(girth(&gen_circulant(11, &[1, 2]).unwrap()).girth, Girth::Finite(6));
        assert_eq!(girth(&gen_circulant(5, &[1, 2, 3, 4]).unwrap()).girth, Girth::Finite(2));
        assert_eq!(girth(&gen_family(3).unwrap()).girth, Girth::Finite(6));
        assert_eq!(girth(&gen_moore_tree(3, 7).unwrap()).girth, Girth::Acyclic);
    }

    #[test]
    fn witness_is_valid_and_deterministic() {
        let g = gen_family(5).unwrap();
        let first = girth(&g);
        for _ in 0..3 {
            assert_eq!(girth(&g), first);
        }
        assert!(is_valid_cycle(&g, first.witness.as_ref().unwrap()));
        assert_eq!(first.witness.unwrap().len(), 6);
    }
}
