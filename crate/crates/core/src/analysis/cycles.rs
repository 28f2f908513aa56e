use std::collections::BTreeSet;

use crate::graph::{MixedGraph, VertexLabel};

use super::Adjacency;

/// Checks that `cycle` is a simple mixed cycle of `graph`, in traversal order:
/// distinct vertices, each consecutive pair (wrapping around) joined by an
/// edge or a forward arc, and no element used twice.
pub fn is_valid_cycle(graph: &MixedGraph, cycle: &[VertexLabel]) -> bool {
    if cycle.len() < 2 {
        return false;
    }
    let Some(indices) = cycle.iter().map(|l| graph.index_of(l)).collect::<Option<Vec<_>>>() else {
        return false;
    };
    let distinct: BTreeSet<_> = indices.iter().collect();
    if distinct.len() != indices.len() {
        return false;
    }
    let adj = Adjacency::new(graph);
    let mut used = BTreeSet::new();
    for (i, &u) in indices.iter().enumerate() {
        let v = indices[(i + 1) % indices.len()];
        match adj.step(u, v) {
            Some(step) if used.insert(step.element) => {}
            _ => return false,
        }
    }
    true
}

/// Only all-edge cycles are the same cycle when read backwards; reversing a
/// cycle with an arc uses different elements or is not a cycle at all.
fn undirected_only(adj: &Adjacency, cycle: &[usize], n_edges: usize) -> bool {
    (0..cycle.len()).all(|i| {
        adj.step(cycle[i], cycle[(i + 1) % cycle.len()]).is_some_and(|s| s.element < n_edges)
    })
}

struct Enumerator<'a> {
    adj: &'a Adjacency,
    n_edges: usize,
    max_len: usize,
    on_path: Vec<bool>,
    path: Vec<usize>,
    first_element: usize,
    found: BTreeSet<(usize, Vec<usize>)>,
}

impl Enumerator<'_> {
    fn extend(&mut self, start: usize) {
        let current = *self.path.last().expect("path starts at the root");
        for &step in &self.adj.out[current] {
            if step.to == start {
                let closing_reuses = self.path.len() == 2 && step.element == self.first_element;
                if self.path.len() >= 2 && !closing_reuses {
                    self.record();
                }
                continue;
            }
            if step.to < start || self.on_path[step.to] || self.path.len() >= self.max_len {
                continue;
            }
            if self.path.len() == 1 {
                self.first_element = step.element;
            }
            self.on_path[step.to] = true;
            self.path.push(step.to);
            self.extend(start);
            self.path.pop();
            self.on_path[step.to] = false;
        }
    }

    /// Stores the current path as a cycle in canonical form: smallest vertex
    /// first and, for all-edge cycles, the lexicographically smaller direction.
    fn record(&mut self) {
        let forward = self.path.clone();
        let mut backward = Vec::with_capacity(forward.len());
        backward.push(forward[0]);
        backward.extend(forward[1..].iter().rev());
        let canonical = if backward < forward && undirected_only(self.adj, &forward, self.n_edges) { backward } else { forward };
        self.found.insert((canonical.len(), canonical));
    }
}

/// Every simple mixed cycle with at most `max_len` vertices, by exhaustive
/// depth-first search. Cycles are canonical (smallest label first, then the
/// smaller direction for all-edge cycles), deduplicated, and sorted by length then labels.
/// Exponential in `max_len`; meant as an oracle on small graphs.
pub fn enumerate_cycles_upto(graph: &MixedGraph, max_len: usize) -> Vec<Vec<VertexLabel>> {
    let adj = Adjacency::new(graph);
    let n = graph.order();
    let mut en = Enumerator {
        adj: &adj,
        n_edges: graph.edges().len(),
        max_len,
        on_path: vec![false; n],
        path: Vec::with_capacity(max_len),
        first_element: usize::MAX,
        found: BTreeSet::new(),
    };
    if max_len >= 2 {
        for start in 0..n {
            en.path.clear();
            en.path.push(start);
            en.on_path[start] = true;
            en.extend(start);
            en.on_path[start] = false;
        }
    }
    en.found
        .into_iter()
        .map(|(_, cycle)| cycle.into_iter().map(|v| graph.label(v).clone()).collect())
        .collect()
}
