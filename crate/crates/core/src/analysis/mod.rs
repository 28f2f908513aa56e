//! Exact analyses over mixed graphs: girth with a witness cycle, brute-force
//! cycle enumeration, regularity, strong connectivity, diameter and the
//! order bounds for mixed cages.

mod bounds;
mod connectivity;
mod cycles;
mod girth;

pub use bounds::{ahm_bound, bounds_report, mixed_lower_bound, moore_bound, BoundsError, BoundsReport, MixedLowerBound};
pub use connectivity::{diameter, format_cycle, is_strongly_connected, regularity, verify_zrg, Diameter, VerificationReport};
pub use cycles::{enumerate_cycles_upto, is_valid_cycle};
pub use girth::{girth, Girth, GirthReport};

use crate::graph::MixedGraph;

/// One traversable step out of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Step {
    pub to: usize,
    /// Edges are numbered `0..|E|`, arcs `|E|..|E|+|A|`; both directions of an
    /// edge share the id.
    pub element: usize,
}

/// Out-steps per vertex: edges in both directions, arcs forward.
pub(crate) struct Adjacency {
    pub out: Vec<Vec<Step>>,
}

impl Adjacency {
    pub fn new(graph: &MixedGraph) -> Self {
        Self::build(graph, false)
    }

    /// Steps of the reversed graph (arcs flipped).
    pub fn reversed(graph: &MixedGraph) -> Self {
        Self::build(graph, true)
    }

    fn build(graph: &MixedGraph, reverse: bool) -> Self {
        let mut out = vec![Vec::new(); graph.order()];
        for (element, &(u, v)) in graph.edges().iter().enumerate() {
            out[u].push(Step { to: v, element });
            out[v].push(Step { to: u, element });
        }
        let offset = graph.edges().len();
        for (i, &(u, v)) in graph.arcs().iter().enumerate() {
            let (from, to) = if reverse { (v, u) } else { (u, v) };
            out[from].push(Step { to, element: offset + i });
        }
        for steps in &mut out {
            steps.sort_unstable_by_key(|s| (s.to, s.element));
        }
        Self { out }
    }

    pub fn step(&self, from: usize, to: usize) -> Option<Step> {
        self.out[from].iter().copied().find(|s| s.to == to)
    }

    pub fn len(&self) -> usize {
        self.out.len()
    }

    /// Breadth-first distances from `source`; `usize::MAX` marks unreachable.
    pub fn distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        let mut queue = std::collections::VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for s in &self.out[u] {
                if dist[s.to] == usize::MAX {
                    dist[s.to] = dist[u] + 1;
                    queue.push_back(s.to);
                }
            }
        }
        dist
    }
}
