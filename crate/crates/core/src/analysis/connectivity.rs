use std::fmt;

use rayon::prelude::*;

use crate::graph::{Degrees, MixedGraph, VertexLabel};

use super::girth::{girth, Girth, GirthReport};
use super::Adjacency;

/// `(z, r)` when every vertex has `z` in-arcs, `z` out-arcs and `r` edges.
pub fn regularity(graph: &MixedGraph) -> Option<(usize, usize)> {
    let d = graph.degree_profile().uniform()?;
    (d.in_arcs == d.out_arcs).then_some((d.in_arcs, d.edges))
}

/// Every ordered pair joined by a mixed path. Vacuously true for graphs with
/// fewer than two vertices.
pub fn is_strongly_connected(graph: &MixedGraph) -> bool {
    if graph.order() < 2 {
        return true;
    }
    let reaches_all = |adj: Adjacency| adj.distances(0).iter().all(|&d| d != usize::MAX);
    reaches_all(Adjacency::new(graph)) && reaches_all(Adjacency::reversed(graph))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

/// Largest mixed distance over ordered pairs.
pub fn diameter(graph: &MixedGraph) -> Diameter {
    let adj = Adjacency::new(graph);
    let eccentricities: Option<Vec<usize>> = (0..graph.order())
        .into_par_iter()
        .map(|s| {
            let dist = adj.distances(s);
            dist.iter().all(|&d| d != usize::MAX).then(|| dist.into_iter().max().unwrap_or(0))
        })
        .collect();
    match eccentricities {
        Some(e) => Diameter::Finite(e.into_iter().max().unwrap_or(0)),
        None => Diameter::Infinite,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub z: usize,
    pub r: usize,
    pub g: usize,
    pub order: usize,
    pub regularity: Option<(usize, usize)>,
    /// First vertex (canonical order) whose degrees differ from `(z, z, r)`.
    pub offending_vertex: Option<(VertexLabel, Degrees)>,
    pub girth: GirthReport,
    pub passed: bool,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "result {}", if self.passed { "pass" } else { "fail" })?;
        writeln!(f, "expected [{},{};{}]", self.z, self.r, self.g)?;
        writeln!(f, "order {}", self.order)?;
        match self.regularity {
            Some((z, r)) => writeln!(f, "regularity [{z},{r}]")?,
            None => writeln!(f, "regularity none")?,
        }
        if let Some((label, degrees)) = &self.offending_vertex {
            writeln!(f, "offending_vertex {label} {degrees}")?;
        }
        writeln!(f, "girth {}", self.girth.girth)?;
        if let Some(w) = &self.girth.witness {
            writeln!(f, "witness {}", format_cycle(w))?;
        }
        Ok(())
    }
}

/// Renders a cycle as `(v1 v2 ... vk)`.
pub fn format_cycle(cycle: &[VertexLabel]) -> String {
    let parts: Vec<String> = cycle.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(" "))
}

/// Checks that `graph` is a `[z, r; g]`-mixed graph: `(z, r)`-regular with
/// girth exactly `g`.
pub fn verify_zrg(graph: &MixedGraph, z: usize, r: usize, g: usize) -> VerificationReport {
    let expected = Degrees::new(z, z, r);
    let profile = graph.degree_profile();
    let offending_vertex = profile
        .as_slice()
        .iter()
        .position(|&d| d != expected)
        .map(|i| (graph.label(i).clone(), profile.get(i)));
    let girth_report = girth(graph);
    let passed = offending_vertex.is_none() && girth_report.girth == Girth::Finite(g);
    VerificationReport {
        z,
        r,
        g,
        order: graph.order(),
        regularity: regularity(graph),
        offending_vertex,
        girth: girth_report,
        passed,
    }
}
