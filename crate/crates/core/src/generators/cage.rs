//! The 30-vertex `[1,3;6]` mixed cage, carved out of the incidence graph of
//! `PG(2, 4)` by a fixed sequence of local edits.

use std::fmt;

use crate::field::{Field, FieldElement};
use crate::graph::{MixedGraph, VertexLabel};

use super::incidence::gen_projective_incidence;
use super::{GeneratorError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurgeryStep {
    EraseVertex(VertexLabel),
    /// Delete edge `uv` and add arc `(u, v)`.
    DirectEdge(VertexLabel, VertexLabel),
    AddArc(VertexLabel, VertexLabel),
    RemoveEdge(VertexLabel, VertexLabel),
    AddEdge(VertexLabel, VertexLabel),
}

impl fmt::Display for SurgeryStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurgeryStep::EraseVertex(v) => write!(f, "erase {v}"),
            SurgeryStep::DirectEdge(u, v) => write!(f, "direct {u} -> {v}"),
            SurgeryStep::AddArc(u, v) => write!(f, "add arc {u} -> {v}"),
            SurgeryStep::RemoveEdge(u, v) => write!(f, "remove edge {u} - {v}"),
            SurgeryStep::AddEdge(u, v) => write!(f, "add edge {u} - {v}"),
        }
    }
}

/// Applies `steps` in order. Erasures are batched per run of consecutive
/// erase steps.
pub fn apply_surgery(graph: &MixedGraph, steps: &[SurgeryStep]) -> Result<MixedGraph> {
    let mut g = graph.clone();
    let mut i = 0;
    while i < steps.len() {
        let wrap = |step: usize| move |source| GeneratorError::Surgery { step, source };
        g = match &steps[i] {
            SurgeryStep::EraseVertex(_) => {
                let start = i;
                let mut doomed = Vec::new();
                while let Some(SurgeryStep::EraseVertex(v)) = steps.get(i) {
                    doomed.push(v);
                    i += 1;
                }
                i -= 1;
                g.delete_vertices(doomed).map_err(wrap(start))?
            }
            SurgeryStep::DirectEdge(u, v) => g.orient_edge(u, v).map_err(wrap(i))?,
            SurgeryStep::AddArc(u, v) => g.add_arc(u, v).map_err(wrap(i))?,
            SurgeryStep::RemoveEdge(u, v) => g.remove_edge(u, v).map_err(wrap(i))?,
            SurgeryStep::AddEdge(u, v) => g.add_edge(u, v).map_err(wrap(i))?,
        };
        i += 1;
    }
    Ok(g)
}

/// The edit script turning `PG(2, 4)` into the `[1,3;6]` cage. GF(4) is
/// written `0, 1, a, a2` with `a^2 = a + 1`.
pub fn cage_136_script() -> Vec<SurgeryStep> {
    use SurgeryStep::*;
    use VertexLabel::{ClassLine, ClassPoint, InfLine, InfPoint};

    let f = Field::new(4).expect("GF(4)");
    let e = |v: u32| -> FieldElement { f.element(v).expect("GF(4) element") };
    let (o, one, a, a2) = (e(0), e(1), e(2), e(3));
    let pt = |x, y| VertexLabel::Point(x, y);
    let ln = |m, b| VertexLabel::Line(m, b);

    let mut steps = Vec::new();

    // 1: six lines and six points go.
    for m in [o, one] {
        steps.push(EraseVertex(ln(m, o)));
        steps.push(EraseVertex(ln(m, one)));
    }
    steps.push(EraseVertex(ln(a, a)));
    steps.push(EraseVertex(ln(a, a2)));
    for x in [one, a] {
        steps.push(EraseVertex(pt(x, o)));
        steps.push(EraseVertex(pt(x, one)));
    }
    steps.push(EraseVertex(pt(a2, a)));
    steps.push(EraseVertex(pt(a2, a2)));

    // 2: a directed path through the infinite elements.
    steps.extend([
        DirectEdge(ln(a2, a), ClassPoint(a2)),
        DirectEdge(ClassPoint(a2), InfLine),
        DirectEdge(InfLine, InfPoint),
        DirectEdge(InfPoint, ClassLine(o)),
        DirectEdge(ClassLine(o), pt(o, a2)),
    ]);

    // 3
    steps.extend([
        AddArc(ClassPoint(o), ClassLine(a2)),
        AddArc(ClassPoint(one), ClassLine(a)),
        AddArc(ClassPoint(a), ClassLine(one)),
        DirectEdge(ln(a, o), pt(one, a)),
        DirectEdge(ln(a, one), pt(one, a2)),
    ]);

    // 4
    steps.extend([
        AddArc(ClassLine(one), pt(o, a)),
        DirectEdge(pt(one, a), ln(o, a)),
        DirectEdge(pt(one, a2), ln(one, a)),
        AddArc(ClassLine(a), pt(o, one)),
        DirectEdge(pt(a, a), ln(a, one)),
        AddArc(ClassLine(a2), pt(o, o)),
        DirectEdge(pt(a2, one), ln(a, o)),
    ]);

    // 5
    steps.extend([
        AddArc(ln(a2, o), ClassPoint(one)),
        AddArc(ln(a2, one), ClassPoint(o)),
        AddArc(ln(a2, a2), ClassPoint(a)),
    ]);

    // 6
    steps.extend([
        AddArc(ln(o, a), pt(a2, o)),
        DirectEdge(pt(o, a), ln(a2, a)),
        RemoveEdge(pt(a2, o), ln(one, a2)),
        AddArc(ln(o, a2), pt(a2, one)),
        DirectEdge(pt(o, a2), ln(a2, a2)),
        RemoveEdge(pt(a, a2), ln(o, a2)),
    ]);

    // 7
    steps.extend([AddArc(ln(one, a), pt(a, a2)), AddArc(ln(one, a2), pt(a, a))]);

    // 8: match lines lacking an out-arc with points lacking an in-arc.
    steps.extend([
        AddArc(pt(o, one), ln(o, a2)),
        AddArc(pt(o, o), ln(one, a2)),
        AddArc(pt(a2, o), ln(a2, o)),
        AddArc(pt(a, a2), ln(a2, one)),
    ]);

    // 9
    steps.push(AddEdge(ln(a2, a), pt(o, a2)));
    steps
}

pub fn gen_cage_136() -> Result<MixedGraph> {
    apply_surgery(&gen_projective_incidence(4)?, &cage_136_script())
}
