use crate::field::Field;
use crate::graph::{MixedGraph, VertexLabel};

use super::Result;

/// Incidence graph of the projective plane `PG(2, q)`: affine points and
/// lines, the `q` points `P_i` and lines `L_i` at infinity, and the incident
/// pair `P_inf`, `L_inf`. The result is `(q+1)`-regular of order
/// `2q^2 + 2q + 2`.
pub fn gen_projective_incidence(q: u32) -> Result<MixedGraph> {
    let field = Field::new(q)?;
    let (mut vertices, mut edges) = affine_part(field);
    for i in field.elements() {
        vertices.push(VertexLabel::ClassPoint(i));
        vertices.push(VertexLabel::ClassLine(i));
        for j in field.elements() {
            edges.push((VertexLabel::ClassLine(i), VertexLabel::Point(i, j)));
            edges.push((VertexLabel::ClassPoint(i), VertexLabel::Line(i, j)));
        }
        edges.push((VertexLabel::InfLine, VertexLabel::ClassPoint(i)));
        edges.push((VertexLabel::InfPoint, VertexLabel::ClassLine(i)));
    }
    vertices.push(VertexLabel::InfPoint);
    vertices.push(VertexLabel::InfLine);
    edges.push((VertexLabel::InfLine, VertexLabel::InfPoint));
    Ok(MixedGraph::build(vertices, edges, [])?)
}

/// Biaffine incidence graph `B_q`: points `(x, y)` and lines `[m, b]` with
/// `y = m x + b`.
pub fn gen_biaffine(q: u32) -> Result<MixedGraph> {
    let field = Field::new(q)?;
    let (vertices, edges) = affine_part(field);
    Ok(MixedGraph::build(vertices, edges, [])?)
}

/// Vertices of `gen_projective_incidence(q)` that are not affine points or
/// lines; deleting them leaves the biaffine graph.
pub fn non_affine_vertices(q: u32) -> Result<Vec<VertexLabel>> {
    let field = Field::new(q)?;
    let mut out: Vec<VertexLabel> = field
        .elements()
        .flat_map(|i| [VertexLabel::ClassPoint(i), VertexLabel::ClassLine(i)])
        .collect();
    out.extend([VertexLabel::InfPoint, VertexLabel::InfLine]);
    Ok(out)
}

pub(super) type LabelPairs = Vec<(VertexLabel, VertexLabel)>;

pub(super) fn affine_part(field: Field) -> (Vec<VertexLabel>, LabelPairs) {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for a in field.elements() {
        for b in field.elements() {
            vertices.push(VertexLabel::Point(a, b));
            vertices.push(VertexLabel::Line(a, b));
            for x in field.elements() {
                edges.push((VertexLabel::Line(a, b), VertexLabel::Point(x, a * x + b)));
            }
        }
    }
    (vertices, edges)
}
