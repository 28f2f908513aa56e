//! The mixed graph model: vertices carrying structured labels, undirected
//! edges and directed arcs.
//!
//! A [`MixedGraph`] is always simple and canonical. Vertices are sorted by
//! label, edges are stored as index pairs `(i, j)` with `i < j`, arcs as
//! `(tail, head)`, and both lists are sorted. Two graphs are equal exactly when
//! they have the same labelled vertices, edges and arcs.
//!
//! Antiparallel arcs `(u, v)` and `(v, u)` are allowed. An edge `{u, v}`
//! excludes arcs between `u` and `v` in either direction.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    /// Affine point `(x, y)`.
    Point(FieldElement, FieldElement),
    /// Line `[m, b]`, i.e. `y = m x + b`.
    Line(FieldElement, FieldElement),
    PointCopy(FieldElement, FieldElement),
    LineCopy(FieldElement, FieldElement),
    /// Point at infinity `P_i` shared by the lines of slope `i`.
    ClassPoint(FieldElement),
    /// Vertical line `L_i` through the points with first coordinate `i`.
    ClassLine(FieldElement),
    InfPoint,
    InfLine,
    Plain(usize),
    TreeNode(Vec<usize>),
}

impl VertexLabel {
    /// Field order of the coordinates carried by this label, if any.
    pub fn field_order(&self) -> Option<u32> {
        match self {
            VertexLabel::Point(a, _)
            | VertexLabel::Line(a, _)
            | VertexLabel::PointCopy(a, _)
            | VertexLabel::LineCopy(a, _)
            | VertexLabel::ClassPoint(a)
            | VertexLabel::ClassLine(a) => Some(a.order()),
            _ => None,
        }
    }

    fn coordinates_consistent(&self) -> bool {
        match self {
            VertexLabel::Point(a, b)
            | VertexLabel::Line(a, b)
            | VertexLabel::PointCopy(a, b)
            | VertexLabel::LineCopy(a, b) => a.order() == b.order(),
            _ => true,
        }
    }

    /// Parses the string form produced by `Display`. Coordinate labels need
    /// the field they were rendered from.
    pub fn parse(text: &str, field: Option<Field>) -> Result<Self, LabelParseError> {
        let err = |reason: &str| LabelParseError { text: text.to_string(), reason: reason.to_string() };
        let need_field = || field.ok_or_else(|| err("coordinate label without a field order"));
        let elem = |s: &str| -> Result<FieldElement, LabelParseError> {
            need_field()?.parse(s).map_err(|e: FieldError| err(&e.to_string()))
        };
        let pair = |inner: &str, primed: bool| -> Result<(FieldElement, FieldElement), LabelParseError> {
            let (a, b) = inner.split_once(',').ok_or_else(|| err("expected two coordinates"))?;
            if primed {
                let a = a.strip_suffix('\'').ok_or_else(|| err("expected primed coordinate"))?;
                let b = b.strip_suffix('\'').ok_or_else(|| err("expected primed coordinate"))?;
                Ok((elem(a)?, elem(b)?))
            } else {
                Ok((elem(a)?, elem(b)?))
            }
        };

        if let Some(inner) = text.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            let primed = inner.contains('\'');
            let (a, b) = pair(inner, primed)?;
            return Ok(if primed { VertexLabel::PointCopy(a, b) } else { VertexLabel::Point(a, b) });
        }
        if let Some(inner) = text.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let primed = inner.contains('\'');
            let (a, b) = pair(inner, primed)?;
            return Ok(if primed { VertexLabel::LineCopy(a, b) } else { VertexLabel::Line(a, b) });
        }
        match text {
            "P_inf" => return Ok(VertexLabel::InfPoint),
            "L_inf" => return Ok(VertexLabel::InfLine),
            _ => {}
        }
        if let Some(rest) = text.strip_prefix("P_") {
            return Ok(VertexLabel::ClassPoint(elem(rest)?));
        }
        if let Some(rest) = text.strip_prefix("L_") {
            return Ok(VertexLabel::ClassLine(elem(rest)?));
        }
        if let Some(rest) = text.strip_prefix('n') {
            return parse_index(rest).map(VertexLabel::Plain).ok_or_else(|| err("bad plain index"));
        }
        if let Some(rest) = text.strip_prefix('t') {
            let path = rest.split('.').map(parse_index).collect::<Option<Vec<_>>>();
            return match path {
                Some(path) if !rest.is_empty() => Ok(VertexLabel::TreeNode(path)),
                _ => Err(err("bad tree path")),
            };
        }
        Err(err("unrecognised label"))
    }
}

fn parse_index(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0')) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Point(x, y) => write!(f, "({x},{y})"),
            VertexLabel::Line(m, b) => write!(f, "[{m},{b}]"),
            VertexLabel::PointCopy(x, y) => write!(f, "({x}',{y}')"),
            VertexLabel::LineCopy(m, b) => write!(f, "[{m}',{b}']"),
            VertexLabel::ClassPoint(i) => write!(f, "P_{i}"),
            VertexLabel::ClassLine(i) => write!(f, "L_{i}"),
            VertexLabel::InfPoint => f.write_str("P_inf"),
            VertexLabel::InfLine => f.write_str("L_inf"),
            VertexLabel::Plain(k) => write!(f, "n{k}"),
            VertexLabel::TreeNode(path) => {
                f.write_str("t")?;
                for (i, step) in path.iter().enumerate() {
                    if i > 0 {
                        f.write_str(".")?;
                    }
                    write!(f, "{step}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid vertex label {text:?}: {reason}")]
pub struct LabelParseError {
    pub text: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("self-loop at {0}")]
    SelfLoop(String),
    #[error("duplicate edge {0} - {1}")]
    DuplicateEdge(String, String),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(String, String),
    #[error("arc {0} -> {1} is parallel to an edge")]
    ParallelArcEdge(String, String),
    #[error("labels from fields of different orders ({0} and {1})")]
    MixedFieldOrders(u32, u32),
    #[error("label {0} mixes coordinates from different fields")]
    InconsistentLabel(String),
    #[error("no edge between {0} and {1}")]
    MissingEdge(String, String),
}

/// In-arcs, out-arcs and edges at one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Degrees {
    pub in_arcs: usize,
    pub out_arcs: usize,
    pub edges: usize,
}

impl Degrees {
    pub const fn new(in_arcs: usize, out_arcs: usize, edges: usize) -> Self {
        Self { in_arcs, out_arcs, edges }
    }
}

impl fmt::Display for Degrees {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.in_arcs, self.out_arcs, self.edges)
    }
}

/// Per-vertex degree triples, indexed like [`MixedGraph::vertices`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    degrees: Vec<Degrees>,
}

impl DegreeProfile {
    pub fn get(&self, index: usize) -> Degrees {
        self.degrees[index]
    }

    pub fn as_slice(&self) -> &[Degrees] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn total_in(&self) -> usize {
        self.degrees.iter().map(|d| d.in_arcs).sum()
    }

    pub fn total_out(&self) -> usize {
        self.degrees.iter().map(|d| d.out_arcs).sum()
    }

    pub fn total_edge_degree(&self) -> usize {
        self.degrees.iter().map(|d| d.edges).sum()
    }

    /// The common triple if every vertex has the same one.
    pub fn uniform(&self) -> Option<Degrees> {
        let first = *self.degrees.first()?;
        self.degrees.iter().all(|&d| d == first).then_some(first)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    field_order: Option<u32>,
    vertices: Vec<VertexLabel>,
    edges: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
}


impl MixedGraph {
    /// Builds a simple mixed graph from labelled vertices, edges and arcs.
    /// Input order does not matter; the result is canonical.
    pub fn build<V, E, A>(vertices: V, edges: E, arcs: A) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = VertexLabel>,
        E: IntoIterator<Item = (VertexLabel, VertexLabel)>,
        A: IntoIterator<Item = (VertexLabel, VertexLabel)>,
    {
        let mut sorted: Vec<VertexLabel> = vertices.into_iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0].to_string()));
        }
        let mut field_order = None;
        for label in &sorted {
            if !label.coordinates_consistent() {
                return Err(GraphError::InconsistentLabel(label.to_string()));
            }
            if let Some(q) = label.field_order() {
                match field_order {
                    None => field_order = Some(q),
                    Some(p) if p != q => return Err(GraphError::MixedFieldOrders(p, q)),
                    _ => {}
                }
            }
        }
        let lookup = |label: &VertexLabel| {
            sorted.binary_search(label).map_err(|_| GraphError::UnknownVertex(label.to_string()))
        };
        let edges = edges
            .into_iter()
            .map(|(u, v)| Ok((lookup(&u)?, lookup(&v)?)))
            .collect::<Result<Vec<_>, GraphError>>()?;
        let arcs = arcs
            .into_iter()
            .map(|(u, v)| Ok((lookup(&u)?, lookup(&v)?)))
            .collect::<Result<Vec<_>, GraphError>>()?;
        Self::from_indices(field_order, sorted, edges, arcs)
    }

    /// Validates and canonicalises index pairs into an already sorted,
    /// duplicate-free vertex list.
    pub(crate) fn from_indices(
        field_order: Option<u32>,
        vertices: Vec<VertexLabel>,
        edges: Vec<(usize, usize)>,
        arcs: Vec<(usize, usize)>,
    ) -> Result<Self, GraphError> {
        let n = vertices.len();
        let name = |i: usize| vertices[i].to_string();
        for &(u, v) in edges.iter().chain(arcs.iter()) {
            if u >= n || v >= n {
                return Err(GraphError::UnknownVertex(format!("#{}", u.max(v))));
            }
            if u == v {
                return Err(GraphError::SelfLoop(name(u)));
            }
        }
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(name(w[0].0), name(w[0].1)));
        }
        let mut arcs = arcs;
        arcs.sort_unstable();
        if let Some(w) = arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateArc(name(w[0].0), name(w[0].1)));
        }
        for &(u, v) in &arcs {
            if edges.binary_search(&(u.min(v), u.max(v))).is_ok() {
                return Err(GraphError::ParallelArcEdge(name(u), name(v)));
            }
        }
        Ok(Self { field_order, vertices, edges, arcs })
    }

    pub fn field_order(&self) -> Option<u32> {
        self.field_order
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    /// Edges as sorted index pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Arcs as sorted `(tail, head)` index pairs.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn label(&self, index: usize) -> &VertexLabel {
        &self.vertices[index]
    }

    pub fn index_of(&self, label: &VertexLabel) -> Option<usize> {
        self.vertices.binary_search(label).ok()
    }

    fn require(&self, label: &VertexLabel) -> Result<usize, GraphError> {
        self.index_of(label).ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn contains(&self, label: &VertexLabel) -> bool {
        self.index_of(label).is_some()
    }

    pub fn has_edge(&self, u: &VertexLabel, v: &VertexLabel) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.edges.binary_search(&(i.min(j), i.max(j))).is_ok(),
            _ => false,
        }
    }

    pub fn has_arc(&self, u: &VertexLabel, v: &VertexLabel) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.arcs.binary_search(&(i, j)).is_ok(),
            _ => false,
        }
    }

    pub fn edge_labels(&self) -> impl Iterator<Item = (&VertexLabel, &VertexLabel)> + '_ {
        self.edges.iter().map(|&(u, v)| (&self.vertices[u], &self.vertices[v]))
    }

    pub fn arc_labels(&self) -> impl Iterator<Item = (&VertexLabel, &VertexLabel)> + '_ {
        self.arcs.iter().map(|&(u, v)| (&self.vertices[u], &self.vertices[v]))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = vec![Degrees::default(); self.vertices.len()];
        for &(u, v) in &self.edges {
            degrees[u].edges += 1;
            degrees[v].edges += 1;
        }
        for &(u, v) in &self.arcs {
            degrees[u].out_arcs += 1;
            degrees[v].in_arcs += 1;
        }
        DegreeProfile { degrees }
    }

    /// Replaces the edge `{u, v}` by the arc `(u, v)`.
    pub fn orient_edge(&self, u: &VertexLabel, v: &VertexLabel) -> Result<Self, GraphError> {
        let (i, j) = (self.require(u)?, self.require(v)?);
        let key = (i.min(j), i.max(j));
        let pos = self
            .edges
            .binary_search(&key)
            .map_err(|_| GraphError::MissingEdge(u.to_string(), v.to_string()))?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        let mut arcs = self.arcs.clone();
        arcs.push((i, j));
        Self::from_indices(self.field_order, self.vertices.clone(), edges, arcs)
    }

    pub fn remove_edge(&self, u: &VertexLabel, v: &VertexLabel) -> Result<Self, GraphError> {
        let (i, j) = (self.require(u)?, self.require(v)?);
        let pos = self
            .edges
            .binary_search(&(i.min(j), i.max(j)))
            .map_err(|_| GraphError::MissingEdge(u.to_string(), v.to_string()))?;
        let mut next = self.clone();
        next.edges.remove(pos);
        Ok(next)
    }

    pub fn add_edge(&self, u: &VertexLabel, v: &VertexLabel) -> Result<Self, GraphError> {
        let (i, j) = (self.require(u)?, self.require(v)?);
        let mut edges = self.edges.clone();
        edges.push((i, j));
        Self::from_indices(self.field_order, self.vertices.clone(), edges, self.arcs.clone())
    }

    pub fn add_arc(&self, u: &VertexLabel, v: &VertexLabel) -> Result<Self, GraphError> {
        let (i, j) = (self.require(u)?, self.require(v)?);
        let mut arcs = self.arcs.clone();
        arcs.push((i, j));
        Self::from_indices(self.field_order, self.vertices.clone(), self.edges.clone(), arcs)
    }

    /// Induced subgraph on the vertices not in `remove`.
    pub fn delete_vertices<'a, I>(&self, remove: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = &'a VertexLabel>,
    {
        let mut doomed = BTreeSet::new();
        for label in remove {
            doomed.insert(self.require(label)?);
        }
        let mut remap = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::with_capacity(self.vertices.len() - doomed.len());
        for (i, label) in self.vertices.iter().enumerate() {
            if !doomed.contains(&i) {
                remap[i] = vertices.len();
                vertices.push(label.clone());
            }
        }
        let keep = |&(u, v): &(usize, usize)| {
            let (a, b) = (remap[u], remap[v]);
            (a != usize::MAX && b != usize::MAX).then_some((a, b))
        };
        let edges = self.edges.iter().filter_map(keep).collect();
        let arcs = self.arcs.iter().filter_map(keep).collect();
        let field_order = vertices.iter().find_map(VertexLabel::field_order);
        Self::from_indices(field_order, vertices, edges, arcs)
    }

    /// Vertex-disjoint union. Fails if the two graphs share a label.
    pub fn disjoint_union(&self, other: &MixedGraph) -> Result<Self, GraphError> {
        Self::build(
            self.vertices.iter().chain(other.vertices.iter()).cloned(),
            self.edge_labels().chain(other.edge_labels()).map(|(u, v)| (u.clone(), v.clone())),
            self.arc_labels().chain(other.arc_labels()).map(|(u, v)| (u.clone(), v.clone())),
        )
    }

    /// True if some pair of vertices carries arcs in both directions.
    pub fn has_antiparallel_arcs(&self) -> bool {
        self.arcs.iter().any(|&(u, v)| self.arcs.binary_search(&(v, u)).is_ok())
    }
}
