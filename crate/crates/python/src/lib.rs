use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use mixcage::analysis::{
    ahm_bound as core_ahm_bound, diameter, is_strongly_connected, mixed_lower_bound as core_mixed_lower,
    moore_bound as core_moore_bound, regularity, Diameter,
};
use mixcage::generators::{self as gens, FamilyParams, Side};
use mixcage::io::{export_dot, import_json, parse_document, write_json};
use mixcage::{Field, Girth, VertexLabel};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn names(labels: &[VertexLabel]) -> Vec<String> {
    labels.iter().map(ToString::to_string).collect()
}

fn finite(girth: Girth) -> Option<usize> {
    match girth {
        Girth::Finite(k) => Some(k),
        Girth::Acyclic => None,
    }
}

/// A simple mixed graph: undirected edges and directed arcs over labelled
/// vertices. Labels are strings such as `(1,2)`, `[0,a]`, `P_inf` or `n3`.
#[pyclass(name = "MixedGraph", module = "mixcage", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMixedGraph {
    inner: mixcage::MixedGraph,
}

impl PyMixedGraph {
    fn field(&self) -> Option<Field> {
        self.inner.field_order().map(|q| Field::new(q).expect("graph field order is supported"))
    }

    fn label(&self, text: &str) -> PyResult<VertexLabel> {
        VertexLabel::parse(text, self.field()).map_err(value_error)
    }

    fn pair(&self, u: &str, v: &str) -> PyResult<(VertexLabel, VertexLabel)> {
        Ok((self.label(u)?, self.label(v)?))
    }

    fn wrap(result: Result<mixcage::MixedGraph, impl std::fmt::Display>) -> PyResult<Self> {
        result.map(|inner| Self { inner }).map_err(value_error)
    }
}

#[pymethods]
impl PyMixedGraph {
    #[new]
    #[pyo3(signature = (vertices, edges = Vec::new(), arcs = Vec::new(), field_order = None))]
    fn new(
        vertices: Vec<String>,
        edges: Vec<(String, String)>,
        arcs: Vec<(String, String)>,
        field_order: Option<u32>,
    ) -> PyResult<Self> {
        let field = field_order.map(Field::new).transpose().map_err(value_error)?;
        let parse = |s: &String| VertexLabel::parse(s, field).map_err(value_error);
        let parse_pairs = |list: &[(String, String)]| -> PyResult<Vec<(VertexLabel, VertexLabel)>> {
            list.iter().map(|(u, v)| Ok((parse(u)?, parse(v)?))).collect()
        };
        let labels = vertices.iter().map(parse).collect::<PyResult<Vec<_>>>()?;
        Self::wrap(mixcage::MixedGraph::build(labels, parse_pairs(&edges)?, parse_pairs(&arcs)?))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = parse_document(text).map_err(value_error)?;
        Self::wrap(import_json(&doc))
    }

    fn to_json(&self) -> String {
        write_json(&self.inner)
    }

    fn to_dot(&self) -> String {
        export_dot(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn field_order(&self) -> Option<u32> {
        self.inner.field_order()
    }

    fn vertices(&self) -> Vec<String> {
        names(self.inner.vertices())
    }

    fn edges(&self) -> Vec<(String, String)> {
        self.inner.edge_labels().map(|(u, v)| (u.to_string(), v.to_string())).collect()
    }

    fn arcs(&self) -> Vec<(String, String)> {
        self.inner.arc_labels().map(|(u, v)| (u.to_string(), v.to_string())).collect()
    }

    fn has_edge(&self, u: &str, v: &str) -> PyResult<bool> {
        let (u, v) = self.pair(u, v)?;
        Ok(self.inner.has_edge(&u, &v))
    }

    fn has_arc(&self, u: &str, v: &str) -> PyResult<bool> {
        let (u, v) = self.pair(u, v)?;
        Ok(self.inner.has_arc(&u, &v))
    }

    fn add_edge(&self, u: &str, v: &str) -> PyResult<Self> {
        let (u, v) = self.pair(u, v)?;
        Self::wrap(self.inner.add_edge(&u, &v))
    }

    fn add_arc(&self, u: &str, v: &str) -> PyResult<Self> {
        let (u, v) = self.pair(u, v)?;
        Self::wrap(self.inner.add_arc(&u, &v))
    }

    fn remove_edge(&self, u: &str, v: &str) -> PyResult<Self> {
        let (u, v) = self.pair(u, v)?;
        Self::wrap(self.inner.remove_edge(&u, &v))
    }

    fn orient_edge(&self, u: &str, v: &str) -> PyResult<Self> {
        let (u, v) = self.pair(u, v)?;
        Self::wrap(self.inner.orient_edge(&u, &v))
    }

    fn delete_vertices(&self, labels: Vec<String>) -> PyResult<Self> {
        let labels = labels.iter().map(|s| self.label(s)).collect::<PyResult<Vec<_>>>()?;
        Self::wrap(self.inner.delete_vertices(labels.iter()))
    }

    /// `(in_arcs, out_arcs, edges)` for every vertex, in vertex order.
    fn degree_profile(&self) -> Vec<(usize, usize, usize)> {
        self.inner.degree_profile().as_slice().iter().map(|d| (d.in_arcs, d.out_arcs, d.edges)).collect()
    }

    fn regularity(&self) -> Option<(usize, usize)> {
        regularity(&self.inner)
    }

    /// Length of a shortest mixed cycle, or `None` if there is none.
    fn girth(&self) -> Option<usize> {
        finite(mixcage::girth(&self.inner).girth)
    }

    fn girth_witness(&self) -> Option<Vec<String>> {
        mixcage::girth(&self.inner).witness.map(|w| names(&w))
    }

    fn is_strongly_connected(&self) -> bool {
        is_strongly_connected(&self.inner)
    }

    fn diameter(&self) -> Option<usize> {
        match diameter(&self.inner) {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }

    fn verify(&self, z: usize, r: usize, g: usize) -> Verification {
        let report = mixcage::verify_zrg(&self.inner, z, r, g);
        Verification {
            passed: report.passed,
            order: report.order,
            regularity: report.regularity,
            girth: finite(report.girth.girth),
            witness: report.girth.witness.as_deref().map(names),
            offending_vertex: report.offending_vertex.as_ref().map(|(l, _)| l.to_string()),
            text: report.to_string(),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!(
            "MixedGraph(order={}, edges={}, arcs={})",
            self.inner.order(),
            self.inner.edges().len(),
            self.inner.arcs().len()
        )
    }
}

/// Outcome of checking a graph against `[z, r; g]`.
#[pyclass(module = "mixcage", frozen, get_all)]
struct Verification {
    passed: bool,
    order: usize,
    regularity: Option<(usize, usize)>,
    girth: Option<usize>,
    witness: Option<Vec<String>>,
    offending_vertex: Option<String>,
    text: String,
}

#[pymethods]
impl Verification {
    fn __bool__(&self) -> bool {
        self.passed
    }

    fn __str__(&self) -> String {
        self.text.clone()
    }

    fn __repr__(&self) -> String {
        format!("Verification(passed={}, order={}, girth={:?})", self.passed, self.order, self.girth)
    }
}

fn graph(result: Result<mixcage::MixedGraph, gens::GeneratorError>) -> PyResult<PyMixedGraph> {
    PyMixedGraph::wrap(result)
}

#[pyfunction]
fn projective_incidence(q: u32) -> PyResult<PyMixedGraph> {
    graph(gens::gen_projective_incidence(q))
}

#[pyfunction]
fn biaffine(q: u32) -> PyResult<PyMixedGraph> {
    graph(gens::gen_biaffine(q))
}

#[pyfunction]
fn circulant(n: usize, jumps: Vec<usize>) -> PyResult<PyMixedGraph> {
    graph(gens::gen_circulant(n, &jumps))
}

#[pyfunction]
#[pyo3(signature = (q, side = "line", index = 0, to_copy = None, to_orig = None))]
fn bipartite_circulant(
    q: u32,
    side: &str,
    index: u32,
    to_copy: Option<Vec<u32>>,
    to_orig: Option<Vec<u32>>,
) -> PyResult<PyMixedGraph> {
    let side: Side = side.parse().map_err(value_error)?;
    let (to_copy, to_orig) = jumps(q, to_copy, to_orig)?;
    graph(gens::gen_bipartite_circulant(q, side, index, &to_copy, &to_orig))
}

fn jumps(q: u32, to_copy: Option<Vec<u32>>, to_orig: Option<Vec<u32>>) -> PyResult<(Vec<u32>, Vec<u32>)> {
    match (to_copy, to_orig) {
        (Some(c), Some(o)) => Ok((c, o)),
        (None, None) => Ok(FamilyParams::new(q).map_err(value_error)?.default_jumps()),
        _ => Err(PyValueError::new_err("to_copy and to_orig must be given together")),
    }
}

#[pyfunction]
#[pyo3(signature = (q, to_copy = None, to_orig = None))]
fn family(q: u32, to_copy: Option<Vec<u32>>, to_orig: Option<Vec<u32>>) -> PyResult<PyMixedGraph> {
    let (to_copy, to_orig) = jumps(q, to_copy, to_orig)?;
    graph(gens::gen_family_with_jumps(q, &to_copy, &to_orig))
}

/// `(p, z, r, order)` of the girth-6 family member for `q`.
#[pyfunction]
fn family_params(q: u32) -> PyResult<(u32, u32, u32, u64)> {
    let p = FamilyParams::new(q).map_err(value_error)?;
    Ok((p.p, p.z, p.r, p.order()))
}

#[pyfunction]
fn family_six_cycle(q: u32, m: u32, b: u32, x1: u32, x2: u32, j: u32) -> PyResult<Vec<String>> {
    gens::family_six_cycle(q, m, b, x1, x2, j).map(|c| names(&c)).map_err(value_error)
}

#[pyfunction]
fn cage_136() -> PyResult<PyMixedGraph> {
    graph(gens::gen_cage_136())
}

#[pyfunction]
fn moore_tree(r: usize, g: usize) -> PyResult<PyMixedGraph> {
    graph(gens::gen_moore_tree(r, g))
}

#[pyfunction]
fn lower_bound_witness(z: usize, r: usize, g: usize) -> PyResult<PyMixedGraph> {
    graph(gens::gen_lower_bound_witness(z, r, g))
}

#[pyfunction]
fn moore_bound(r: u64, g: u64) -> PyResult<u64> {
    core_moore_bound(r, g).map_err(value_error)
}

#[pyfunction]
fn ahm_bound(r: u64, g: u64) -> PyResult<u64> {
    core_ahm_bound(r, g).map_err(value_error)
}

/// `(value, assumes_conjecture)`.
#[pyfunction]
fn mixed_lower_bound(z: u64, r: u64, g: u64) -> PyResult<(u64, bool)> {
    core_mixed_lower(z, r, g).map(|b| (b.value, b.assumes_conjecture)).map_err(value_error)
}

#[pyfunction]
fn is_valid_cycle(graph: &PyMixedGraph, cycle: Vec<String>) -> PyResult<bool> {
    let labels = cycle.iter().map(|s| graph.label(s)).collect::<PyResult<Vec<_>>>()?;
    Ok(mixcage::analysis::is_valid_cycle(&graph.inner, &labels))
}

#[pymodule]
#[pyo3(name = "mixcage")]
fn mixcage_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMixedGraph>()?;
    m.add_class::<Verification>()?;
    m.add_function(wrap_pyfunction!(projective_incidence, m)?)?;
    m.add_function(wrap_pyfunction!(biaffine, m)?)?;
    m.add_function(wrap_pyfunction!(circulant, m)?)?;
    m.add_function(wrap_pyfunction!(bipartite_circulant, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(family_params, m)?)?;
    m.add_function(wrap_pyfunction!(family_six_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(cage_136, m)?)?;
    m.add_function(wrap_pyfunction!(moore_tree, m)?)?;
    m.add_function(wrap_pyfunction!(lower_bound_witness, m)?)?;
    m.add_function(wrap_pyfunction!(moore_bound, m)?)?;
    m.add_function(wrap_pyfunction!(ahm_bound, m)?)?;
    m.add_function(wrap_pyfunction!(mixed_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(is_valid_cycle, m)?)?;
    Ok(())
}
