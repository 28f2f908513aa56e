use std::fs;
use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::graph::{MixedGraph, VertexLabel};

use super::IoError;

pub const FORMAT_TAG: &str = "mixed-graph/v1";

/// Serialized graph. Edge and arc entries index into `vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub format: String,
    pub field_order: Option<u32>,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
    pub arcs: Vec<[usize; 2]>,
}

pub fn export_json(graph: &MixedGraph) -> GraphDocument {
    GraphDocument {
        format: FORMAT_TAG.to_string(),
        field_order: graph.field_order(),
        vertices: graph.vertices().iter().map(ToString::to_string).collect(),
        edges: graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
        arcs: graph.arcs().iter().map(|&(u, v)| [u, v]).collect(),
    }
}

/// Compact JSON text with a trailing newline. Canonical graphs give
/// byte-identical output.
pub fn write_json(graph: &MixedGraph) -> String {
    let mut text = serde_json::to_string(&export_json(graph)).expect("document serializes");
    text.push('\n');
    text
}

pub fn parse_document(text: &str) -> Result<GraphDocument, IoError> {
    Ok(serde_json::from_str(text)?)
}

pub fn import_json(doc: &GraphDocument) -> Result<MixedGraph, IoError> {
    if doc.format != FORMAT_TAG {
        return Err(IoError::UnsupportedFormat(doc.format.clone()));
    }
    let field = doc
        .field_order
        .map(Field::new)
        .transpose()
        .map_err(|e| IoError::Field { field: "field_order".into(), reason: e.to_string() })?;
    let labels = doc
        .vertices
        .iter()
        .enumerate()
        .map(|(i, text)| {
            VertexLabel::parse(text, field)
                .map_err(|e| IoError::Field { field: format!("vertices[{i}]"), reason: e.to_string() })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let pairs = |name: &str, list: &[[usize; 2]]| -> Result<Vec<(VertexLabel, VertexLabel)>, IoError> {
        list.iter()
            .enumerate()
            .map(|(i, &[u, v])| {
                let field = format!("{name}[{i}]");
                for idx in [u, v] {
                    if idx >= labels.len() {
                        return Err(IoError::Field {
                            field,
                            reason: format!("vertex index {idx} out of range (have {})", labels.len()),
                        });
                    }
                }
                if u == v {
                    return Err(IoError::Field { field, reason: format!("self-loop at {}", labels[u]) });
                }
                Ok((labels[u].clone(), labels[v].clone()))
            })
            .collect()
    };
    let edges = pairs("edges", &doc.edges)?;
    let arcs = pairs("arcs", &doc.arcs)?;
    let graph = MixedGraph::build(labels.iter().cloned(), edges, arcs)?;
    if let (Some(declared), Some(actual)) = (doc.field_order, graph.field_order()) {
        if declared != actual {
            return Err(IoError::Field {
                field: "field_order".into(),
                reason: format!("declared {declared} but labels use {actual}"),
            });
        }
    }
    Ok(graph)
}

/// Reads a graph document from `path`, or standard input for `-`.
pub fn read_graph(path: &str, stdin: &mut dyn Read) -> Result<MixedGraph, IoError> {
    let text = if path == "-" {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(path)?
    };
    import_json(&parse_document(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_cage_136, gen_moore_tree};

    #[test]
    fn round_trip_cage() {
        let g = gen_cage_136().unwrap();
        let text = write_json(&g);
        let back = import_json(&parse_document(&text).unwrap()).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_json(&back), text);
    }

    #[test]
    fn document_keys() {
        let text = write_json(&gen_moore_tree(2, 4).unwrap());
        assert!(text.starts_with("{\"format\":\"mixed-graph/v1\",\"field_order\":null,\"vertices\":["));
        assert!(text.contains(",\"edges\":[["));
        assert!(text.contains(",\"arcs\":[["));
    }

    #[test]
    fn rejects_bad_documents() {
        let mut doc = export_json(&gen_moore_tree(2, 4).unwrap());
        doc.format = "mixed-graph/v2".into();
        assert!(matches!(import_json(&doc), Err(IoError::UnsupportedFormat(f)) if f == "mixed-graph/v2"));

        let mut doc = export_json(&gen_moore_tree(2, 4).unwrap());
        doc.arcs.push([1, 1]);
        let err = import_json(&doc).unwrap_err();
        assert!(err.to_string().contains("self-loop"), "{err}");
        assert!(err.to_string().contains("arcs["), "{err}");

        let mut doc = export_json(&gen_moore_tree(2, 4).unwrap());
        doc.edges.push([0, 99]);
        assert!(import_json(&doc).unwrap_err().to_string().contains("edges["));

        let mut doc = export_json(&gen_moore_tree(2, 4).unwrap());
        doc.vertices[0] = "(0,0)".into();
        assert!(import_json(&doc).unwrap_err().to_string().contains("vertices[0]"));

        assert!(matches!(parse_document("{\"format\":\"mixed-graph/v1\"}"), Err(IoError::Json(_))));
    }
}
