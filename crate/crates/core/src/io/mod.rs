//! File formats and reports: DOT export, the `mixed-graph/v1` JSON document
//! and the family catalog.

mod catalog;
mod dot;
mod json;

pub use catalog::{build_catalog, catalog_csv, catalog_markdown, CatalogRow, CSV_HEADER};
pub use dot::export_dot;
pub use json::{export_json, import_json, parse_document, read_graph, write_json, GraphDocument, FORMAT_TAG};

use thiserror::Error;

use crate::analysis::BoundsError;
use crate::generators::GeneratorError;
use crate::graph::GraphError;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported document format {0:?} (expected \"mixed-graph/v1\")")]
    UnsupportedFormat(String),
    #[error("invalid field {field}: {reason}")]
    Field { field: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
