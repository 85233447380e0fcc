//! Ontology text formats: DL text (`.dlt`) and OWL 2 functional syntax (`.ofn`).

pub mod dltext;
pub mod owl;

use std::path::Path;

use thiserror::Error;

use crate::dlmodel::Ontology;

pub use dltext::{axiom_to_dl, expr_to_dl, parse_axiom, parse_dl_blocks, parse_dl_text, parse_expr, to_dl_text, DlBlock};
pub use owl::{parse_owl_functional, to_owl_functional, DEFAULT_NAMESPACE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

/// Parses by extension: `.ofn`/`.owl` as OWL functional syntax, anything else as DL text.
pub fn parse_by_extension(path: &Path, text: &str) -> Result<Ontology, ParseError> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("ofn" | "owl") => parse_owl_functional(text),
        _ => parse_dl_text(text),
    }
}
