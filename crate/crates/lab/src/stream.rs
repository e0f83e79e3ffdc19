//! Graph input with provenance: files or standard input, graph6 streams or
//! single edge-list documents, sniffed by the first meaningful byte.
//!
//! graph6 lines begin with a byte in 63..=126, so a leading ASCII digit or
//! `#` unambiguously marks an edge-list document.

use std::io::Read;

use hsolab_core::canon::{CanonError, Deduper};
use hsolab_core::graph::{Graph, GraphClassSpec};
use thiserror::Error;

use crate::edge_list::{parse_edge_list, EdgeListError};
use crate::graph6::{parse_graph6, Graph6Error, STREAM_HEADER};

/// A parsed graph tagged with where it came from (`path:line`).
#[derive(Debug, Clone, PartialEq)]
pub struct GraphRecord {
    pub source: String,
    pub graph: Graph,
}

/// Optional cap on buffered input graphs, as a decimal count.
pub const BUFFER_CAP_ENV: &str = "HSOLAB_ENUM_BUFFER_CAP";

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {err}")]
    Io {
        path: String,
        #[source]
        err: std::io::Error,
    },
    #[error("{source_name}: {err}")]
    Graph6 { source_name: String, err: Graph6Error },
    #[error("{source_name}: {err}")]
    EdgeList { source_name: String, err: EdgeListError },
    #[error("input exceeds {cap} buffered graphs (HSOLAB_ENUM_BUFFER_CAP is set)")]
    BufferCapExceeded { cap: usize },
}

/// Reads every graph from a path, with `-` meaning standard input.
pub fn read_graphs(path: &str) -> Result<Vec<GraphRecord>, InputError> {
    let (name, text) = if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|err| InputError::Io { path: "<stdin>".into(), err })?;
        ("<stdin>".to_owned(), text)
    } else {
        let text = std::fs::read_to_string(path)
            .map_err(|err| InputError::Io { path: path.to_owned(), err })?;
        (path.to_owned(), text)
    };
    parse_graph_stream(&name, &text)
}

/// Parses a whole document as either a graph6 stream (one graph per line)
/// or a single edge-list graph.
pub fn parse_graph_stream(name: &str, text: &str) -> Result<Vec<GraphRecord>, InputError> {
    let cap = buffer_cap();
    let looks_like_edge_list = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with(|c: char| c.is_ascii_digit() || c == '#'));

    if looks_like_edge_list {
        let graph = parse_edge_list(text)
            .map_err(|err| InputError::EdgeList { source_name: name.to_owned(), err })?;
        return Ok(vec![GraphRecord { source: name.to_owned(), graph }]);
    }

    let mut records = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = raw_line.trim_end_matches('\r');
        if line.is_empty() || line.as_bytes() == STREAM_HEADER {
            continue;
        }
        let source = format!("{name}:{}", idx + 1);
        let graph = parse_graph6(line.as_bytes())
            .map_err(|err| InputError::Graph6 { source_name: source.clone(), err })?;
        records.push(GraphRecord { source, graph });
        if let Some(cap) = cap {
            if records.len() > cap {
                return Err(InputError::BufferCapExceeded { cap });
            }
        }
    }
    Ok(records)
}

fn buffer_cap() -> Option<usize> {
    std::env::var(BUFFER_CAP_ENV).ok()?.parse().ok()
}

/// Applies the class filter (and optional isomorphism dedup) the internal
/// enumeration uses to an externally generated stream; this is how orders
/// beyond the internal cap enter the pipeline.
pub fn filter_by_class(
    records: Vec<GraphRecord>,
    class: &GraphClassSpec,
    dedup: bool,
) -> Result<Vec<GraphRecord>, CanonError> {
    let mut deduper = Deduper::new();
    let mut out = Vec::new();
    for record in records {
        if !class.admits(&record.graph) {
            continue;
        }
        if dedup && !deduper.insert(&record.graph)? {
            continue;
        }
        out.push(record);
    }
    Ok(out)
}
