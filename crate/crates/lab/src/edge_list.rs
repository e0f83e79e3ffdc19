//! Plain-text edge lists: a leading vertex count, then whitespace-separated
//! endpoint pairs. `#` starts a comment that runs to the end of the line.

use hsolab_core::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("edge list has no leading vertex count")]
    MissingOrder,
    #[error("line {line}: expected an integer, got {token:?}")]
    BadToken { line: usize, token: String },
    #[error("line {line}: dangling endpoint (edges are written as pairs)")]
    DanglingEndpoint { line: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses one graph. Example: `"3\n0 1\n1 2"` is the path 0-1-2; `"4\n"` is
/// the edgeless graph on four vertices.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut tokens = Vec::new(); // (1-based line, token)
    for (idx, raw_line) in text.lines().enumerate() {
        let line = raw_line.split('#').next().unwrap_or("");
        for token in line.split_whitespace() {
            tokens.push((idx + 1, token));
        }
    }
    let mut iter = tokens.into_iter();
    let (first_line, first) = iter.next().ok_or(EdgeListError::MissingOrder)?;
    let n: usize = parse_int(first_line, first)?;

    let mut edges = Vec::new();
    while let Some((line, u_token)) = iter.next() {
        let u = parse_int(line, u_token)?;
        let (line_v, v_token) =
            iter.next().ok_or(EdgeListError::DanglingEndpoint { line })?;
        let v = parse_int(line_v, v_token)?;
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

fn parse_int(line: usize, token: &str) -> Result<usize, EdgeListError> {
    token
        .parse()
        .map_err(|_| EdgeListError::BadToken { line, token: token.to_owned() })
}
