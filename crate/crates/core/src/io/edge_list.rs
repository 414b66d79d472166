//! Plain edge lists: one `u v` pair per line, optionally preceded by `n <count>`.
//! Blank lines and lines starting with `#` are skipped.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: cannot parse {token:?} as a vertex id")]
    BadToken { line: usize, token: String },
    #[error("line {line}: expected two vertex ids")]
    WrongArity { line: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex id {vertex} exceeds the limit of {limit}")]
    IdOverflow { line: usize, vertex: usize, limit: usize },
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_content = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let id = |token: &str| {
            token.parse::<usize>().map_err(|_| EdgeListError::BadToken { line, token: token.to_string() })
        };
        if !seen_content && tokens.first() == Some(&"n") {
            seen_content = true;
            if tokens.len() != 2 {
                return Err(EdgeListError::WrongArity { line });
            }
            let n = id(tokens[1])?;
            if n > MAX_VERTICES {
                return Err(EdgeListError::IdOverflow { line, vertex: n, limit: MAX_VERTICES });
            }
            declared = Some(n);
            continue;
        }
        seen_content = true;
        if tokens.len() != 2 {
            return Err(EdgeListError::WrongArity { line });
        }
        let (a, b) = (id(tokens[0])?, id(tokens[1])?);
        let limit = declared.unwrap_or(MAX_VERTICES);
        if let Some(vertex) = [a, b].into_iter().find(|&x| x >= limit) {
            return Err(EdgeListError::IdOverflow { line, vertex, limit });
        }
        if a == b {
            return Err(EdgeListError::SelfLoop { line, vertex: a });
        }
        edges.push((a, b));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0));
    Ok(Graph::from_edges(n, edges).expect("ids were range-checked"))
}

/// Writes `g` as an edge list with an explicit `n` header.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}
