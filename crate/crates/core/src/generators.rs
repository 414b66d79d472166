//! Named graph families with fixed vertex numbering.

use crate::graph::{Graph, GraphError};

fn positive(what: &'static str, value: usize) -> Result<(), GraphError> {
    if value == 0 {
        Err(GraphError::InvalidSize { what, detail: "must be at least 1".into() })
    } else {
        Ok(())
    }
}

/// `P_n` as `0 - 1 - .. - (n-1)`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    positive("path order", n)?;
    Ok(Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))?.with_label(format!("P{n}")))
}

/// `C_n` as the path `0 .. n-1` closed by the edge `(n-1, 0)`; needs `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidSize { what: "cycle order", detail: format!("{n} < 3") });
    }
    Ok(Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))?.with_label(format!("C{n}")))
}

/// `K_{1,p}` with centre 0 and leaves `1..=p`.
pub fn star(p: usize) -> Result<Graph, GraphError> {
    positive("star size", p)?;
    Ok(Graph::from_edges(p + 1, (1..=p).map(|v| (0, v)))?.with_label(format!("K1,{p}")))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    positive("complete graph order", n)?;
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges)?.with_label(format!("K{n}")))
}

/// Parts occupy consecutive id ranges in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    if parts.is_empty() {
        return Err(GraphError::InvalidSize { what: "multipartite parts", detail: "no parts".into() });
    }
    if let Some(i) = parts.iter().position(|&p| p == 0) {
        return Err(GraphError::InvalidSize { what: "multipartite parts", detail: format!("part {i} is empty") });
    }
    let mut part_of = Vec::new();
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let n = part_of.len();
    let part_of = &part_of;
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| part_of[u] != part_of[v]).map(move |v| (u, v)));
    let name = parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    Ok(Graph::from_edges(n, edges)?.with_label(format!("K{name}")))
}

/// Three stars `K_{1,p}` whose centres 0, 1, 2 form a triangle. The leaves of
/// centre `c` are `3 + c*p .. 3 + (c+1)*p`.
pub fn three_stars_triangle(p: usize) -> Result<Graph, GraphError> {
    positive("star size", p)?;
    let triangle = [(0, 1), (0, 2), (1, 2)];
    let leaves = (0..3).flat_map(|c| (0..p).map(move |j| (c, 3 + c * p + j)));
    Ok(Graph::from_edges(3 + 3 * p, triangle.into_iter().chain(leaves))?
        .with_label(format!("three_stars_triangle({p})")))
}
