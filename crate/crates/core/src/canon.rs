//! Canonical relabeling by individualization-refinement, and exhaustive
//! enumeration of small graphs up to isomorphism.
//!
//! Only used to deduplicate: corpus generation and the subgraph walk in the
//! property flag audit. Search trees are not pruned by automorphisms beyond
//! twin vertices, which keeps the code short and is plenty for n <= 16.

use std::collections::BTreeSet;

use crate::graph::{Graph, VertexSet};

/// Adjacency rows of the canonical relabeling; equal iff the graphs are isomorphic.
pub type CanonicalCode = Vec<u64>;

type Partition = Vec<Vec<usize>>;

/// Splits cells by (cell, neighbour counts per cell) until stable. The order
/// of the new cells depends only on the signatures, never on vertex ids.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<VertexSet> = cells.iter().map(|c| c.iter().copied().collect()).collect();
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> =
                cell.iter().map(|&v| (masks.iter().map(|m| g.row(v).intersection(*m).len()).collect(), v)).collect();
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn code_for(g: &Graph, cells: &Partition) -> CanonicalCode {
    let mut position = vec![0usize; g.n()];
    for (i, cell) in cells.iter().enumerate() {
        position[cell[0]] = i;
    }
    let mut rows = vec![0u64; g.n()];
    for v in 0..g.n() {
        rows[position[v]] = g.row(v).iter().fold(0, |acc, w| acc | 1 << position[w]);
    }
    rows
}

fn are_twins(g: &Graph, a: usize, b: usize) -> bool {
    g.row(a).without(b) == g.row(b).without(a)
}

fn search(g: &Graph, cells: Partition, best: &mut Option<CanonicalCode>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let code = code_for(g, &cells);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        if tried.iter().any(|&a| are_twins(g, a, v)) {
            continue;
        }
        tried.push(v);
        let mut branch = cells.clone();
        let rest: Vec<usize> = branch[target].iter().copied().filter(|&w| w != v).collect();
        branch[target] = vec![v];
        branch.insert(target + 1, rest);
        search(g, branch, best);
    }
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut best = None;
    search(g, vec![(0..g.n()).collect()], &mut best);
    best.expect("search reaches at least one leaf")
}

pub fn canonical_graph(g: &Graph) -> Graph {
    Graph::from_rows(canonical_code(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

/// One canonical representative of every graph on exactly `n` vertices, for
/// each `n` in `0..=max_n`, in order of `n` and then canonical code.
pub fn enumerate_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::from_rows(Vec::new())]];
    for n in 1..=max_n {
        let mut codes: BTreeSet<CanonicalCode> = BTreeSet::new();
        for h in &levels[n - 1] {
            for mask in 0u64..1 << (n - 1) {
                let mut rows: Vec<u64> = h.vertices().iter().map(|v| h.row(v).bits()).collect();
                for (v, row) in rows.iter_mut().enumerate() {
                    *row |= (mask >> v & 1) << (n - 1);
                }
                rows.push(mask);
                codes.insert(canonical_code(&Graph::from_rows(rows)));
            }
        }
        levels.push(codes.into_iter().map(Graph::from_rows).collect());
    }
    levels
}
