//! Simple undirected graphs on at most 64 vertices with bit-packed adjacency.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count supported by the bit-packed representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {0} is not present in the graph")]
    MissingEdge(Edge),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} is not a member of the given set")]
    NotAMember { vertex: usize },
    #[error("invalid size for {what}: {detail}")]
    InvalidSize { what: &'static str, detail: String },
}

/// A set of vertex ids packed into a single word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All of `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.to_vec()
    }
}

impl TryFrom<Vec<usize>> for VertexSet {
    type Error = GraphError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        if let Some(&bad) = v.iter().find(|&&x| x >= MAX_VERTICES) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n: MAX_VERTICES });
        }
        Ok(v.into_iter().collect())
    }
}

/// Lexicographic order on the increasing member lists: lowest vertex id
/// decides first, and a proper prefix sorts before its extensions.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An undirected edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            Ordering::Less => Ok(Edge { u: a, v: b }),
            Ordering::Greater => Ok(Edge { u: b, v: a }),
            Ordering::Equal => Err(GraphError::SelfLoop(a)),
        }
    }

    #[inline]
    pub fn u(self) -> usize {
        self.u
    }

    #[inline]
    pub fn v(self) -> usize {
        self.v
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = GraphError;

    fn try_from([a, b]: [usize; 2]) -> Result<Self, Self::Error> {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Old-to-new id translation produced by vertex deletion and induced subgraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    forward: Vec<Option<usize>>,
    backward: Vec<usize>,
}

impl VertexMap {
    fn from_kept(n: usize, kept: VertexSet) -> Self {
        let mut forward = vec![None; n];
        let mut backward = Vec::with_capacity(kept.len());
        for old in kept.iter() {
            forward[old] = Some(backward.len());
            backward.push(old);
        }
        VertexMap { forward, backward }
    }

    /// New id of an old vertex, `None` if it was removed.
    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.forward.get(old).copied().flatten()
    }

    pub fn old_id(&self, new: usize) -> usize {
        self.backward[new]
    }

    /// Translates a set over the new ids back into the original ids.
    pub fn lift(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.backward[v]).collect()
    }

    /// Translates a set over the original ids, dropping removed vertices.
    pub fn project(&self, set: VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.new_id(v)).collect()
    }
}

/// Immutable simple undirected graph with vertex ids `0..n`.
///
/// Equality and hashing look at the adjacency only; the label is provenance.
#[derive(Clone)]
pub struct Graph {
    rows: Vec<u64>,
    label: Option<String>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { rows: vec![0; n], label: None })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = Self::empty(n)?.rows;
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            rows[a] |= 1 << b;
            rows[b] |= 1 << a;
        }
        Ok(Graph { rows, label: None })
    }

    /// Builds a graph from adjacency rows; callers guarantee symmetry and no loops.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= MAX_VERTICES);
        debug_assert!(rows.iter().enumerate().all(|(v, &r)| r >> v & 1 == 0));
        debug_assert!(rows.iter().enumerate().all(|(u, &r)| VertexSet(r).iter().all(|v| rows[v] >> u & 1 == 1)));
        Graph { rows, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && b < self.n() && self.rows[a] >> b & 1 == 1
    }

    /// Edges in increasing `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.rows.iter().enumerate().flat_map(|(u, &r)| {
            VertexSet(r & u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0)).iter().map(move |v| Edge { u, v })
        })
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// N(v) without range checking.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    /// N[v] without range checking.
    #[inline]
    pub(crate) fn closed_row(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v] | 1 << v)
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.row(v))
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.closed_row(v))
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.row(v).len())
    }

    /// Closed neighbourhood of a whole set.
    pub fn closed_neighborhood_of(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(set, |acc, v| acc.union(self.row(v)))
    }

    /// The private neighbour set `{y : N[y] ∩ set = {x}}`; requires `x ∈ set`.
    pub fn private_neighbors(&self, x: usize, set: VertexSet) -> Result<VertexSet, GraphError> {
        self.check_vertex(x)?;
        if !set.contains(x) {
            return Err(GraphError::NotAMember { vertex: x });
        }
        Ok(self.private_neighbors_unchecked(x, set))
    }

    /// Same formula without the membership requirement. For `x ∉ set` the
    /// result is always empty.
    pub fn private_neighbors_unchecked(&self, x: usize, set: VertexSet) -> VertexSet {
        let only_x = VertexSet::singleton(x);
        self.closed_row(x).iter().filter(|&y| self.closed_row(y).intersection(set) == only_x).collect()
    }

    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.has_edge(e.u, e.v) {
            return Err(GraphError::MissingEdge(e));
        }
        let mut rows = self.rows.clone();
        rows[e.u] &= !(1 << e.v);
        rows[e.v] &= !(1 << e.u);
        Ok(Graph::from_rows(rows))
    }

    pub fn add_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.check_vertex(e.v)?;
        let mut rows = self.rows.clone();
        rows[e.u] |= 1 << e.v;
        rows[e.v] |= 1 << e.u;
        Ok(Graph::from_rows(rows))
    }

    /// Removes `v`, compacting the remaining ids in order.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, VertexMap), GraphError> {
        self.check_vertex(v)?;
        Ok(self.induced_subgraph(self.vertices().without(v)))
    }

    /// `⟨S⟩` with the relative vertex order preserved.
    pub fn induced_subgraph(&self, set: VertexSet) -> (Graph, VertexMap) {
        let set = set.intersection(self.vertices());
        let map = VertexMap::from_kept(self.n(), set);
        let rows = map.backward.iter().map(|&old| map.project(self.row(old).intersection(set)).0).collect();
        (Graph::from_rows(rows), map)
    }

    /// Replaces `e = uv` by the path `u, x1, .., xt, v`; the new vertices get
    /// ids `n..n+t` in path order starting next to `u`.
    pub fn subdivide_edge(&self, e: Edge, t: usize) -> Result<Graph, GraphError> {
        if t == 0 {
            return Err(GraphError::InvalidSize { what: "subdivision count", detail: "t must be at least 1".into() });
        }
        let n = self.n();
        if n + t > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n + t));
        }
        let g = self.delete_edge(e)?;
        let mut rows = g.rows;
        rows.resize(n + t, 0);
        let path: Vec<usize> = std::iter::once(e.u).chain(n..n + t).chain(std::iter::once(e.v)).collect();
        for w in path.windows(2) {
            rows[w[0]] |= 1 << w[1];
            rows[w[1]] |= 1 << w[0];
        }
        Ok(Graph::from_rows(rows))
    }

    /// `G ∪ K1`: appends one isolated vertex.
    pub fn with_isolated_vertex(&self) -> Result<Graph, GraphError> {
        Graph::empty(self.n() + 1)?;
        let mut rows = self.rows.clone();
        rows.push(0);
        Ok(Graph::from_rows(rows))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut rows = vec![0u64; self.n()];
        for (v, &r) in self.rows.iter().enumerate() {
            rows[perm[v]] = VertexSet(r).iter().fold(0, |acc, w| acc | 1 << perm[w]);
        }
        Graph::from_rows(rows)
    }

    /// Vertex set of the component containing `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        self.component_within(v, self.vertices())
    }

    /// Component of `v` inside `⟨within⟩`.
    pub(crate) fn component_within(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, w| acc.union(self.row(w)))
                .intersection(within)
                .difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Components ordered by their lowest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        match self.vertices().first() {
            None => true,
            Some(v) => self.component_of(v) == self.vertices(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    /// Articulation points, by the definition (deletion increases the component count).
    pub fn cut_vertices(&self) -> VertexSet {
        let base = self.components().len();
        self.vertices()
            .iter()
            .filter(|&v| {
                let (h, _) = self.induced_subgraph(self.vertices().without(v));
                h.components().len() > base
            })
            .collect()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().map(|e| (e.u, e.v)).collect();
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &edges).field("label", &self.label).finish()
    }
}
