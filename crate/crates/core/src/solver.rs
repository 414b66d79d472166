//! Exact minimum dominating P-sets.
//!
//! The value is found by iterative deepening on the set size. Each level is
//! a branching search: pick an undominated vertex and branch on which member
//! of its closed neighbourhood dominates it. Vertices already branched on are
//! excluded from later sibling branches. For induced-hereditary properties a
//! partial set that fails the property is cut immediately; for the others
//! (`C`, `T`) a dominating set that fails the property is extended by a
//! property-specific repair branch.
//!
//! Witnesses are the lexicographically first minimum set, found by a second
//! search that picks vertices in increasing id order at the known size.

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::properties::Property;

/// Largest order accepted by [`gamma_oracle`].
pub const ORACLE_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("no dominating {property}-set exists")]
    Undefined { property: Property },
    #[error("brute-force oracle is limited to {ORACLE_MAX_VERTICES} vertices, got {0}")]
    OracleCap(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// A domination number: finite, or undefined when no dominating P-set exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gamma {
    Finite(usize),
    Undefined,
}

impl Gamma {
    pub fn finite(self) -> Option<usize> {
        match self {
            Gamma::Finite(k) => Some(k),
            Gamma::Undefined => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Gamma::Finite(_))
    }

    /// `self < other`, false whenever either side is undefined.
    pub fn lt(self, other: Gamma) -> bool {
        matches!((self, other), (Gamma::Finite(a), Gamma::Finite(b)) if a < b)
    }

    pub fn gt(self, other: Gamma) -> bool {
        other.lt(self)
    }

    /// `self == other + delta`, false whenever either side is undefined.
    pub fn is_offset_of(self, other: Gamma, delta: isize) -> bool {
        matches!((self, other), (Gamma::Finite(a), Gamma::Finite(b)) if a as isize == b as isize + delta)
    }
}

impl Serialize for Gamma {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.finite().serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaResult {
    #[serde(rename = "gamma")]
    pub value: Gamma,
    pub witness: Option<VertexSet>,
    pub property: Property,
    #[serde(rename = "graph")]
    pub graph_label: Option<String>,
}

impl GammaResult {
    fn new(g: &Graph, p: Property, found: Option<(usize, VertexSet)>) -> Self {
        GammaResult {
            value: found.map_or(Gamma::Undefined, |(k, _)| Gamma::Finite(k)),
            witness: found.map(|(_, w)| w),
            property: p,
            graph_label: g.label().map(str::to_string),
        }
    }
}

pub fn is_dominating(g: &Graph, set: VertexSet) -> bool {
    g.closed_neighborhood_of(set.intersection(g.vertices())) == g.vertices()
}

struct Search<'g> {
    g: &'g Graph,
    p: Property,
    closed: Vec<u64>,
    all: u64,
    max_cover: usize,
    induced_hereditary: bool,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, p: Property) -> Self {
        let closed: Vec<u64> = (0..g.n()).map(|v| g.closed_row(v).bits()).collect();
        let max_cover = closed.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0);
        Search { g, p, closed, all: g.vertices().bits(), max_cover, induced_hereditary: p.flags().induced_hereditary }
    }

    #[inline]
    fn has_property(&self, set: u64) -> bool {
        self.p.holds_induced(self.g, VertexSet::from_bits(set))
    }

    fn lower_bound(&self, undominated: u64) -> usize {
        let u = undominated.count_ones() as usize;
        if u == 0 {
            0
        } else {
            u.div_ceil(self.max_cover.max(1))
        }
    }

    /// Vertices one of which must be added to a dominating set that fails
    /// the property, for every solution extending it.
    fn repair_candidates(&self, chosen: u64) -> u64 {
        let set = VertexSet::from_bits(chosen);
        match self.p {
            Property::Connected => match set.first() {
                Some(v) => {
                    let comp = self.g.component_within(v, set);
                    self.g.closed_neighborhood_of(comp).bits() & !chosen
                }
                None => self.all,
            },
            Property::Total => set
                .iter()
                .find(|&v| self.g.row(v).intersection(set).is_empty())
                .map_or(self.all & !chosen, |v| self.g.row(v).bits()),
            _ => self.all & !chosen,
        }
    }

    /// A dominating P-set with at most `budget` more vertices than `chosen`,
    /// avoiding `excluded`.
    fn extend(&self, chosen: u64, dominated: u64, excluded: u64, budget: usize) -> Option<u64> {
        let undominated = self.all & !dominated;
        let candidates = if undominated == 0 {
            if self.has_property(chosen) {
                return Some(chosen);
            }
            if self.induced_hereditary || budget == 0 {
                return None;
            }
            self.repair_candidates(chosen) & !excluded & !chosen
        } else {
            if self.lower_bound(undominated) > budget {
                return None;
            }
            // Branch on the undominated vertex with the fewest usable dominators.
            let mut best: Option<u64> = None;
            for w in VertexSet::from_bits(undominated).iter() {
                let options = self.closed[w] & !excluded;
                if options == 0 {
                    return None;
                }
                if best.is_none_or(|b| options.count_ones() < b.count_ones()) {
                    best = Some(options);
                }
            }
            best.expect("undominated is nonempty")
        };
        let mut excluded = excluded;
        for c in VertexSet::from_bits(candidates).iter() {
            let next = chosen | 1 << c;
            if !self.induced_hereditary || self.has_property(next) {
                if let Some(found) = self.extend(next, dominated | self.closed[c], excluded, budget - 1) {
                    return Some(found);
                }
            }
            excluded |= 1 << c;
        }
        None
    }

    /// Size-`remaining` completions using ids `>= next` only, in lexicographic order.
    fn lexicographic(
        &self,
        chosen: u64,
        dominated: u64,
        next: usize,
        remaining: usize,
        first_only: bool,
        out: &mut Vec<VertexSet>,
    ) -> bool {
        if remaining == 0 {
            if dominated == self.all && self.has_property(chosen) {
                out.push(VertexSet::from_bits(chosen));
                return first_only;
            }
            return false;
        }
        let undominated = self.all & !dominated;
        if self.lower_bound(undominated) > remaining {
            return false;
        }
        let available = self.all & u64::MAX.checked_shl(next as u32).unwrap_or(0);
        if VertexSet::from_bits(undominated).iter().any(|w| self.closed[w] & available == 0) {
            return false;
        }
        let n = self.g.n();
        for c in next..=n - remaining {
            let set = chosen | 1 << c;
            if self.induced_hereditary && !self.has_property(set) {
                continue;
            }
            if self.lexicographic(set, dominated | self.closed[c], c + 1, remaining - 1, first_only, out) {
                return true;
            }
        }
        false
    }

    fn minimum(&self) -> Option<usize> {
        if self.g.n() == 0 {
            return self.has_property(0).then_some(0);
        }
        (self.lower_bound(self.all)..=self.g.n()).find(|&k| self.extend(0, 0, 0, k).is_some())
    }

    fn sets_of_size(&self, k: usize, first_only: bool) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if k <= self.g.n() {
            self.lexicographic(0, 0, 0, k, first_only, &mut out);
        }
        out
    }
}

/// `γ_P(g)` with the lexicographically first minimum dominating P-set.
/// The empty graph has value 0 for every property that accepts the empty set.
pub fn gamma(g: &Graph, p: Property) -> GammaResult {
    let search = Search::new(g, p);
    let found = search.minimum().map(|k| {
        let witness = search.sets_of_size(k, true);
        (k, *witness.first().expect("a set of the minimum size exists"))
    });
    GammaResult::new(g, p, found)
}

pub fn gamma_value(g: &Graph, p: Property) -> Gamma {
    Search::new(g, p).minimum().map_or(Gamma::Undefined, Gamma::Finite)
}

fn require_value(g: &Graph, p: Property) -> Result<usize, SolverError> {
    gamma_value(g, p).finite().ok_or(SolverError::Undefined { property: p })
}

/// Every minimum dominating P-set, in lexicographic order.
pub fn all_minimum_sets(g: &Graph, p: Property) -> Result<Vec<VertexSet>, SolverError> {
    let k = require_value(g, p)?;
    Ok(Search::new(g, p).sets_of_size(k, false))
}

/// Whether `v` lies in some minimum dominating P-set, by solving with `v` forced in.
pub fn in_some_minimum_set(g: &Graph, p: Property, v: usize) -> Result<bool, SolverError> {
    if v >= g.n() {
        return Err(SolverError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let k = require_value(g, p)?;
    let search = Search::new(g, p);
    let start = 1u64 << v;
    if search.induced_hereditary && !search.has_property(start) {
        return Ok(false);
    }
    Ok(search.extend(start, search.closed[v], 0, k - 1).is_some())
}

/// Smallest dominating P-set that contains all of `forced`.
pub fn gamma_containing(g: &Graph, p: Property, forced: VertexSet) -> Result<Gamma, SolverError> {
    if let Some(v) = forced.iter().find(|&v| v >= g.n()) {
        return Err(SolverError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let search = Search::new(g, p);
    let start = forced.bits();
    if search.induced_hereditary && !search.has_property(start) {
        return Ok(Gamma::Undefined);
    }
    let dominated = g.closed_neighborhood_of(forced).bits();
    Ok((0..=g.n() - forced.len())
        .find(|&b| search.extend(start, dominated, 0, b).is_some())
        .map_or(Gamma::Undefined, |b| Gamma::Finite(forced.len() + b)))
}

/// `{v : γ_P(g - v) < γ_P(g)}`; vertices whose deletion leaves no dominating
/// P-set are not counted.
pub fn v_minus_set(g: &Graph, p: Property) -> Result<VertexSet, SolverError> {
    let k = require_value(g, p)?;
    Ok(g.vertices()
        .iter()
        .filter(|&v| {
            let (h, _) = g.delete_vertex(v).expect("vertex in range");
            gamma_value(&h, p).finite().is_some_and(|kv| kv < k)
        })
        .collect())
}

/// Plain enumeration of all vertex subsets by increasing size, with no
/// pruning, evaluating the property on the explicitly built induced subgraph.
pub fn gamma_oracle(g: &Graph, p: Property) -> Result<GammaResult, SolverError> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(SolverError::OracleCap(n));
    }
    let dominates = |members: &[usize]| (0..n).all(|x| members.iter().any(|&m| m == x || g.has_edge(m, x)));
    for k in 0..=n {
        // Combinations in lexicographic order.
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if dominates(&idx) {
                let set: VertexSet = idx.iter().copied().collect();
                if p.holds(&g.induced_subgraph(set).0) {
                    return Ok(GammaResult::new(g, p, Some((k, set))));
                }
            }
            let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(GammaResult::new(g, p, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::enumerate_graphs;
    use crate::generators::{complete, complete_multipartite, cycle, path, star, three_stars_triangle};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn value(g: &Graph, p: Property) -> Option<usize> {
        gamma(g, p).value.finite()
    }

    #[test]
    fn is_dominating_examples() {
        let p3 = path(3).unwrap();
        assert!(is_dominating(&p3, set(&[1])));
        assert!(!is_dominating(&p3, set(&[0])));
        assert!(is_dominating(&p3, p3.vertices()));
    }

    #[test]
    fn gamma_examples() {
        let k333 = complete_multipartite(&[3, 3, 3]).unwrap();
        assert_eq!(value(&k333, Property::Edgeless), Some(3));
        for p in 2..=6 {
            for prop in [Property::Any, Property::Edgeless, Property::Forest, Property::MaxDegree(1)] {
                assert_eq!(value(&star(p).unwrap(), prop), Some(1));
            }
        }
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let r = gamma(&two_k2, Property::Connected);
        assert_eq!((r.value, r.witness), (Gamma::Undefined, None));
        for p in 2..=4 {
            assert_eq!(value(&three_stars_triangle(p).unwrap(), Property::Forest), Some(2 + p));
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(gamma_oracle(&path(4).unwrap(), Property::Any).unwrap().value, Gamma::Finite(2));
        assert_eq!(gamma_oracle(&path(4).unwrap(), Property::Any).unwrap().witness, Some(set(&[0, 2])));
        for p in Property::CATALOG.into_iter().filter(|p| p.flags().nondegenerate) {
            assert_eq!(gamma_oracle(&path(1).unwrap(), p).unwrap().value, Gamma::Finite(1));
        }
        assert_eq!(gamma_oracle(&cycle(5).unwrap(), Property::Total).unwrap().value, Gamma::Finite(3));
        assert_eq!(gamma_oracle(&Graph::empty(21).unwrap(), Property::Any), Err(SolverError::OracleCap(21)));
    }

    #[test]
    fn empty_graph_convention() {
        let e = Graph::empty(0).unwrap();
        let r = gamma(&e, Property::Any);
        assert_eq!((r.value, r.witness), (Gamma::Finite(0), Some(VertexSet::EMPTY)));
        assert_eq!(gamma(&e, Property::Connected).value, Gamma::Undefined);
        assert_eq!(gamma(&e, Property::Total).value, Gamma::Undefined);
        assert_eq!(gamma_oracle(&e, Property::Forest).unwrap().value, Gamma::Finite(0));
    }

    #[test]
    fn all_minimum_sets_examples() {
        assert_eq!(all_minimum_sets(&path(3).unwrap(), Property::Any).unwrap(), vec![set(&[1])]);
        // Oracle by hand: every 2-subset of C4 dominates it.
        let c4 = all_minimum_sets(&cycle(4).unwrap(), Property::Any).unwrap();
        assert_eq!(c4, vec![set(&[0, 1]), set(&[0, 2]), set(&[0, 3]), set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]);
        assert_eq!(all_minimum_sets(&path(2).unwrap(), Property::Edgeless).unwrap(), vec![set(&[0]), set(&[1])]);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(all_minimum_sets(&two_k2, Property::Connected).is_err());
    }

    #[test]
    fn membership_examples() {
        let p3 = path(3).unwrap();
        assert!(in_some_minimum_set(&p3, Property::Any, 1).unwrap());
        assert!(!in_some_minimum_set(&p3, Property::Any, 0).unwrap());
        let k5 = complete(5).unwrap();
        assert!((0..5).all(|v| in_some_minimum_set(&k5, Property::Any, v).unwrap()));
        assert!(in_some_minimum_set(&path(4).unwrap(), Property::Any, 0).unwrap());
        assert!(in_some_minimum_set(&p3, Property::Any, 3).is_err());
    }

    #[test]
    fn v_minus_examples() {
        assert_eq!(v_minus_set(&path(4).unwrap(), Property::Any).unwrap(), set(&[0, 3]));
        assert_eq!(v_minus_set(&path(1).unwrap(), Property::Any).unwrap(), set(&[0]));
        // gamma(C4) = 2 and gamma(P3) = 1, so every vertex qualifies.
        assert_eq!(v_minus_set(&cycle(4).unwrap(), Property::Any).unwrap(), set(&[0, 1, 2, 3]));
    }

    /// Solver and oracle agree (values and lexicographic witnesses) on every graph with n <= 5.
    #[test]
    fn agrees_with_oracle_small() {
        for g in enumerate_graphs(5).iter().flatten() {
            for p in Property::CATALOG {
                let fast = gamma(g, p);
                let slow = gamma_oracle(g, p).unwrap();
                assert_eq!(fast, slow, "{p} on {g:?}");
            }
        }
    }

    #[test]
    fn membership_matches_enumeration() {
        for g in enumerate_graphs(5).iter().flatten() {
            for p in Property::CATALOG {
                let Ok(sets) = all_minimum_sets(g, p) else { continue };
                for v in 0..g.n() {
                    let expected = sets.iter().any(|s| s.contains(v));
                    assert_eq!(in_some_minimum_set(g, p, v).unwrap(), expected, "{p} on {g:?} vertex {v}");
                }
            }
        }
    }

    /// Forced-pair minimum against plain enumeration of supersets.
    #[test]
    fn containing_matches_enumeration() {
        for g in enumerate_graphs(5).iter().flatten() {
            for p in Property::CATALOG {
                for e in g.edges() {
                    let forced = set(&[e.u(), e.v()]);
                    let expected = (0u64..1 << g.n())
                        .map(VertexSet::from_bits)
                        .filter(|s| forced.is_subset(*s) && is_dominating(g, *s) && p.holds_induced(g, *s))
                        .map(|s| s.len())
                        .min()
                        .map_or(Gamma::Undefined, Gamma::Finite);
                    assert_eq!(gamma_containing(g, p, forced).unwrap(), expected, "{p} on {g:?} forcing {e}");
                }
            }
        }
    }
}
