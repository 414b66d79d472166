//! Graph properties a dominating set's induced subgraph may be required to have.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode};
use crate::graph::{Edge, Graph, VertexSet, MAX_VERTICES};
use crate::io::to_graph6;

/// The property catalog. `MaxDegree(k)` is "maximum degree at most k".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Property {
    /// `I`: every graph.
    Any,
    /// `O`: no edges.
    Edgeless,
    /// `C`: connected and nonempty.
    Connected,
    /// `T`: no isolated vertices and nonempty.
    Total,
    /// `F`: acyclic.
    Forest,
    /// `UK`: every component is complete.
    UnionOfCliques,
    /// `D:k`.
    MaxDegree(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyFlags {
    pub hereditary: bool,
    pub induced_hereditary: bool,
    pub closed_union_k1: bool,
    pub nondegenerate: bool,
}

impl PropertyFlags {
    const ALL: PropertyFlags =
        PropertyFlags { hereditary: true, induced_hereditary: true, closed_union_k1: true, nondegenerate: true };
    const NONE: PropertyFlags =
        PropertyFlags { hereditary: false, induced_hereditary: false, closed_union_k1: false, nondegenerate: false };

    pub fn get(&self, flag: Flag) -> bool {
        match flag {
            Flag::Hereditary => self.hereditary,
            Flag::InducedHereditary => self.induced_hereditary,
            Flag::ClosedUnionK1 => self.closed_union_k1,
            Flag::Nondegenerate => self.nondegenerate,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown property {0:?}; expected one of I, O, C, T, F, UK, D:<k>")]
pub struct ParsePropertyError(String);

impl Property {
    /// The catalog used by the verification corpus runs, with `D:1` and `D:2`.
    pub const CATALOG: [Property; 8] = [
        Property::Any,
        Property::Edgeless,
        Property::Connected,
        Property::Total,
        Property::Forest,
        Property::UnionOfCliques,
        Property::MaxDegree(1),
        Property::MaxDegree(2),
    ];

    pub fn flags(self) -> PropertyFlags {
        match self {
            Property::Any | Property::Edgeless | Property::Forest | Property::MaxDegree(_) => PropertyFlags::ALL,
            Property::UnionOfCliques => PropertyFlags { hereditary: false, ..PropertyFlags::ALL },
            Property::Connected | Property::Total => PropertyFlags::NONE,
        }
    }

    /// Whether `g` itself has the property.
    pub fn holds(self, g: &Graph) -> bool {
        let n = g.n();
        match self {
            Property::Any => true,
            Property::Edgeless => g.edge_count() == 0,
            Property::Connected => n >= 1 && g.is_connected(),
            Property::Total => n >= 1 && g.min_degree() >= 1,
            Property::Forest => g.edge_count() + g.components().len() == n,
            Property::UnionOfCliques => {
                g.components().iter().all(|c| c.iter().all(|a| c.iter().all(|b| a == b || g.has_edge(a, b))))
            }
            Property::MaxDegree(k) => g.max_degree() <= k as usize,
        }
    }

    /// Whether `⟨set⟩` has the property, evaluated on bit masks without
    /// building the subgraph. The empty set passes for every property
    /// except `C` and `T`.
    pub fn holds_induced(self, g: &Graph, set: VertexSet) -> bool {
        let set = set.intersection(g.vertices());
        let inner = |v: usize| g.row(v).intersection(set);
        match self {
            Property::Any => true,
            Property::Edgeless => set.iter().all(|v| inner(v).is_empty()),
            Property::Connected => set.first().is_some_and(|v| g.component_within(v, set) == set),
            Property::Total => !set.is_empty() && set.iter().all(|v| !inner(v).is_empty()),
            Property::Forest => {
                let edges: usize = set.iter().map(|v| inner(v).len()).sum::<usize>() / 2;
                let mut rest = set;
                let mut components = 0;
                while let Some(v) = rest.first() {
                    rest = rest.difference(g.component_within(v, set));
                    components += 1;
                }
                edges + components == set.len()
            }
            Property::UnionOfCliques => {
                set.iter().all(|v| inner(v).iter().all(|w| inner(v).with(v) == inner(w).with(w)))
            }
            Property::MaxDegree(k) => set.iter().all(|v| inner(v).len() <= k as usize),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Any => f.write_str("I"),
            Property::Edgeless => f.write_str("O"),
            Property::Connected => f.write_str("C"),
            Property::Total => f.write_str("T"),
            Property::Forest => f.write_str("F"),
            Property::UnionOfCliques => f.write_str("UK"),
            Property::MaxDegree(k) => write!(f, "D:{k}"),
        }
    }
}

impl FromStr for Property {
    type Err = ParsePropertyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "I" => Ok(Property::Any),
            "O" => Ok(Property::Edgeless),
            "C" => Ok(Property::Connected),
            "T" => Ok(Property::Total),
            "F" => Ok(Property::Forest),
            "UK" => Ok(Property::UnionOfCliques),
            "D" => Ok(Property::MaxDegree(1)),
            other => other
                .strip_prefix("D:")
                .and_then(|k| k.parse().ok())
                .map(Property::MaxDegree)
                .ok_or_else(|| ParsePropertyError(s.to_string())),
        }
    }
}

impl From<Property> for String {
    fn from(p: Property) -> Self {
        p.to_string()
    }
}

impl TryFrom<String> for Property {
    type Error = ParsePropertyError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    Hereditary,
    InducedHereditary,
    ClosedUnionK1,
    Nondegenerate,
}

impl Flag {
    pub const ALL: [Flag; 4] = [Flag::Hereditary, Flag::InducedHereditary, Flag::ClosedUnionK1, Flag::Nondegenerate];
}

/// A graph with the property (`source`) and a related graph without it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagCounterexample {
    pub source: String,
    pub witness: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagAudit {
    pub flag: Flag,
    pub claimed: bool,
    pub counterexample: Option<FlagCounterexample>,
}

impl FlagAudit {
    /// A flag claimed to hold but refuted on the corpus.
    pub fn is_violation(&self) -> bool {
        self.claimed && self.counterexample.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub property: Property,
    pub graphs_checked: usize,
    pub flags: Vec<FlagAudit>,
}

impl AuditReport {
    pub fn flag(&self, flag: Flag) -> &FlagAudit {
        self.flags.iter().find(|a| a.flag == flag).expect("every flag is audited")
    }

    pub fn violations(&self) -> impl Iterator<Item = &FlagAudit> {
        self.flags.iter().filter(|a| a.is_violation())
    }
}

fn g6(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|e| format!("<{e}>"))
}

/// Depth-first walk over one-step deletions (vertices, and edges when
/// `edges_too`), deduplicated by isomorphism class. Every subgraph is reached
/// by a chain of single deletions, so the first failing graph on some chain
/// is found from a parent that still has the property.
struct SubgraphWalk {
    property: Property,
    edges_too: bool,
    visited: HashSet<CanonicalCode>,
}

impl SubgraphWalk {
    fn children(&self, g: &Graph) -> Vec<(Graph, String)> {
        let mut out: Vec<(Graph, String)> = g
            .vertices()
            .iter()
            .map(|v| (g.delete_vertex(v).expect("vertex in range").0, format!("delete vertex {v}")))
            .collect();
        if self.edges_too {
            let edges: Vec<Edge> = g.edges().collect();
            out.extend(
                edges.into_iter().map(|e| (g.delete_edge(e).expect("edge present"), format!("delete edge {e}"))),
            );
        }
        out
    }

    fn walk(&mut self, g: &Graph) -> Option<(Graph, Graph, String)> {
        for (child, step) in self.children(g) {
            if !self.property.holds(&child) {
                return Some((g.clone(), child, step));
            }
            if self.visited.insert(canonical_code(&child)) {
                if let Some(found) = self.walk(&child) {
                    return Some(found);
                }
            }
        }
        None
    }
}

fn audit_closure(p: Property, corpus: &[&Graph], edges_too: bool) -> Option<FlagCounterexample> {
    let mut walk = SubgraphWalk { property: p, edges_too, visited: HashSet::new() };
    for &g in corpus {
        if !p.holds(g) || !walk.visited.insert(canonical_code(g)) {
            continue;
        }
        if let Some((parent, child, step)) = walk.walk(g) {
            return Some(FlagCounterexample {
                source: g6(g),
                witness: g6(&child),
                note: format!(
                    "subgraph {} has the property but {step} gives {} which does not",
                    g6(&parent),
                    g6(&child)
                ),
            });
        }
    }
    None
}

/// Tests each flag's defining implication on every graph of `corpus`,
/// whether or not the flag is claimed, and records the first refutation.
///
/// Hereditary closure is checked over all subgraphs, induced-hereditary over
/// all induced subgraphs, union with K1 on every corpus graph, and
/// nondegeneracy on the edgeless graphs of every order up to the largest
/// corpus order.
pub fn audit_flags<'a, I>(p: Property, corpus: I) -> AuditReport
where
    I: IntoIterator<Item = &'a Graph>,
{
    let graphs: Vec<&Graph> = corpus.into_iter().collect();
    let claimed = p.flags();
    let max_n = graphs.iter().map(|g| g.n()).max().unwrap_or(0);

    let flags = Flag::ALL
        .iter()
        .map(|&flag| {
            let counterexample = match flag {
                Flag::Hereditary => audit_closure(p, &graphs, true),
                Flag::InducedHereditary => audit_closure(p, &graphs, false),
                Flag::ClosedUnionK1 => graphs.iter().find_map(|&g| {
                    if g.n() >= MAX_VERTICES || !p.holds(g) {
                        return None;
                    }
                    let bigger = g.with_isolated_vertex().expect("size checked");
                    (!p.holds(&bigger)).then(|| FlagCounterexample {
                        source: g6(g),
                        witness: g6(&bigger),
                        note: "adding an isolated vertex loses the property".into(),
                    })
                }),
                Flag::Nondegenerate => (1..=max_n).find_map(|n| {
                    let edgeless = Graph::empty(n).expect("n within corpus range");
                    (!p.holds(&edgeless)).then(|| FlagCounterexample {
                        source: g6(&edgeless),
                        witness: g6(&edgeless),
                        note: format!("the edgeless graph on {n} vertices lacks the property"),
                    })
                }),
            };
            FlagAudit { flag, claimed: claimed.get(flag), counterexample }
        })
        .collect();

    AuditReport { property: p, graphs_checked: graphs.len(), flags }
}
