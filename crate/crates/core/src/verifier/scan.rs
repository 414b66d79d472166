//! Exploratory predicates: report the corpus graphs that match rather than
//! the ones that violate something.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use serde_json::{json, Value};
use thiserror::Error;

use crate::criticality::class_membership;
use crate::exec::{map_ordered, Execution};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::multisubdivision::{msd_graph, Msd};
use crate::properties::Property;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScanId {
    /// `msd_P(G) = 1`.
    InS1,
    /// `msd_P(G) = 2`.
    InS2,
    /// `msd_P(G) = 3`.
    InS3,
    /// `msd_P(G) = 2` and `G` has a cut vertex.
    S2CutVertex,
    /// Every edge is S⁻-critical.
    CsMinus,
}

impl ScanId {
    pub const ALL: [ScanId; 5] = [ScanId::InS1, ScanId::InS2, ScanId::InS3, ScanId::S2CutVertex, ScanId::CsMinus];

    pub fn as_str(self) -> &'static str {
        match self {
            ScanId::InS1 => "in-S1",
            ScanId::InS2 => "in-S2",
            ScanId::InS3 => "in-S3",
            ScanId::S2CutVertex => "s2-cut-vertex",
            ScanId::CsMinus => "cs-minus",
        }
    }
}

impl fmt::Display for ScanId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown scan predicate {0:?} (expected one of in-S1, in-S2, in-S3, s2-cut-vertex, cs-minus)")]
pub struct UnknownScan(pub String);

impl FromStr for ScanId {
    type Err = UnknownScan;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|id| id.as_str() == s).ok_or_else(|| UnknownScan(s.to_string()))
    }
}

impl Serialize for ScanId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanHit {
    pub scan: ScanId,
    pub property: Property,
    /// Position in the corpus, from 0.
    pub index: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    pub details: Value,
}

fn matches(scan: ScanId, p: Property, g: &Graph) -> Option<Value> {
    if g.edge_count() == 0 {
        return None;
    }
    let class = |i: usize| -> Option<Value> {
        let s = msd_graph(g, p, 3).ok()?;
        (s.msd == Msd::Finite(i)).then(|| serde_json::to_value(s).expect("plain data"))
    };
    match scan {
        ScanId::InS1 => class(1),
        ScanId::InS2 => class(2),
        ScanId::InS3 => class(3),
        ScanId::S2CutVertex => {
            let cut = g.cut_vertices();
            if cut.is_empty() {
                return None;
            }
            class(2).map(|mut v| {
                v["cut_vertices"] = json!(cut);
                v
            })
        }
        ScanId::CsMinus => {
            let m = class_membership(g, p).ok()?;
            m.cs_minus.then(|| serde_json::to_value(m).expect("plain data"))
        }
    }
}

/// Matching graphs in corpus order. Edgeless graphs never match.
pub fn scan_counterexamples(scan: ScanId, p: Property, corpus: &[Graph], exec: Execution) -> Vec<ScanHit> {
    let found = map_ordered(corpus, exec, |g| matches(scan, p, g));
    corpus
        .iter()
        .zip(found)
        .enumerate()
        .filter_map(|(index, (g, details))| {
            details.map(|details| ScanHit {
                scan,
                property: p,
                index,
                graph6: to_graph6(g).expect("corpus graphs fit graph6"),
                graph: g.label().map(str::to_string),
                details,
            })
        })
        .collect()
}
