//! Corpus-driven checking of the domination statements, one suite per
//! statement (or per clause of a longer statement).
//!
//! A suite runs graph by graph; each graph contributes a number of checked
//! instances (edges, vertices or the graph itself) and any violations. Work
//! is spread with [`map_ordered`], so reports come out in corpus order no
//! matter how many workers ran.

mod checks;
pub mod corpus;
mod scan;

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};
use serde_json::Value;
use thiserror::Error;

use crate::criticality::ConditionMode;
use crate::exec::{map_ordered, Execution};
use crate::graph::{Edge, Graph};
use crate::properties::{audit_flags, Property};

pub use scan::{scan_counterexamples, ScanHit, ScanId};

/// The statement a suite checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Anchor {
    /// One subdivision raises `γ_P` by at most one, and the conditions on
    /// minimum sets when it does.
    SubdivisionBound,
    /// For plain domination, S⁺-criticality is equivalent to the conditions.
    SPlusCharacterization,
    /// S⁻-critical and ER⁻-critical edges coincide.
    MinusEquivalence,
    /// The classes CS⁻ and CER⁻ coincide.
    MinusClasses,
    /// Threefold subdivision against deletion: the sandwich and A1, A2, A3.
    ThreeSubdivision,
    /// Edges with `msd ≤ 3`, the iff and the value chain.
    MultisubdivisionBound,
    /// Vertex removal changes `γ_P` by at most one, with the witness clause.
    VertexRemoval,
    /// Edge addition lowers `γ_P` by one exactly under the removal conditions.
    EdgeAddition,
    /// Consequences of an edge whose removal lowers `γ_P`.
    EdgeRemovalLemma,
    /// The flags claimed for each catalog property.
    PropertyFlags,
    /// The branching solver against brute force.
    SolverOracle,
}

impl Anchor {
    pub const ALL: [Anchor; 11] = [
        Anchor::SubdivisionBound,
        Anchor::SPlusCharacterization,
        Anchor::MinusEquivalence,
        Anchor::MinusClasses,
        Anchor::ThreeSubdivision,
        Anchor::MultisubdivisionBound,
        Anchor::VertexRemoval,
        Anchor::EdgeAddition,
        Anchor::EdgeRemovalLemma,
        Anchor::PropertyFlags,
        Anchor::SolverOracle,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteId {
    T1Bound,
    T1Necessity,
    Cor2Iff,
    T3Equiv,
    Cor4Classes,
    T5Sandwich,
    T5A1A2,
    T5A1A3,
    T6Iff,
    T6Chain,
    T6Msd3,
    TaVertex,
    TbEdgeAdd,
    TcPlus1Lemma,
    FlagAudit,
    OracleEquiv,
}

impl SuiteId {
    pub const ALL: [SuiteId; 16] = [
        SuiteId::T1Bound,
        SuiteId::T1Necessity,
        SuiteId::Cor2Iff,
        SuiteId::T3Equiv,
        SuiteId::Cor4Classes,
        SuiteId::T5Sandwich,
        SuiteId::T5A1A2,
        SuiteId::T5A1A3,
        SuiteId::T6Iff,
        SuiteId::T6Chain,
        SuiteId::T6Msd3,
        SuiteId::TaVertex,
        SuiteId::TbEdgeAdd,
        SuiteId::TcPlus1Lemma,
        SuiteId::FlagAudit,
        SuiteId::OracleEquiv,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteId::T1Bound => "T1-bound",
            SuiteId::T1Necessity => "T1-necessity",
            SuiteId::Cor2Iff => "COR2-iff",
            SuiteId::T3Equiv => "T3-equiv",
            SuiteId::Cor4Classes => "COR4-classes",
            SuiteId::T5Sandwich => "T5-sandwich",
            SuiteId::T5A1A2 => "T5-A1A2",
            SuiteId::T5A1A3 => "T5-A1A3",
            SuiteId::T6Iff => "T6-iff",
            SuiteId::T6Chain => "T6-chain",
            SuiteId::T6Msd3 => "T6-msd3",
            SuiteId::TaVertex => "TA-vertex",
            SuiteId::TbEdgeAdd => "TB-edgeadd",
            SuiteId::TcPlus1Lemma => "TC-plus1-lemma",
            SuiteId::FlagAudit => "FLAG-audit",
            SuiteId::OracleEquiv => "ORACLE-equiv",
        }
    }

    pub fn anchor(self) -> Anchor {
        match self {
            SuiteId::T1Bound | SuiteId::T1Necessity => Anchor::SubdivisionBound,
            SuiteId::Cor2Iff => Anchor::SPlusCharacterization,
            SuiteId::T3Equiv => Anchor::MinusEquivalence,
            SuiteId::Cor4Classes => Anchor::MinusClasses,
            SuiteId::T5Sandwich | SuiteId::T5A1A2 | SuiteId::T5A1A3 => Anchor::ThreeSubdivision,
            SuiteId::T6Iff | SuiteId::T6Chain | SuiteId::T6Msd3 => Anchor::MultisubdivisionBound,
            SuiteId::TaVertex => Anchor::VertexRemoval,
            SuiteId::TbEdgeAdd => Anchor::EdgeAddition,
            SuiteId::TcPlus1Lemma => Anchor::EdgeRemovalLemma,
            SuiteId::FlagAudit => Anchor::PropertyFlags,
            SuiteId::OracleEquiv => Anchor::SolverOracle,
        }
    }

    /// `Err(reason)` when `p` lacks the hypotheses of the anchored statement.
    pub fn scope(self, p: Property) -> Result<(), &'static str> {
        let f = p.flags();
        let (ok, reason) = match self {
            SuiteId::T1Bound
            | SuiteId::T1Necessity
            | SuiteId::T6Iff
            | SuiteId::T6Chain
            | SuiteId::T6Msd3
            | SuiteId::TbEdgeAdd
            | SuiteId::TcPlus1Lemma => {
                (f.hereditary && f.closed_union_k1, "requires a hereditary property closed under union with K1")
            }
            SuiteId::T3Equiv | SuiteId::Cor4Classes | SuiteId::T5Sandwich | SuiteId::T5A1A2 => (
                f.induced_hereditary && f.closed_union_k1,
                "requires an induced-hereditary property closed under union with K1",
            ),
            SuiteId::T5A1A3 => (
                f.hereditary && f.induced_hereditary && f.closed_union_k1,
                "requires a hereditary property closed under union with K1",
            ),
            SuiteId::Cor2Iff => (p == Property::Any, "stated for plain domination (I) only"),
            SuiteId::TaVertex => {
                (f.nondegenerate && f.closed_union_k1, "requires a nondegenerate property closed under union with K1")
            }
            SuiteId::FlagAudit | SuiteId::OracleEquiv => (true, ""),
        };
        if ok {
            Ok(())
        } else {
            Err(reason)
        }
    }

    fn uses_mode(self) -> bool {
        matches!(self, SuiteId::T1Necessity | SuiteId::Cor2Iff)
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite id {0:?}")]
pub struct UnknownSuite(pub String);

impl FromStr for SuiteId {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|id| id.as_str() == s).ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

impl Serialize for SuiteId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no suite covers {0:?}")]
pub struct RegistryError(pub Anchor);

/// Every statement has at least one suite. Suites map to exactly one
/// statement by construction.
pub fn check_registry() -> Result<(), RegistryError> {
    match Anchor::ALL.into_iter().find(|a| !SuiteId::ALL.iter().any(|s| s.anchor() == *a)) {
        Some(missing) => Err(RegistryError(missing)),
        None => Ok(()),
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    pub exec: Execution,
    /// Stop after the first graph with a violation.
    pub fail_fast: bool,
    /// Reading of the third subdivision condition.
    pub mode: ConditionMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One failed instance, with enough to recompute it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<Edge>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    pub details: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite_id: SuiteId,
    pub property: Property,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<ConditionMode>,
    pub graphs_checked: usize,
    pub instances_checked: usize,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<Value>,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// What one graph contributed to a suite.
#[derive(Default)]
struct GraphOutcome {
    instances: usize,
    violations: Vec<Violation>,
}

pub fn run_suite(suite: SuiteId, p: Property, corpus: &[Graph], options: &SuiteOptions) -> SuiteReport {
    let start = Instant::now();
    let mut report = SuiteReport {
        suite_id: suite,
        property: p,
        status: Status::Pass,
        reason: None,
        mode: suite.uses_mode().then_some(options.mode),
        graphs_checked: 0,
        instances_checked: 0,
        violations: Vec::new(),
        notes: None,
        elapsed: Duration::ZERO,
    };
    if let Err(reason) = suite.scope(p) {
        report.status = Status::Skipped;
        report.reason = Some(reason.to_string());
    } else if suite == SuiteId::FlagAudit {
        run_flag_audit(p, corpus, &mut report);
    } else {
        let chunk = if options.fail_fast { 32 } else { corpus.len().max(1) };
        for graphs in corpus.chunks(chunk) {
            let outcomes = map_ordered(graphs, options.exec, |g| checks::check_graph(suite, p, g, options.mode));
            for outcome in outcomes {
                report.graphs_checked += 1;
                report.instances_checked += outcome.instances;
                let failed = !outcome.violations.is_empty();
                report.violations.extend(outcome.violations);
                if failed && options.fail_fast {
                    break;
                }
            }
            if options.fail_fast && !report.violations.is_empty() {
                break;
            }
        }
        if !report.violations.is_empty() {
            report.status = Status::Fail;
        }
    }
    report.elapsed = start.elapsed();
    report
}

fn run_flag_audit(p: Property, corpus: &[Graph], report: &mut SuiteReport) {
    let audit = audit_flags(p, corpus);
    report.graphs_checked = audit.graphs_checked;
    report.instances_checked = audit.flags.len();
    for flag in audit.violations() {
        let ce = flag.counterexample.as_ref().expect("violations carry a counterexample");
        report.violations.push(Violation {
            graph6: ce.source.clone(),
            edge: None,
            vertex: None,
            details: serde_json::json!({ "flag": flag.flag, "witness": ce.witness, "note": ce.note }),
        });
    }
    report.notes = Some(serde_json::to_value(&audit.flags).expect("audit serializes"));
    if !report.violations.is_empty() {
        report.status = Status::Fail;
    }
}

/// Runs every (suite, property) pair, suite-major, after checking the registry.
pub fn run_suites(
    suites: &[SuiteId],
    properties: &[Property],
    corpus: &[Graph],
    options: &SuiteOptions,
) -> Result<Vec<SuiteReport>, RegistryError> {
    check_registry()?;
    Ok(suites
        .iter()
        .flat_map(|&s| properties.iter().map(move |&p| (s, p)))
        .map(|(s, p)| run_suite(s, p, corpus, options))
        .collect())
}

/// Writes the report as one JSON line.
pub fn emit_report<W: Write>(report: &SuiteReport, sink: &mut W) -> io::Result<()> {
    serde_json::to_writer(&mut *sink, report)?;
    sink.write_all(b"\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_multipartite, cycle, path};
    use corpus::Bundled;

    fn small() -> Vec<Graph> {
        Bundled::N5.load().unwrap()
    }

    #[test]
    fn registry_is_complete() {
        assert_eq!(check_registry(), Ok(()));
        for id in SuiteId::ALL {
            assert_eq!(id.as_str().parse::<SuiteId>().unwrap(), id);
        }
        assert!("T9-nothing".parse::<SuiteId>().is_err());
    }

    #[test]
    fn out_of_scope_is_skipped() {
        let r = run_suite(SuiteId::T1Bound, Property::Connected, &small(), &SuiteOptions::default());
        assert_eq!(r.status, Status::Skipped);
        assert!(r.reason.is_some());
        assert_eq!(r.graphs_checked, 0);
        let line = serde_json::to_string(&r).unwrap();
        assert!(line.contains(r#""status":"skipped""#), "{line}");
    }

    #[test]
    fn every_applicable_suite_passes_on_small_graphs() {
        let corpus = small();
        for suite in SuiteId::ALL {
            for p in Property::CATALOG {
                let r =
                    run_suite(suite, p, &corpus, &SuiteOptions { exec: Execution::Sequential, ..Default::default() });
                assert_ne!(r.status, Status::Fail, "{suite} {p}: {:?}", r.violations.first());
            }
        }
    }

    #[test]
    fn empty_corpus_checks_nothing() {
        let r = run_suite(SuiteId::T6Msd3, Property::Any, &[], &SuiteOptions::default());
        assert_eq!((r.status, r.graphs_checked), (Status::Pass, 0));
    }

    #[test]
    fn suites_see_the_examples() {
        let graphs = vec![complete_multipartite(&[3, 3, 3]).unwrap(), cycle(5).unwrap(), path(4).unwrap()];
        let chain = run_suite(SuiteId::T6Chain, Property::Edgeless, &graphs, &SuiteOptions::default());
        assert_eq!(chain.status, Status::Pass);
        // Every K3,3,3 edge triggers the chain.
        assert!(chain.instances_checked >= 27);
        let tc = run_suite(SuiteId::TcPlus1Lemma, Property::Any, &graphs, &SuiteOptions::default());
        assert_eq!((tc.status, tc.instances_checked), (Status::Pass, 0));
    }

    #[test]
    fn report_is_one_json_line() {
        let r = run_suite(SuiteId::T1Bound, Property::Any, &[path(3).unwrap()], &SuiteOptions::default());
        let mut out = Vec::new();
        emit_report(&r, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.matches('\n').count(), 1);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["suite_id"], "T1-bound");
        assert_eq!(v["property"], "I");
        assert_eq!(v["violations"], serde_json::json!([]));
        assert!(v["elapsed_ms"].is_u64());
    }
}
