//! Repeated subdivision of one edge: value profiles `γ_P(G_{e,t})`, the
//! multisubdivision numbers derived from them, and the S¹/S²/S³ classes.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exec::{map_ordered, Execution};
use crate::graph::{Edge, Graph, GraphError};
use crate::properties::Property;
use crate::solver::{gamma_value, in_some_minimum_set, v_minus_set, Gamma};

pub const DEFAULT_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MsdError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has no edges")]
    Edgeless,
    #[error("property {property} does not satisfy the hypotheses: {requirement}")]
    OutOfScope { property: Property, requirement: &'static str },
    #[error("cap must be at least 1")]
    ZeroCap,
    #[error("γ_{property} is undefined on a graph in the profile")]
    Undefined { property: Property },
    #[error("msd_{property} = {msd} exceeds 3")]
    ClassBound { property: Property, msd: Msd },
}

/// A multisubdivision number. `BeyondCap` means no qualifying `t` up to the
/// cap was found; `ProvenInfinite` is reserved for cases where no `t` can
/// qualify at all. The derived order puts finite values first, so the
/// minimum over edges is the graph-level number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Msd {
    Finite(usize),
    BeyondCap,
    ProvenInfinite,
}

impl Msd {
    pub fn finite(self) -> Option<usize> {
        match self {
            Msd::Finite(t) => Some(t),
            _ => None,
        }
    }
}

impl fmt::Display for Msd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Msd::Finite(t) => write!(f, "{t}"),
            Msd::BeyondCap => f.write_str("beyond_cap"),
            Msd::ProvenInfinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Msd {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Msd::Finite(t) => s.serialize_u64(*t as u64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MsdProfile {
    pub edge: Edge,
    /// `values[t] = γ_P(G_{e,t})` for `t = 0..=cap`; `values[0]` is `γ_P(G)`.
    pub values: Vec<Gamma>,
    pub msd: Msd,
    pub msd_plus: Msd,
    pub msd_minus: Msd,
    pub cap: usize,
    /// False when some value is undefined.
    pub in_scope: bool,
}

fn first_t(values: &[Gamma], pred: impl Fn(Gamma, Gamma) -> bool) -> Msd {
    values[1..].iter().position(|&v| pred(v, values[0])).map_or(Msd::BeyondCap, |i| Msd::Finite(i + 1))
}

impl MsdProfile {
    fn from_values(edge: Edge, p: Property, values: Vec<Gamma>) -> Self {
        let cap = values.len() - 1;
        let msd_plus = first_t(&values, Gamma::gt);
        let mut msd_minus = first_t(&values, Gamma::lt);
        // For plain domination a subdivision never lowers γ.
        if p == Property::Any && msd_minus == Msd::BeyondCap {
            msd_minus = Msd::ProvenInfinite;
        }
        MsdProfile {
            edge,
            in_scope: values.iter().all(|v| v.is_finite()),
            msd: msd_plus.min(msd_minus).min(first_t(&values, |a, b| a.is_finite() && b.is_finite() && a != b)),
            msd_plus,
            msd_minus,
            cap,
            values,
        }
    }
}

pub fn profile(g: &Graph, e: Edge, p: Property, cap: usize) -> Result<MsdProfile, MsdError> {
    if cap == 0 {
        return Err(MsdError::ZeroCap);
    }
    if !g.has_edge(e.u(), e.v()) {
        return Err(GraphError::MissingEdge(e).into());
    }
    let mut values = vec![gamma_value(g, p)];
    for t in 1..=cap {
        values.push(gamma_value(&g.subdivide_edge(e, t)?, p));
    }
    Ok(MsdProfile::from_values(e, p, values))
}

/// Profiles of every edge, in edge order.
pub fn edge_profiles(g: &Graph, p: Property, cap: usize, exec: Execution) -> Result<Vec<MsdProfile>, MsdError> {
    let edges: Vec<Edge> = g.edges().collect();
    map_ordered(&edges, exec, |&e| profile(g, e, p, cap)).into_iter().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MsdSummary {
    pub msd: Msd,
    pub msd_plus: Msd,
    pub msd_minus: Msd,
}

impl MsdSummary {
    fn of(profiles: &[MsdProfile]) -> Self {
        let min = |f: fn(&MsdProfile) -> Msd| profiles.iter().map(f).min().expect("at least one edge");
        MsdSummary { msd: min(|p| p.msd), msd_plus: min(|p| p.msd_plus), msd_minus: min(|p| p.msd_minus) }
    }
}

/// Edge-wise minima of the three numbers.
pub fn msd_graph(g: &Graph, p: Property, cap: usize) -> Result<MsdSummary, MsdError> {
    if g.edge_count() == 0 {
        return Err(MsdError::Edgeless);
    }
    Ok(MsdSummary::of(&edge_profiles(g, p, cap, Execution::Sequential)?))
}

/// Membership in `S_P^i` where `i = msd_P(G) ∈ {1, 2, 3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SClass(u8);

impl SClass {
    pub fn index(self) -> u8 {
        self.0
    }
}

fn require(p: Property, ok: bool, requirement: &'static str) -> Result<(), MsdError> {
    if ok {
        Ok(())
    } else {
        Err(MsdError::OutOfScope { property: p, requirement })
    }
}

fn require_hereditary_k1(p: Property) -> Result<(), MsdError> {
    let f = p.flags();
    require(p, f.hereditary && f.closed_union_k1, "hereditary and closed under union with K1")
}

fn require_induced_hereditary_k1(p: Property) -> Result<(), MsdError> {
    let f = p.flags();
    require(p, f.induced_hereditary && f.closed_union_k1, "induced-hereditary and closed under union with K1")
}

/// The class of `g`. An observed `msd > 3` comes back as
/// [`MsdError::ClassBound`] carrying the value, not as a panic.
pub fn s_class(g: &Graph, p: Property) -> Result<SClass, MsdError> {
    require_hereditary_k1(p)?;
    if g.edge_count() == 0 {
        return Err(MsdError::Edgeless);
    }
    let profiles = edge_profiles(g, p, 3, Execution::Sequential)?;
    if profiles.iter().any(|pr| !pr.in_scope) {
        return Err(MsdError::Undefined { property: p });
    }
    match MsdSummary::of(&profiles).msd {
        Msd::Finite(t) => Ok(SClass(t as u8)),
        msd => Err(MsdError::ClassBound { property: p, msd }),
    }
}

/// For the edge `uv`: (`u ∈ V⁻_P(G−e)` and `v` lies in a minimum set of
/// `G−u`, the same with `u` and `v` swapped). Undefined values make a side false.
pub fn removal_conditions(g: &Graph, e: Edge, p: Property) -> Result<(bool, bool), MsdError> {
    let minus = g.delete_edge(e)?;
    let Ok(vm) = v_minus_set(&minus, p) else {
        return Ok((false, false));
    };
    let side = |a: usize, b: usize| -> bool {
        if !vm.contains(a) {
            return false;
        }
        let (h, map) = g.delete_vertex(a).expect("vertex of an edge is in range");
        let b = map.new_id(b).expect("other endpoint survives");
        in_some_minimum_set(&h, p, b).unwrap_or(false)
    };
    Ok((side(e.u(), e.v()), side(e.v(), e.u())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Multi1Check {
    pub gamma_g: Gamma,
    pub gamma_g_minus_e: Gamma,
    pub gamma_g_e3: Gamma,
    /// `γ(G−e) ≤ γ(G_{e,3}) ≤ γ(G−e) + 1`.
    pub sandwich: bool,
    /// `γ(G−e) = γ(G_{e,3})`.
    pub a1: bool,
    /// Either removal condition holds.
    pub a2: bool,
    /// `γ(G−e) = γ(G) + 1`; only evaluated for hereditary properties.
    pub a3: Option<bool>,
}

pub fn check_multi1(g: &Graph, e: Edge, p: Property) -> Result<Multi1Check, MsdError> {
    require_induced_hereditary_k1(p)?;
    let gamma_g = gamma_value(g, p);
    let gamma_g_minus_e = gamma_value(&g.delete_edge(e)?, p);
    let gamma_g_e3 = gamma_value(&g.subdivide_edge(e, 3)?, p);
    let (i, ii) = removal_conditions(g, e, p)?;
    Ok(Multi1Check {
        gamma_g,
        gamma_g_minus_e,
        gamma_g_e3,
        sandwich: gamma_g_e3.is_offset_of(gamma_g_minus_e, 0) || gamma_g_e3.is_offset_of(gamma_g_minus_e, 1),
        a1: gamma_g_e3.is_offset_of(gamma_g_minus_e, 0),
        a2: i || ii,
        a3: p.flags().hereditary.then(|| gamma_g_minus_e.is_offset_of(gamma_g, 1)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multi4Check {
    pub gamma_g_minus_e: Gamma,
    /// `γ(G) = γ(G_{e,3})` exactly when `γ(G) = γ(G−e) + 1`.
    pub iff_holds: bool,
    /// Present when `γ(G) = γ(G−e) + 1`: the seven-term chain up to `t = 6`
    /// together with `msd = msd⁻ = 1` and `msd⁺ = 6`.
    pub chain: Option<bool>,
    pub msd_le_3: bool,
    /// Cap 6 when the chain applies, otherwise 3.
    pub profile: MsdProfile,
}

fn chain_holds(pr: &MsdProfile) -> bool {
    let Some(v) = pr.values.iter().map(|g| g.finite()).collect::<Option<Vec<_>>>() else {
        return false;
    };
    v.len() == 7
        && v[0] == v[1] + 1
        && v[1] == v[2]
        && v[0] == v[3]
        && v[3] == v[4]
        && v[4] == v[5]
        && v[6] == v[5] + 1
        && pr.msd == Msd::Finite(1)
        && pr.msd_minus == Msd::Finite(1)
        && pr.msd_plus == Msd::Finite(6)
}

pub fn check_multi4(g: &Graph, e: Edge, p: Property) -> Result<Multi4Check, MsdError> {
    require_hereditary_k1(p)?;
    let gamma_g = gamma_value(g, p);
    let gamma_g_minus_e = gamma_value(&g.delete_edge(e)?, p);
    let drop = gamma_g.is_offset_of(gamma_g_minus_e, 1);
    let profile = profile(g, e, p, if drop { 6 } else { 3 })?;
    Ok(Multi4Check {
        gamma_g_minus_e,
        iff_holds: profile.values[3].is_offset_of(gamma_g, 0) == drop,
        chain: drop.then(|| chain_holds(&profile)),
        msd_le_3: profile.msd <= Msd::Finite(3),
        profile,
    })
}
