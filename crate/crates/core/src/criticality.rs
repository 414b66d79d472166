//! Edges whose single subdivision or deletion changes `γ_P`.
//!
//! An edge `e` of `G` is S⁺-critical when `γ_P(G_e) > γ_P(G)`, S⁻-critical
//! when `γ_P(G_e) < γ_P(G)` and ER⁻-critical when `γ_P(G - e) < γ_P(G)`.
//! Comparisons involving an undefined value are false, and the
//! classification is then marked out of scope.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, VertexSet};
use crate::properties::Property;
use crate::solver::{all_minimum_sets, gamma_value, is_dominating, Gamma, SolverError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriticalityError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("{set:?} is not a minimum dominating {property}-set")]
    NotAMinimumSet { set: VertexSet, property: Property },
    #[error("property {property} does not satisfy the hypotheses: {requirement}")]
    OutOfScope { property: Property, requirement: &'static str },
    #[error("graph has no edges")]
    Edgeless,
}

/// How to read the third subdivision condition. The printed statement of
/// (iii) asks about `pn[u, M]` although `u ∉ M` there; `Symmetric` reads it
/// as `pn[v, M]`, the mirror image of (ii). `Literal` keeps the printed form,
/// where the private neighbour set of a non-member is empty.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionMode {
    #[default]
    Symmetric,
    Literal,
}

/// The three conditions on a minimum set `M` for the edge `uv`:
/// (i) `u, v ∉ M`; (ii) `u ∈ M`, `v ∈ pn[u,M] ⊄ {u,v}`; (iii) the same with
/// `u` and `v` swapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivisionConditions {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub iii_literal: bool,
}

impl SubdivisionConditions {
    pub fn any(&self, mode: ConditionMode) -> bool {
        self.i
            || self.ii
            || match mode {
                ConditionMode::Symmetric => self.iii,
                ConditionMode::Literal => self.iii_literal,
            }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionRecord {
    pub set: VertexSet,
    #[serde(flatten)]
    pub conditions: SubdivisionConditions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeClassification {
    pub edge: Edge,
    pub gamma_g: Gamma,
    pub gamma_g_e: Gamma,
    pub gamma_g_minus_e: Gamma,
    pub s_plus: bool,
    pub s_minus: bool,
    pub er_minus: bool,
    /// False when any of the three values is undefined.
    pub in_scope: bool,
    /// One record per minimum dominating P-set of `G`, in lexicographic order.
    pub conditions: Vec<ConditionRecord>,
}

fn evaluate_conditions(g: &Graph, e: Edge, m: VertexSet) -> SubdivisionConditions {
    let (u, v) = (e.u(), e.v());
    let pair = VertexSet::singleton(u).with(v);
    let side = |a: usize, b: usize| {
        if !m.contains(a) {
            return false;
        }
        let pn = g.private_neighbors_unchecked(a, m);
        pn.contains(b) && !pn.is_subset(pair)
    };
    SubdivisionConditions {
        i: !m.contains(u) && !m.contains(v),
        ii: side(u, v),
        iii: side(v, u),
        iii_literal: m.contains(v)
            && g.private_neighbors_unchecked(v, m).contains(u)
            && !g.private_neighbors_unchecked(u, m).is_subset(pair),
    }
}

fn require_edge(g: &Graph, e: Edge) -> Result<(), GraphError> {
    if g.has_edge(e.u(), e.v()) {
        Ok(())
    } else {
        Err(GraphError::MissingEdge(e))
    }
}

/// Evaluates the subdivision conditions for a minimum dominating P-set `m`.
pub fn check_theorem1_conditions(
    g: &Graph,
    e: Edge,
    p: Property,
    m: VertexSet,
) -> Result<SubdivisionConditions, CriticalityError> {
    require_edge(g, e)?;
    let minimum = gamma_value(g, p).finite();
    if !(is_dominating(g, m) && p.holds_induced(g, m) && minimum == Some(m.len()) && m.is_subset(g.vertices())) {
        return Err(CriticalityError::NotAMinimumSet { set: m, property: p });
    }
    Ok(evaluate_conditions(g, e, m))
}

pub fn classify_edge(g: &Graph, e: Edge, p: Property) -> Result<EdgeClassification, CriticalityError> {
    let subdivided = g.subdivide_edge(e, 1)?;
    let deleted = g.delete_edge(e)?;
    let gamma_g = gamma_value(g, p);
    let gamma_g_e = gamma_value(&subdivided, p);
    let gamma_g_minus_e = gamma_value(&deleted, p);
    let in_scope = gamma_g.is_finite() && gamma_g_e.is_finite() && gamma_g_minus_e.is_finite();
    let conditions = if gamma_g.is_finite() {
        all_minimum_sets(g, p)?
            .into_iter()
            .map(|set| ConditionRecord { set, conditions: evaluate_conditions(g, e, set) })
            .collect()
    } else {
        Vec::new()
    };
    Ok(EdgeClassification {
        edge: e,
        gamma_g,
        gamma_g_e,
        gamma_g_minus_e,
        s_plus: gamma_g_e.gt(gamma_g),
        s_minus: gamma_g_e.lt(gamma_g),
        er_minus: gamma_g_minus_e.lt(gamma_g),
        in_scope,
        conditions,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IffCheck {
    /// `e` is S⁺-critical for plain domination.
    pub lhs: bool,
    /// Every minimum dominating set satisfies one of the three conditions.
    pub rhs: bool,
}

/// Both sides of the characterization of S⁺-critical edges for `P = I`.
pub fn is_s_plus_critical_iff_conditions(
    g: &Graph,
    e: Edge,
    mode: ConditionMode,
) -> Result<IffCheck, CriticalityError> {
    require_edge(g, e)?;
    let p = Property::Any;
    let lhs = gamma_value(&g.subdivide_edge(e, 1)?, p).gt(gamma_value(g, p));
    let rhs = all_minimum_sets(g, p)?.into_iter().all(|m| evaluate_conditions(g, e, m).any(mode));
    Ok(IffCheck { lhs, rhs })
}

fn require_induced_hereditary_k1(p: Property) -> Result<(), CriticalityError> {
    let f = p.flags();
    if f.induced_hereditary && f.closed_union_k1 {
        Ok(())
    } else {
        Err(CriticalityError::OutOfScope {
            property: p,
            requirement: "induced-hereditary and closed under union with K1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MinusPair {
    pub s_minus: bool,
    pub er_minus: bool,
}

/// S⁻- and ER⁻-criticality of one edge, for properties where they coincide.
pub fn s_minus_equiv_er_minus(g: &Graph, e: Edge, p: Property) -> Result<MinusPair, CriticalityError> {
    require_induced_hereditary_k1(p)?;
    let base = gamma_value(g, p);
    Ok(MinusPair {
        s_minus: gamma_value(&g.subdivide_edge(e, 1)?, p).lt(base),
        er_minus: gamma_value(&g.delete_edge(e)?, p).lt(base),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassMembership {
    /// Every edge is S⁻-critical.
    pub cs_minus: bool,
    /// Every edge is ER⁻-critical.
    pub cer_minus: bool,
}

pub fn class_membership(g: &Graph, p: Property) -> Result<ClassMembership, CriticalityError> {
    if g.edge_count() == 0 {
        return Err(CriticalityError::Edgeless);
    }
    let base = gamma_value(g, p);
    let mut out = ClassMembership { cs_minus: true, cer_minus: true };
    for e in g.edges() {
        out.cs_minus &= gamma_value(&g.subdivide_edge(e, 1)?, p).lt(base);
        out.cer_minus &= gamma_value(&g.delete_edge(e)?, p).lt(base);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_multipartite, cycle, path, star, three_stars_triangle};

    fn edge(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn classify_examples() {
        let star3 = star(3).unwrap();
        for e in star3.edges() {
            let c = classify_edge(&star3, e, Property::Any).unwrap();
            assert!(c.s_plus && !c.s_minus && !c.er_minus);
            assert_eq!((c.gamma_g, c.gamma_g_e), (Gamma::Finite(1), Gamma::Finite(2)));
        }

        let k333 = complete_multipartite(&[3, 3, 3]).unwrap();
        let c = classify_edge(&k333, edge(0, 3), Property::Edgeless).unwrap();
        assert!(c.s_minus && c.er_minus && !c.s_plus);
        assert_eq!((c.gamma_g, c.gamma_g_e, c.gamma_g_minus_e), (Gamma::Finite(3), Gamma::Finite(2), Gamma::Finite(2)));

        let c4 = cycle(4).unwrap();
        for e in c4.edges() {
            let c = classify_edge(&c4, e, Property::Any).unwrap();
            assert!(!c.s_plus && !c.s_minus && !c.er_minus);
            assert_eq!(c.conditions.len(), 6);
        }
        assert!(classify_edge(&c4, edge(0, 2), Property::Any).is_err());
    }

    #[test]
    fn undefined_is_out_of_scope() {
        let p4 = path(4).unwrap();
        let c = classify_edge(&p4, edge(1, 2), Property::Connected).unwrap();
        assert_eq!(c.gamma_g_minus_e, Gamma::Undefined);
        assert!(!c.in_scope && !c.er_minus);
    }

    #[test]
    fn condition_examples() {
        let p3 = path(3).unwrap();
        let c = check_theorem1_conditions(&p3, edge(1, 2), Property::Any, set(&[1])).unwrap();
        assert!(c.ii && !c.i && !c.iii);

        let k2 = path(2).unwrap();
        for m in [set(&[0]), set(&[1])] {
            let c = check_theorem1_conditions(&k2, edge(0, 1), Property::Any, m).unwrap();
            assert!(!c.any(ConditionMode::Symmetric));
        }

        // C4 is 0-1-2-3-0. With M = {0, 2} the vertex 2 has no private neighbour but itself.
        let c4 = cycle(4).unwrap();
        let c = check_theorem1_conditions(&c4, edge(1, 2), Property::Any, set(&[0, 2])).unwrap();
        assert_eq!((c.i, c.ii, c.iii), (false, false, false));
        let c = check_theorem1_conditions(&c4, edge(1, 2), Property::Any, set(&[0, 3])).unwrap();
        assert_eq!((c.i, c.ii, c.iii), (true, false, false));

        assert!(matches!(
            check_theorem1_conditions(&p3, edge(0, 1), Property::Any, set(&[0, 1])),
            Err(CriticalityError::NotAMinimumSet { .. })
        ));
    }

    #[test]
    fn literal_reading_differs() {
        // K1,3 with e = (0, 1) but M = {0} seen from the other end: relabel so the centre is the larger id.
        let g = star(3).unwrap().permute(&[3, 0, 1, 2]);
        let c = check_theorem1_conditions(&g, edge(0, 3), Property::Any, set(&[3])).unwrap();
        assert!(c.iii && !c.iii_literal);
        assert!(c.any(ConditionMode::Symmetric) && !c.any(ConditionMode::Literal));
    }

    #[test]
    fn iff_examples() {
        let star3 = star(3).unwrap();
        for e in star3.edges() {
            assert_eq!(
                is_s_plus_critical_iff_conditions(&star3, e, ConditionMode::Symmetric).unwrap(),
                IffCheck { lhs: true, rhs: true }
            );
        }
        let k2 = path(2).unwrap();
        assert_eq!(
            is_s_plus_critical_iff_conditions(&k2, edge(0, 1), ConditionMode::Symmetric).unwrap(),
            IffCheck { lhs: false, rhs: false }
        );
        let c4 = cycle(4).unwrap();
        for e in c4.edges() {
            assert_eq!(
                is_s_plus_critical_iff_conditions(&c4, e, ConditionMode::Symmetric).unwrap(),
                IffCheck { lhs: false, rhs: false }
            );
        }
    }

    #[test]
    fn minus_pair_examples() {
        let k333 = complete_multipartite(&[3, 3, 3]).unwrap();
        assert_eq!(
            s_minus_equiv_er_minus(&k333, edge(0, 8), Property::Edgeless).unwrap(),
            MinusPair { s_minus: true, er_minus: true }
        );
        let p4 = path(4).unwrap();
        for e in p4.edges() {
            assert_eq!(
                s_minus_equiv_er_minus(&p4, e, Property::Any).unwrap(),
                MinusPair { s_minus: false, er_minus: false }
            );
        }
        let t = three_stars_triangle(3).unwrap();
        for e in [edge(0, 1), edge(0, 2), edge(1, 2)] {
            assert_eq!(
                s_minus_equiv_er_minus(&t, e, Property::Forest).unwrap(),
                MinusPair { s_minus: true, er_minus: true }
            );
        }
        assert!(matches!(
            s_minus_equiv_er_minus(&p4, edge(0, 1), Property::Connected),
            Err(CriticalityError::OutOfScope { .. })
        ));
    }

    #[test]
    fn class_examples() {
        let k333 = complete_multipartite(&[3, 3, 3]).unwrap();
        assert_eq!(
            class_membership(&k333, Property::Edgeless).unwrap(),
            ClassMembership { cs_minus: true, cer_minus: true }
        );
        assert_eq!(
            class_membership(&path(2).unwrap(), Property::Any).unwrap(),
            ClassMembership { cs_minus: false, cer_minus: false }
        );
        // gamma_O(C4) = 2, gamma_O(C5) = 2, gamma_O(P4) = 2.
        assert_eq!(
            class_membership(&cycle(4).unwrap(), Property::Edgeless).unwrap(),
            ClassMembership { cs_minus: false, cer_minus: false }
        );
        assert_eq!(class_membership(&Graph::empty(2).unwrap(), Property::Any), Err(CriticalityError::Edgeless));
    }
}
