//! Per-graph evaluation of each suite. Each check counts its instances and
//! pushes one violation per failed instance.

use serde_json::{json, Value};

use super::{GraphOutcome, SuiteId, Violation};
use crate::criticality::{
    class_membership, is_s_plus_critical_iff_conditions, s_minus_equiv_er_minus, ConditionMode, SubdivisionConditions,
};
use crate::graph::{Edge, Graph, VertexSet};
use crate::io::to_graph6;
use crate::multisubdivision::{check_multi1, check_multi4, profile, removal_conditions, Msd};
use crate::properties::Property;
use crate::solver::{
    all_minimum_sets, gamma, gamma_containing, gamma_oracle, gamma_value, in_some_minimum_set, is_dominating, Gamma,
    ORACLE_MAX_VERTICES,
};

struct Ctx<'a> {
    g: &'a Graph,
    p: Property,
    mode: ConditionMode,
    base: Gamma,
    graph6: String,
    outcome: GraphOutcome,
}

impl Ctx<'_> {
    fn fail(&mut self, edge: Option<Edge>, vertex: Option<usize>, details: Value) {
        self.outcome.violations.push(Violation { graph6: self.graph6.clone(), edge, vertex, details });
    }

    fn fail_edge(&mut self, e: Edge, details: Value) {
        self.fail(Some(e), None, details);
    }

    fn edges(&self) -> Vec<Edge> {
        self.g.edges().collect()
    }

    fn minus(&self, e: Edge) -> Graph {
        self.g.delete_edge(e).expect("edge of the graph")
    }

    fn subdivided(&self, e: Edge, t: usize) -> Graph {
        self.g.subdivide_edge(e, t).expect("edge of a small graph")
    }

    /// Runs `check` on every edge, counting each as one instance.
    fn each_edge(&mut self, mut check: impl FnMut(&mut Self, Edge)) {
        for e in self.edges() {
            self.outcome.instances += 1;
            check(self, e);
        }
    }
}

pub(super) fn check_graph(suite: SuiteId, p: Property, g: &Graph, mode: ConditionMode) -> GraphOutcome {
    let mut ctx = Ctx {
        g,
        p,
        mode,
        base: gamma_value(g, p),
        graph6: to_graph6(g).expect("corpus graphs fit graph6"),
        outcome: GraphOutcome::default(),
    };
    match suite {
        SuiteId::T1Bound => ctx.each_edge(subdivision_bound),
        SuiteId::T1Necessity => ctx.each_edge(subdivision_necessity),
        SuiteId::Cor2Iff => ctx.each_edge(s_plus_iff),
        SuiteId::T3Equiv => ctx.each_edge(minus_equivalence),
        SuiteId::Cor4Classes => minus_classes(&mut ctx),
        SuiteId::T5Sandwich => ctx.each_edge(sandwich),
        SuiteId::T5A1A2 => ctx.each_edge(a1_a2),
        SuiteId::T5A1A3 => ctx.each_edge(a1_a3),
        SuiteId::T6Iff => ctx.each_edge(multi_iff),
        SuiteId::T6Chain => chain(&mut ctx),
        SuiteId::T6Msd3 => ctx.each_edge(msd_at_most_3),
        SuiteId::TaVertex => vertex_removal(&mut ctx),
        SuiteId::TbEdgeAdd => ctx.each_edge(edge_addition),
        SuiteId::TcPlus1Lemma => edge_removal_lemma(&mut ctx),
        SuiteId::OracleEquiv => oracle(&mut ctx),
        SuiteId::FlagAudit => unreachable!("the flag audit runs over the whole corpus"),
    }
    ctx.outcome
}

fn conditions_of(g: &Graph, e: Edge, p: Property, m: VertexSet) -> SubdivisionConditions {
    crate::criticality::check_theorem1_conditions(g, e, p, m).expect("m comes from all_minimum_sets")
}

fn subdivision_bound(ctx: &mut Ctx, e: Edge) {
    let ge = gamma_value(&ctx.subdivided(e, 1), ctx.p);
    let ok = matches!((ctx.base, ge), (Gamma::Finite(a), Gamma::Finite(b)) if b <= a + 1);
    if !ok {
        let details = json!({ "gamma_g": ctx.base, "gamma_g_e": ge });
        ctx.fail_edge(e, details);
    }
}

/// When `e` is S⁺-critical: the value rises by exactly one and every minimum
/// set meets a condition. When it is not but every minimum set meets a
/// condition: some dominating P-set of `G − e` of size at most `γ_P(G)`
/// contains both ends.
fn subdivision_necessity(ctx: &mut Ctx, e: Edge) {
    let ge = gamma_value(&ctx.subdivided(e, 1), ctx.p);
    let Ok(sets) = all_minimum_sets(ctx.g, ctx.p) else {
        let details = json!({ "gamma_g": ctx.base, "problem": "undefined value inside the hypotheses" });
        return ctx.fail_edge(e, details);
    };
    let failing: Vec<VertexSet> =
        sets.iter().copied().filter(|&m| !conditions_of(ctx.g, e, ctx.p, m).any(ctx.mode)).collect();
    if ge.gt(ctx.base) {
        if !ge.is_offset_of(ctx.base, 1) || !failing.is_empty() {
            let details = json!({ "gamma_g": ctx.base, "gamma_g_e": ge, "sets_without_condition": failing });
            ctx.fail_edge(e, details);
        }
    } else if failing.is_empty() {
        let both = VertexSet::singleton(e.u()).with(e.v());
        let r = gamma_containing(&ctx.minus(e), ctx.p, both).expect("edge ends in range");
        let ok = matches!((r, ctx.base), (Gamma::Finite(a), Gamma::Finite(b)) if a <= b);
        if !ok {
            let details = json!({ "gamma_g": ctx.base, "gamma_g_e": ge, "min_set_with_both_ends_in_g_minus_e": r });
            ctx.fail_edge(e, details);
        }
    }
}

fn s_plus_iff(ctx: &mut Ctx, e: Edge) {
    let check = is_s_plus_critical_iff_conditions(ctx.g, e, ctx.mode).expect("edge of the graph");
    if check.lhs != check.rhs {
        ctx.fail_edge(e, json!({ "s_plus": check.lhs, "all_sets_meet_a_condition": check.rhs }));
    }
}

/// S⁻ and ER⁻ agree, and for plain domination there are no ER⁻-critical edges.
fn minus_equivalence(ctx: &mut Ctx, e: Edge) {
    let pair = s_minus_equiv_er_minus(ctx.g, e, ctx.p).expect("scope checked by the suite");
    let no_er_minus_for_i = ctx.p != Property::Any || !pair.er_minus;
    if pair.s_minus != pair.er_minus || !no_er_minus_for_i {
        ctx.fail_edge(e, json!({ "s_minus": pair.s_minus, "er_minus": pair.er_minus }));
    }
}

fn minus_classes(ctx: &mut Ctx) {
    if ctx.g.edge_count() == 0 {
        return;
    }
    ctx.outcome.instances += 1;
    let m = class_membership(ctx.g, ctx.p).expect("graph has edges");
    if m.cs_minus != m.cer_minus {
        ctx.fail(None, None, json!({ "cs_minus": m.cs_minus, "cer_minus": m.cer_minus }));
    }
}

fn sandwich(ctx: &mut Ctx, e: Edge) {
    let gm = gamma_value(&ctx.minus(e), ctx.p);
    let g3 = gamma_value(&ctx.subdivided(e, 3), ctx.p);
    if !(g3.is_offset_of(gm, 0) || g3.is_offset_of(gm, 1)) {
        ctx.fail_edge(e, json!({ "gamma_g_minus_e": gm, "gamma_g_e3": g3 }));
    }
}

fn a1_a2(ctx: &mut Ctx, e: Edge) {
    let c = check_multi1(ctx.g, e, ctx.p).expect("scope checked by the suite");
    if c.a1 != c.a2 {
        ctx.fail_edge(e, serde_json::to_value(c).expect("plain data"));
    }
}

fn a1_a3(ctx: &mut Ctx, e: Edge) {
    let gm = gamma_value(&ctx.minus(e), ctx.p);
    let g3 = gamma_value(&ctx.subdivided(e, 3), ctx.p);
    let a1 = g3.is_offset_of(gm, 0);
    let a3 = gm.is_offset_of(ctx.base, 1);
    if a1 != a3 {
        let details = json!({ "gamma_g": ctx.base, "gamma_g_minus_e": gm, "gamma_g_e3": g3, "a1": a1, "a3": a3 });
        ctx.fail_edge(e, details);
    }
}

fn multi_iff(ctx: &mut Ctx, e: Edge) {
    let gm = gamma_value(&ctx.minus(e), ctx.p);
    let g3 = gamma_value(&ctx.subdivided(e, 3), ctx.p);
    let lhs = g3.is_offset_of(ctx.base, 0);
    let rhs = ctx.base.is_offset_of(gm, 1);
    if lhs != rhs {
        ctx.fail_edge(e, json!({ "gamma_g": ctx.base, "gamma_g_minus_e": gm, "gamma_g_e3": g3 }));
    }
}

/// Only edges with `γ(G) = γ(G − e) + 1` are instances.
fn chain(ctx: &mut Ctx) {
    for e in ctx.edges() {
        if !ctx.base.is_offset_of(gamma_value(&ctx.minus(e), ctx.p), 1) {
            continue;
        }
        ctx.outcome.instances += 1;
        let c = check_multi4(ctx.g, e, ctx.p).expect("scope checked by the suite");
        if c.chain != Some(true) {
            ctx.fail_edge(e, serde_json::to_value(&c.profile).expect("plain data"));
        }
    }
}

fn msd_at_most_3(ctx: &mut Ctx, e: Edge) {
    let pr = profile(ctx.g, e, ctx.p, 3).expect("edge of a small graph");
    if pr.msd > Msd::Finite(3) {
        ctx.fail_edge(e, serde_json::to_value(&pr).expect("plain data"));
    }
}

/// (i) a vertex in no minimum set can be deleted without changing the value;
/// (ii) a deletion that lowers the value lowers it by one, and each minimum
/// set of `G − v` plus `v` is a minimum set of `G` in which `v` is its own
/// only private neighbour.
fn vertex_removal(ctx: &mut Ctx) {
    let Some(k) = ctx.base.finite() else {
        ctx.outcome.instances += 1;
        return ctx.fail(None, None, json!({ "problem": "undefined value inside the hypotheses" }));
    };
    for v in ctx.g.vertices().iter() {
        ctx.outcome.instances += 1;
        let (h, map) = ctx.g.delete_vertex(v).expect("vertex in range");
        let gv = gamma_value(&h, ctx.p);
        let member = in_some_minimum_set(ctx.g, ctx.p, v).expect("finite value");
        if !member && gv != ctx.base {
            ctx.fail(None, Some(v), json!({ "clause": "i", "gamma_g": ctx.base, "gamma_g_minus_v": gv }));
            continue;
        }
        if !gv.lt(ctx.base) {
            continue;
        }
        if !gv.is_offset_of(ctx.base, -1) {
            ctx.fail(None, Some(v), json!({ "clause": "ii", "gamma_g": ctx.base, "gamma_g_minus_v": gv }));
            continue;
        }
        let bad: Vec<VertexSet> = all_minimum_sets(&h, ctx.p)
            .expect("finite value")
            .into_iter()
            .map(|m| map.lift(m).with(v))
            .filter(|&m| {
                !(m.len() == k
                    && is_dominating(ctx.g, m)
                    && ctx.p.holds_induced(ctx.g, m)
                    && ctx.g.private_neighbors_unchecked(v, m) == VertexSet::singleton(v))
            })
            .collect();
        if !bad.is_empty() {
            ctx.fail(None, Some(v), json!({ "clause": "ii-witness", "gamma_g": ctx.base, "bad_extended_sets": bad }));
        }
    }
}

/// `γ(G) < γ(G − e)` forces a drop of exactly one, and that drop happens
/// exactly under the removal conditions.
fn edge_addition(ctx: &mut Ctx, e: Edge) {
    let gm = gamma_value(&ctx.minus(e), ctx.p);
    let (i, ii) = removal_conditions(ctx.g, e, ctx.p).expect("edge of the graph");
    let drop_by_one = ctx.base.is_offset_of(gm, -1);
    let bounded = !ctx.base.lt(gm) || drop_by_one;
    if !bounded || drop_by_one != (i || ii) {
        let details = json!({ "gamma_g": ctx.base, "gamma_g_minus_e": gm, "condition_i": i, "condition_ii": ii });
        ctx.fail_edge(e, details);
    }
}

/// Edges with `γ(G) > γ(G − e)` only.
fn edge_removal_lemma(ctx: &mut Ctx) {
    for e in ctx.edges() {
        let minus = ctx.minus(e);
        let gm = gamma_value(&minus, ctx.p);
        if !ctx.base.gt(gm) {
            continue;
        }
        ctx.outcome.instances += 1;
        let (x, y) = (e.u(), e.v());
        let sets = all_minimum_sets(&minus, ctx.p).expect("finite value");
        let mut failed: Vec<&str> = Vec::new();
        if sets.iter().any(|&m| ctx.p.holds_induced(ctx.g, m)) {
            failed.push("i");
        }
        if !sets.iter().all(|m| m.contains(x) && m.contains(y)) {
            failed.push("ii");
        }
        let mut side = |a: usize, b: usize, clause: &'static str| {
            let (h, map) = ctx.g.delete_vertex(a).expect("vertex in range");
            let ga = gamma_value(&h, ctx.p);
            if !(ga.gt(gm) || ga == gm) {
                failed.push("iii");
            }
            if ga == gm {
                let b = map.new_id(b).expect("other end survives");
                if in_some_minimum_set(&h, ctx.p, b).expect("finite value") {
                    failed.push(clause);
                }
            }
        };
        side(x, y, "iv");
        side(y, x, "v");
        if !failed.is_empty() {
            let details = json!({ "gamma_g": ctx.base, "gamma_g_minus_e": gm, "failed_items": failed });
            ctx.fail_edge(e, details);
        }
    }
}

fn oracle(ctx: &mut Ctx) {
    if ctx.g.n() > ORACLE_MAX_VERTICES {
        return;
    }
    ctx.outcome.instances += 1;
    let fast = gamma(ctx.g, ctx.p);
    let slow = gamma_oracle(ctx.g, ctx.p).expect("order within the oracle cap");
    if fast.value != slow.value || fast.witness != slow.witness {
        let details = json!({
            "gamma": fast.value, "witness": fast.witness,
            "oracle_gamma": slow.value, "oracle_witness": slow.witness,
        });
        ctx.fail(None, None, details);
    }
}
