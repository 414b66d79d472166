//! Randomized invariants over graphs larger than the exhaustive corpora.

use domlab_core::canon::{canonical_code, is_isomorphic};
use domlab_core::io::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use domlab_core::multisubdivision::{profile, Msd};
use domlab_core::solver::{gamma, gamma_oracle, is_dominating, Gamma};
use domlab_core::verifier::{run_suite, Status, SuiteId, SuiteOptions};
use domlab_core::{Edge, Execution, Graph, Property, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn graph_with_edge(max_n: usize) -> impl Strategy<Value = (Graph, Edge)> {
    graph(max_n)
        .prop_filter("needs an edge", |g| g.edge_count() > 0)
        .prop_flat_map(|g| {
            let m = g.edge_count();
            (Just(g), 0..m)
        })
        .prop_map(|(g, i)| {
            let e = g.edges().nth(i).unwrap();
            (g, e)
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn property() -> impl Strategy<Value = Property> {
    proptest::sample::select(Property::CATALOG.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = to_graph6(&g).unwrap();
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_graph6(&back).unwrap(), text);
    }

    #[test]
    fn edge_list_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn delete_then_add_restores((g, e) in graph_with_edge(12)) {
        let minus = g.delete_edge(e).unwrap();
        prop_assert_eq!(minus.edge_count() + 1, g.edge_count());
        prop_assert!(!minus.has_edge(e.u(), e.v()));
        prop_assert_eq!(minus.add_edge(e).unwrap(), g);
    }

    #[test]
    fn subdivision_shape((g, e) in graph_with_edge(10), t in 1usize..6) {
        let n = g.n();
        let s = g.subdivide_edge(e, t).unwrap();
        prop_assert_eq!(s.n(), n + t);
        prop_assert_eq!(s.edge_count(), g.edge_count() + t);
        prop_assert!(!s.has_edge(e.u(), e.v()));
        prop_assert!(s.has_edge(e.u(), n) && s.has_edge(n + t - 1, e.v()));
        for x in n..n + t {
            prop_assert_eq!(s.degree(x).unwrap(), 2);
        }
    }

    /// Subdividing a path edge next to v again lengthens the same path.
    #[test]
    fn subdivisions_compose((g, e) in graph_with_edge(8), a in 1usize..4, b in 1usize..4) {
        let n = g.n();
        let twice = g.subdivide_edge(e, a).unwrap().subdivide_edge(Edge::new(n + a - 1, e.v()).unwrap(), b).unwrap();
        prop_assert!(is_isomorphic(&twice, &g.subdivide_edge(e, a + b).unwrap()));
    }

    #[test]
    fn vertex_deletion_maps_edges(g in graph(12), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.n() > 0);
        let v = pick.index(g.n());
        let (h, map) = g.delete_vertex(v).unwrap();
        prop_assert_eq!(h.n() + 1, g.n());
        prop_assert_eq!(h.edge_count() + g.degree(v).unwrap(), g.edge_count());
        for e in h.edges() {
            prop_assert!(g.has_edge(map.old_id(e.u()), map.old_id(e.v())));
        }
        prop_assert_eq!(map.new_id(v), None);
    }

    /// `pn[x, X]` against its definition `{y : N[y] ∩ X = {x}}`.
    #[test]
    fn private_neighbours_by_definition(g in graph(6), bits in any::<u64>()) {
        let set = VertexSet::from_bits(bits).intersection(g.vertices());
        for x in set.iter() {
            let expected: VertexSet = g
                .vertices()
                .iter()
                .filter(|&y| g.closed_neighborhood(y).unwrap().intersection(set) == VertexSet::singleton(x))
                .collect();
            prop_assert_eq!(g.private_neighbors(x, set).unwrap(), expected);
        }
    }

    #[test]
    fn canonical_code_ignores_labels(g in graph(9).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) })) {
        let (g, perm) = g;
        prop_assert_eq!(canonical_code(&g), canonical_code(&g.permute(&perm)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn solver_matches_oracle(g in graph(10), p in property()) {
        let fast = gamma(&g, p);
        let slow = gamma_oracle(&g, p).unwrap();
        prop_assert_eq!(&fast, &slow);
        if let Some(w) = fast.witness {
            prop_assert!(is_dominating(&g, w));
            prop_assert!(p.holds_induced(&g, w));
            prop_assert_eq!(fast.value, Gamma::Finite(w.len()));
        }
    }

    #[test]
    fn value_is_relabeling_invariant(g in graph(10).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) }), p in property()) {
        let (g, perm) = g;
        prop_assert_eq!(gamma(&g, p).value, gamma(&g.permute(&perm), p).value);
    }

    #[test]
    fn profile_definitions((g, e) in graph_with_edge(8), p in property()) {
        let pr = profile(&g, e, p, 4).unwrap();
        prop_assert_eq!(pr.values[0], gamma(&g, p).value);
        if pr.in_scope {
            prop_assert_eq!(pr.msd, pr.msd_plus.min(pr.msd_minus));
        }
        if p == Property::Any {
            prop_assert_eq!(pr.msd_minus, Msd::ProvenInfinite);
            prop_assert!(pr.values.iter().all(|v| !v.lt(pr.values[0])));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Every in-scope suite also holds on random graphs of order 8 to 9.
    #[test]
    fn suites_hold_beyond_the_corpus(g in graph(9).prop_filter("order 8 or 9", |g| g.n() >= 8), p in property()) {
        let options = SuiteOptions { exec: Execution::Sequential, ..Default::default() };
        let corpus = [g];
        for suite in SuiteId::ALL {
            if suite == SuiteId::FlagAudit {
                continue;
            }
            let r = run_suite(suite, p, &corpus, &options);
            prop_assert_ne!(r.status, Status::Fail, "{} {}: {:?}", suite, p, r.violations.first());
        }
    }
}
