use std::collections::BTreeSet;

use mhg::completion::{
    antipodal_complete_podefree, bipartite_complete, dispatch_complete, magic_complete, time_of, CompletionResult,
    DispatchOptions,
};
use mhg::graph::{membership_check, EdgeLabelledGraph};
use mhg::oracle::{is_completable, sampled_suite, SuiteOptions};
use mhg::params::{completion_parameters, enumerate_admissible, magic_set, Ext, Kind, ParameterSet};
use proptest::prelude::*;

fn primitive_sets(max_delta: u32) -> Vec<ParameterSet> {
    (3..=max_delta)
        .flat_map(|d| enumerate_admissible(d, false))
        .filter(|(_, v)| v.kind == Kind::Primitive)
        .map(|(p, _)| p)
        .collect()
}

fn bipartite(delta: u32, c0: u32) -> ParameterSet {
    let mut p = ParameterSet::bipartite(delta, c0);
    p.c1 = Ext::Fin(2 * delta + 1);
    p
}

fn partial_graph(n: std::ops::RangeInclusive<usize>, delta: u32) -> impl Strategy<Value = EdgeLabelledGraph> {
    n.prop_flat_map(move |n| {
        prop::collection::vec(0..=delta, n * (n - 1) / 2).prop_map(move |labels| {
            let mut g = EdgeLabelledGraph::new(n);
            let mut it = labels.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    let d = it.next().unwrap();
                    if d != 0 {
                        g.set(u, v, d);
                    }
                }
            }
            g
        })
    })
}

/// Every traced fork closes to a strictly later time than both its sides.
fn assert_time_consistent(r: &CompletionResult, delta: u32, m: u32, bipartite: bool) {
    for e in &r.trace {
        let Some(w) = e.witness else { continue };
        let t = time_of(e.dist, delta, m, bipartite).expect("fork targets have a time");
        assert_eq!(t, e.time);
        for side in [r.graph.raw(e.edge[0], w), r.graph.raw(e.edge[1], w)] {
            if let Some(ts) = time_of(side, delta, m, bipartite) {
                assert!(t > ts, "{e:?}: side {side} has time {ts}");
            }
        }
    }
}

#[test]
fn time_function_is_injective() {
    for p in primitive_sets(10) {
        let d = p.delta_fin().unwrap();
        for m in magic_set(&p).unwrap() {
            let times: Vec<u32> = (1..=d).filter_map(|x| time_of(x, d, m, false)).collect();
            let distinct: BTreeSet<u32> = times.iter().copied().collect();
            assert_eq!(times.len(), distinct.len(), "{p} M={m}");
            assert_eq!(times.len() as u32, d - 1);
        }
    }
}

#[test]
fn sampled_five_and_six_vertex_agreement() {
    for p in primitive_sets(5) {
        for m in completion_parameters(&p).unwrap() {
            let engine = mhg::completion::Completer::new(&p, m).unwrap();
            for n in [5, 6] {
                let r = sampled_suite(&engine, n, 40, 17, SuiteOptions::default()).unwrap();
                assert!(r.is_clean(), "{p} M={m}: {:?}", r.violations.first());
            }
        }
    }
}

#[test]
fn fill_edges_never_sit_in_forbidden_triangles() {
    let p = ParameterSet::finite(5, 3, 3, 16, 13);
    let g = EdgeLabelledGraph::cycle(&[1, 5, 5, 5, 1, 4]);
    let r = magic_complete(&g, &p, 3).unwrap();
    assert!(r.is_success());
    assert!(membership_check(&r.graph, &p).unwrap().is_pass());
}

#[test]
fn completion_result_json_round_trip() {
    let p = ParameterSet::finite(5, 3, 3, 16, 13);
    for labels in [&[1, 5, 5, 5][..], &[1, 1, 5, 5, 5]] {
        let r = magic_complete(&EdgeLabelledGraph::cycle(labels), &p, 3).unwrap();
        let back: CompletionResult = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}

#[test]
fn infinite_diameter_uses_path_distances() {
    let p = ParameterSet::new(Ext::Inf, Ext::Fin(1), Ext::Inf, Ext::Inf, Ext::Inf);
    let g = EdgeLabelledGraph::from_edges(4, &[(0, 1, 2), (1, 2, 3)]);
    let r = dispatch_complete(&g, &p, &DispatchOptions::default()).unwrap();
    assert!(r.is_success());
    assert_eq!(r.graph.raw(0, 2), 5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn primitive_traces_respect_time(g in partial_graph(3..=7, 5)) {
        let p = ParameterSet::finite(5, 3, 3, 16, 13);
        let r = magic_complete(&g, &p, 3).unwrap();
        assert_time_consistent(&r, 5, 3, false);
        let p = ParameterSet::finite(5, 1, 5, 16, 17);
        for m in completion_parameters(&p).unwrap() {
            let r = magic_complete(&g, &p, m).unwrap();
            assert_time_consistent(&r, 5, m, false);
        }
    }

    #[test]
    fn engine_agrees_with_oracle(g in partial_graph(3..=6, 4), pick in 0usize..20) {
        let sets = primitive_sets(4);
        let p = &sets[pick % sets.len()];
        prop_assume!(g.max_label() <= p.delta_fin().unwrap());
        for m in completion_parameters(p).unwrap() {
            let r = magic_complete(&g, p, m).unwrap();
            prop_assert_eq!(r.is_success(), is_completable(&g, p).unwrap());
            if r.is_success() {
                for (u, v, d) in g.edges() {
                    prop_assert_eq!(r.graph.raw(u, v), d);
                }
            }
        }
    }

    #[test]
    fn bipartite_outputs_have_no_odd_triangles(g in partial_graph(3..=7, 5)) {
        let p = bipartite(5, 14);
        for m in magic_set(&p).unwrap() {
            let r = bipartite_complete(&g, &p, m).unwrap();
            assert_time_consistent(&r, 5, m, true);
            if r.is_success() {
                let n = r.graph.n();
                for u in 0..n {
                    for v in u + 1..n {
                        for w in v + 1..n {
                            let per = r.graph.raw(u, v) + r.graph.raw(v, w) + r.graph.raw(u, w);
                            prop_assert_eq!(per % 2, 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn antipodal_delta_edges_form_a_perfect_matching(g in partial_graph(2..=4, 4)) {
        let p = ParameterSet::finite(4, 1, 3, 10, 9);
        let r = dispatch_complete(&g, &p, &DispatchOptions::default()).unwrap();
        if r.is_success() {
            prop_assert_eq!(r.graph.n(), g.n());
            let sym = mhg::graph::antipodal_symmetrize(&g, &p).unwrap();
            let full = antipodal_complete_podefree(&sym, &p).unwrap();
            let n = full.graph.n();
            for u in 0..n {
                let partners = (0..n).filter(|&v| v != u && full.graph.raw(u, v) == 4).count();
                prop_assert_eq!(partners, 1);
            }
        }
    }
}
