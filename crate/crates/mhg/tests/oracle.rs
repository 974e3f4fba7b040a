use std::collections::BTreeSet;

use mhg::graph::{membership_check, EdgeLabelledGraph};
use mhg::oracle::{
    automorphisms, canonical_amalgam, enumerate_completions, enumerate_members, preserves, AmalgamTriple,
    ProfileTable, Report,
};
use mhg::params::{Ext, ParameterSet};
use proptest::prelude::*;

fn iib() -> ParameterSet {
    ParameterSet::finite(5, 3, 3, 16, 13)
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

/// Every labelling of the non-edges, filtered by membership.
fn brute_completions(g: &EdgeLabelledGraph, p: &ParameterSet) -> BTreeSet<Vec<u32>> {
    let delta = p.delta_fin().unwrap();
    let ne = g.non_edges();
    let mut out = BTreeSet::new();
    let total = (delta as usize).pow(ne.len() as u32);
    for code in 0..total {
        let mut c = g.clone();
        let mut rest = code;
        for &(u, v) in &ne {
            c.set(u, v, (rest % delta as usize) as u32 + 1);
            rest /= delta as usize;
        }
        if membership_check(&c, p).unwrap().is_pass() {
            out.insert(c.edges().into_iter().map(|e| e.2).collect());
        }
    }
    out
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

#[test]
fn profile_table_matches_enumeration() {
    let p = ParameterSet::finite(3, 1, 3, 10, 9);
    let table = ProfileTable::build(&p, 4).unwrap();
    for s in (0..table.len()).step_by(7) {
        let g = table.graph_of(s);
        assert_eq!(table.state_of(&g), s);
        let all = enumerate_completions(&g, &p).unwrap();
        assert_eq!(table.completable(s), !all.is_empty());
        assert_eq!(table.profile(s), all.profile());
    }
}

#[test]
fn members_of_small_classes() {
    // Diameter-3 class with every triangle allowed except those with odd
    // perimeter of at least 9 or non-metric ones.
    let p = ParameterSet::finite(3, 1, 3, 10, 9);
    assert_eq!(enumerate_members(&p, 2).unwrap().len(), 3);
    let three = enumerate_members(&p, 3).unwrap();
    assert!(three.iter().all(|g| membership_check(g, &p).unwrap().is_pass()));
}

#[test]
fn report_caps_recorded_violations() {
    let mut r = Report::default();
    for i in 0..1500 {
        r.violation(serde_json::json!(i), "x");
    }
    assert!(r.violations.len() <= 1001);
    assert!(!r.is_clean());
}

#[test]
fn canonical_amalgam_keeps_both_factors() {
    let p = iib();
    let members: Vec<EdgeLabelledGraph> = (2..=3).flat_map(|n| enumerate_members(&p, n).unwrap()).collect();
    let base = EdgeLabelledGraph::from_edges(1, &[]);
    let mut checked = 0;
    for a in &members {
        for b in &members {
            let Ok(t) = AmalgamTriple::new(base.clone(), a.clone(), b.clone()) else { continue };
            let am = canonical_amalgam(&t, &p, 3).unwrap();
            assert!(membership_check(&am, &p).unwrap().is_pass());
            // The left factor stays in place; the right one keeps the base
            // and has its other vertices appended.
            let left: Vec<usize> = (0..a.n()).collect();
            assert_eq!(am.induced(&left), *a);
            let right: Vec<usize> = (0..base.n()).chain(a.n()..a.n() + b.n() - base.n()).collect();
            assert_eq!(am.induced(&right), *b);
            checked += 1;
        }
    }
    assert!(checked > 100);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn enumeration_is_sound_and_exhaustive(g in partial_graph(2..=5, 3)) {
        let p = ParameterSet::finite(3, 1, 3, 10, 9);
        prop_assume!(g.non_edges().len() <= 6);
        let all = enumerate_completions(&g, &p).unwrap();
        for c in &all.completions {
            prop_assert!(membership_check(c, &p).unwrap().is_pass());
            for (u, v, d) in g.edges() {
                prop_assert_eq!(c.raw(u, v), d);
            }
        }
        let got: BTreeSet<Vec<u32>> = all.completions.iter().map(|c| c.edges().into_iter().map(|e| e.2).collect()).collect();
        prop_assert_eq!(got.len(), all.len());
        prop_assert_eq!(got, brute_completions(&g, &p));
    }

    #[test]
    fn automorphisms_form_a_group(g in partial_graph(2..=6, 3)) {
        let auts = automorphisms(&g).unwrap();
        let set: BTreeSet<Vec<usize>> = auts.iter().cloned().collect();
        let n = g.n();
        prop_assert!(set.contains(&(0..n).collect::<Vec<_>>()));
        for a in &auts {
            prop_assert!(preserves(&g, a));
            let mut inv = vec![0; n];
            for (i, &x) in a.iter().enumerate() {
                inv[x] = i;
            }
            prop_assert!(set.contains(&inv));
            for b in &auts {
                prop_assert!(set.contains(&compose(a, b)));
            }
        }
    }

    #[test]
    fn automorphisms_are_all_label_preserving_permutations(g in partial_graph(2..=5, 2)) {
        let n = g.n();
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            perms = perms
                .iter()
                .flat_map(|p| (0..n).filter(|x| !p.contains(x)).map(|x| [p.as_slice(), &[x]].concat()))
                .collect();
        }
        let brute: BTreeSet<Vec<usize>> = perms.into_iter().filter(|q| g.permuted(q) == g).collect();
        let got: BTreeSet<Vec<usize>> = automorphisms(&g).unwrap().into_iter().collect();
        prop_assert_eq!(got, brute);
    }

    #[test]
    fn infinite_diameter_is_rejected(n in 2usize..5) {
        let p = ParameterSet::new(Ext::Inf, Ext::Fin(1), Ext::Inf, Ext::Inf, Ext::Inf);
        prop_assert!(enumerate_completions(&EdgeLabelledGraph::new(n), &p).is_err());
    }
}
