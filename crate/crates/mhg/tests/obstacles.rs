use std::collections::BTreeSet;

use mhg::graph::EdgeLabelledGraph;
use mhg::obstacles::{
    backward_expand, canonical, enumerate_obstacles, find_obstacle, has_homomorphic_image, verify_obstacle_closure,
    Decider, LabelledCycle, ObstacleCatalogue,
};
use mhg::params::{completion_parameter, enumerate_admissible, Kind, ParameterSet};
use proptest::prelude::*;

fn iib() -> ParameterSet {
    ParameterSet::finite(5, 3, 3, 16, 13)
}

fn cycles(items: &[&str]) -> BTreeSet<LabelledCycle> {
    items.iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn backward_expansion_of_listed_triangles() {
    let p = iib();
    for (tri, expected) in [
        ("124", &["1114", "1554", "1215", "1251"][..]),
        ("122", &["1112", "1552"]),
        ("445", &["1545", "5145", "4155"]),
    ] {
        // Expansion yields candidates; the listed ones must be among them.
        let got = backward_expand(&tri.parse().unwrap(), &p, 3);
        assert!(cycles(expected).is_subset(&got), "{tri}: {got:?}");
    }
}

#[test]
fn length_four_obstacles_come_from_triangles() {
    let p = iib();
    let cat = enumerate_obstacles(&p, 4, Decider::Engine).unwrap();
    let reachable: BTreeSet<LabelledCycle> =
        cat.cycles[&3].iter().flat_map(|t| backward_expand(t, &p, 3)).collect();
    for c in &cat.cycles[&4] {
        assert!(reachable.contains(c), "{c}");
    }
}

#[test]
fn deciders_agree_on_short_cycles_for_all_small_primitive_sets() {
    for d in 3..=5 {
        for (p, v) in enumerate_admissible(d, false) {
            if v.kind != Kind::Primitive {
                continue;
            }
            let e = enumerate_obstacles(&p, 5, Decider::Engine).unwrap();
            let o = enumerate_obstacles(&p, 5, Decider::Oracle).unwrap();
            assert_eq!(e.cycles, o.cycles, "{p}");
        }
    }
}

#[test]
fn catalogue_json_shape_and_round_trip() {
    let cat = enumerate_obstacles(&iib(), 5, Decider::Engine).unwrap();
    let v = serde_json::to_value(&cat).unwrap();
    assert_eq!(v["bound_theoretical"], 96);
    assert!(v["cycles"]["3"].as_array().unwrap().iter().any(|c| c == "1 2 4"));
    let back: ObstacleCatalogue = serde_json::from_value(v).unwrap();
    assert_eq!(back, cat);
}

#[test]
fn closure_holds_on_random_inputs() {
    let p = iib();
    let cat = enumerate_obstacles(&p, 5, Decider::Engine).unwrap();
    let r = verify_obstacle_closure(&p, &cat, 500, 5).unwrap();
    assert!(r.is_clean(), "{:?}", r.violations.first());
}

#[test]
fn obstacle_found_in_failing_cycle() {
    let p = iib();
    let cat = enumerate_obstacles(&p, 5, Decider::Engine).unwrap();
    let g = EdgeLabelledGraph::cycle(&[1, 1, 5, 5, 5]);
    assert!(find_obstacle(&g, &cat).is_some());
    assert!(find_obstacle(&EdgeLabelledGraph::cycle(&[1, 5, 5, 5]), &cat).is_none());
    // A single edge carries closed walks of even length only.
    let edge = EdgeLabelledGraph::from_edges(2, &[(0, 1, 1)]);
    assert!(!has_homomorphic_image(&edge, &[1, 1, 1]));
    assert!(has_homomorphic_image(&edge, &[1, 1]));
}

#[test]
fn invalid_requests_are_rejected() {
    assert_eq!(completion_parameter(&iib()).unwrap(), 3);
    assert!(enumerate_obstacles(&iib(), 9, Decider::Engine).is_err());
    let antipodal = ParameterSet::finite(4, 1, 3, 10, 9);
    assert!(enumerate_obstacles(&antipodal, 4, Decider::Engine).is_err());
    assert!("12a".parse::<LabelledCycle>().is_err());
    assert!(LabelledCycle::new(&[1, 2]).is_err());
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent_and_invariant(
        labels in prop::collection::vec(1u32..=5, 3..9),
        shift in 0usize..9,
        flip in any::<bool>(),
    ) {
        let c = canonical(&labels);
        prop_assert_eq!(canonical(&c), c.clone());
        let k = labels.len();
        let mut moved: Vec<u32> = (0..k).map(|i| labels[(i + shift) % k]).collect();
        if flip {
            moved.reverse();
        }
        prop_assert_eq!(canonical(&moved), c.clone());
        let cycle = LabelledCycle::new(&labels).unwrap();
        prop_assert_eq!(cycle.labels(), &c[..]);
        prop_assert_eq!(cycle.to_string().parse::<LabelledCycle>().unwrap(), cycle.clone());
        let back: LabelledCycle = serde_json::from_str(&serde_json::to_string(&cycle).unwrap()).unwrap();
        prop_assert_eq!(back, cycle);
    }
}
