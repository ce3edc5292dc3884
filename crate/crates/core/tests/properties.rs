use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::Index;

use vogan_core::catalog::{build_preferred_diagram, root_realization, small_instances};
use vogan_core::engine::{
    automorphisms, classify, equivalent, f_orbit, f_related, is_admissible, odd_removed_components, press, reduce,
    reflection_report, toggled_neighbors, Circling, PressSequence, DEFAULT_ORBIT_CAP,
};
use vogan_core::{Diagram, FamilySpec, NodeId};

fn specs() -> Vec<FamilySpec> {
    small_instances(9)
}

fn diagram_at(index: &Index) -> (FamilySpec, Diagram) {
    let all = specs();
    let spec = all[index.index(all.len())].clone();
    let d = build_preferred_diagram(&spec).unwrap();
    (spec, d)
}

/// Circling made of the even vertices picked out by the bits of `bits`.
fn circling_from_bits(d: &Diagram, bits: u64) -> Circling {
    d.even_ids().into_iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, id)| id).collect()
}

fn pick(c: &Circling, index: &Index) -> Option<NodeId> {
    let ids = c.to_vec();
    (!ids.is_empty()).then(|| ids[index.index(ids.len())])
}

/// Walks `steps` random presses from `c`.
fn random_walk(d: &Diagram, c: &Circling, choices: &[Index]) -> (Circling, PressSequence) {
    let mut at = c.clone();
    let mut steps = Vec::new();
    for choice in choices {
        if let Some(i) = pick(&at, choice) {
            at = press(d, &at, i).unwrap();
            steps.push(i);
        }
    }
    (at, PressSequence::new(steps))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn press_is_an_involution(di in any::<Index>(), bits in any::<u64>(), vi in any::<Index>()) {
        let (_, d) = diagram_at(&di);
        let c = circling_from_bits(&d, bits);
        if let Some(i) = pick(&c, &vi) {
            let once = press(&d, &c, i).unwrap();
            prop_assert!(once.contains(i));
            prop_assert_eq!(press(&d, &once, i).unwrap(), c);
        }
    }

    #[test]
    fn press_is_local(di in any::<Index>(), bits in any::<u64>(), vi in any::<Index>()) {
        let (_, d) = diagram_at(&di);
        let c = circling_from_bits(&d, bits);
        if let Some(i) = pick(&c, &vi) {
            let out = press(&d, &c, i).unwrap();
            let neighbors: BTreeSet<NodeId> = d.neighbors(i).collect();
            for node in d.nodes() {
                let changed = c.contains(node.id) != out.contains(node.id);
                if changed {
                    prop_assert!(neighbors.contains(&node.id));
                    prop_assert!(node.is_even());
                }
                if !node.is_even() {
                    prop_assert!(!out.contains(node.id));
                }
            }
            prop_assert!(out.contains(i));
        }
    }

    #[test]
    fn orbit_members_share_the_orbit(di in any::<Index>(), bits in any::<u64>(), mi in any::<Index>()) {
        let (_, d) = diagram_at(&di);
        let c = circling_from_bits(&d, bits);
        let orbit = f_orbit(&d, &c).unwrap();
        let member = &orbit.members[mi.index(orbit.len())];
        let other = f_orbit(&d, member).unwrap();
        let a: BTreeSet<_> = orbit.members.iter().cloned().collect();
        let b: BTreeSet<_> = other.members.iter().cloned().collect();
        prop_assert_eq!(a, b);
        let path = orbit.path_to(member).unwrap();
        prop_assert_eq!(&path.replay(&d, &c).unwrap(), member);
        for m in &orbit.members {
            for i in m.ids() {
                prop_assert!(orbit.contains(&press(&d, m, i).unwrap()));
            }
        }
        prop_assert_eq!(orbit.min_size, orbit.members.iter().map(Circling::len).min().unwrap());
    }

    #[test]
    fn f_relatedness_is_an_equivalence(
        di in any::<Index>(),
        bits in any::<u64>(),
        walk1 in prop::collection::vec(any::<Index>(), 0..12),
        walk2 in prop::collection::vec(any::<Index>(), 0..12),
    ) {
        let (_, d) = diagram_at(&di);
        let a = circling_from_bits(&d, bits);
        let (b, ab) = random_walk(&d, &a, &walk1);
        let (c, bc) = random_walk(&d, &b, &walk2);

        prop_assert!(f_related(&d, &a, &a).unwrap().unwrap().is_empty());
        let found = f_related(&d, &a, &b).unwrap().unwrap();
        prop_assert_eq!(&found.replay(&d, &a).unwrap(), &b);
        prop_assert!(found.len() <= ab.len());
        let back = f_related(&d, &b, &a).unwrap().unwrap();
        prop_assert_eq!(&back.replay(&d, &b).unwrap(), &a);
        prop_assert_eq!(ab.reversed().replay(&d, &b).unwrap(), a.clone());
        prop_assert_eq!(ab.then(&bc).replay(&d, &a).unwrap(), c.clone());
        prop_assert!(f_related(&d, &a, &c).unwrap().is_some());
    }

    #[test]
    fn symmetries_commute_with_presses(di in any::<Index>(), bits in any::<u64>(), vi in any::<Index>()) {
        let (_, d) = diagram_at(&di);
        let c = circling_from_bits(&d, bits);
        if let Some(i) = pick(&c, &vi) {
            for s in automorphisms(&d) {
                let lhs = s.apply_circling(&press(&d, &c, i).unwrap());
                let rhs = press(&d, &s.apply_circling(&c), s.apply(i)).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn automorphisms_form_a_group(di in any::<Index>()) {
        let (_, d) = diagram_at(&di);
        let group = automorphisms(&d);
        prop_assert!(group[0].is_identity());
        let perms: BTreeSet<Vec<NodeId>> = group.iter().map(|s| s.perm().to_vec()).collect();
        for s in &group {
            prop_assert!(perms.contains(s.inverse().perm()));
            for t in &group {
                let composed: Vec<NodeId> = d.ids().map(|k| s.apply(t.apply(k))).collect();
                prop_assert!(perms.contains(&composed));
            }
        }
    }

    #[test]
    fn reduction_respects_the_bound(di in any::<Index>(), bits in any::<u64>()) {
        let (_, d) = diagram_at(&di);
        let c = circling_from_bits(&d, bits);
        let bound = odd_removed_components(&d);
        prop_assert!(f_orbit(&d, &c).unwrap().min_size <= bound);
        if is_admissible(&d, &c).unwrap() {
            let (min, steps) = reduce(&d, &c).unwrap();
            prop_assert!(min.len() <= bound);
            prop_assert_eq!(steps.replay(&d, &c).unwrap(), min.clone());
            let orbit = f_orbit(&d, &c).unwrap();
            prop_assert_eq!(orbit.minimum(), &min);
        }
    }

    #[test]
    fn related_implies_equivalent(di in any::<Index>(), bits in any::<u64>(), walk in prop::collection::vec(any::<Index>(), 0..10)) {
        let (_, d) = diagram_at(&di);
        let a = circling_from_bits(&d, bits);
        let (b, _) = random_walk(&d, &a, &walk);
        if is_admissible(&d, &a).unwrap() && is_admissible(&d, &b).unwrap() {
            let w = equivalent(&d, &a, &b).unwrap().unwrap();
            prop_assert_eq!(w.replay(&d, &a).unwrap(), b);
        }
    }

    #[test]
    fn equivalence_is_symmetric(di in any::<Index>(), b1 in any::<u64>(), b2 in any::<u64>()) {
        let (_, d) = diagram_at(&di);
        let a = circling_from_bits(&d, b1);
        let b = circling_from_bits(&d, b2);
        if is_admissible(&d, &a).unwrap() && is_admissible(&d, &b).unwrap() {
            let ab = equivalent(&d, &a, &b).unwrap();
            let ba = equivalent(&d, &b, &a).unwrap();
            prop_assert_eq!(ab.is_some(), ba.is_some());
            if let Some(w) = ab {
                prop_assert_eq!(w.replay(&d, &a).unwrap(), b);
            }
        }
    }

    #[test]
    fn reflection_matches_press(di in any::<Index>(), bits in any::<u64>(), vi in any::<Index>()) {
        let (spec, d) = diagram_at(&di);
        let r = root_realization(&spec).unwrap();
        let c = circling_from_bits(&d, bits);
        if let Some(i) = pick(&c, &vi) {
            let report = reflection_report(&d, &r, &c, i).unwrap();
            prop_assert!(report.all_ok(), "{spec} vertex {i}: {report:?}");
            let toggled: Vec<NodeId> = report.neighbors.iter().filter(|n| n.toggled).map(|n| n.neighbor).collect();
            prop_assert_eq!(toggled, toggled_neighbors(&d, i).unwrap());
        }
    }

    #[test]
    fn circling_json_round_trips(di in any::<Index>(), bits in any::<u64>()) {
        let (_, d) = diagram_at(&di);
        let c = circling_from_bits(&d, bits);
        let back: Circling = serde_json::from_str(&c.to_json()).unwrap();
        prop_assert_eq!(back, c);
    }
}

#[test]
fn classes_are_a_stable_partition() {
    for spec in small_instances(7) {
        let d = build_preferred_diagram(&spec).unwrap();
        let classes = classify(&d, DEFAULT_ORBIT_CAP).unwrap();
        let mut seen = BTreeSet::new();
        let class_of = |c: &Circling| classes.iter().position(|k| k.members.binary_search(c).is_ok());
        for class in &classes {
            for m in &class.members {
                assert!(seen.insert(m.clone()), "{spec}: {m} in two classes");
            }
        }
        let total = 1u64 << d.even_ids().len();
        let admissible: BTreeSet<Circling> = (0..total)
            .map(|bits| circling_from_bits(&d, bits))
            .filter(|c| is_admissible(&d, c).unwrap())
            .collect();
        assert_eq!(seen, admissible, "{spec}: classes do not cover");
        let symmetries = automorphisms(&d);
        for (k, class) in classes.iter().enumerate() {
            assert_eq!(class.representative, *class.members.iter().min().unwrap());
            for m in &class.members {
                for i in m.ids() {
                    let next = press(&d, m, i).unwrap();
                    if is_admissible(&d, &next).unwrap() {
                        assert_eq!(class_of(&next), Some(k), "{spec}: press {i} on {m} leaves the class");
                    }
                }
                for s in &symmetries {
                    let image = s.apply_circling(m);
                    if is_admissible(&d, &image).unwrap() {
                        assert_eq!(class_of(&image), Some(k), "{spec}: symmetry {s} moves {m} out");
                    }
                }
            }
        }
    }
}

#[test]
fn catalog_json_round_trips() {
    for spec in specs() {
        let d = build_preferred_diagram(&spec).unwrap();
        let text = d.to_json();
        let back = Diagram::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert_eq!(back.nodes(), d.nodes());
        assert_eq!(back.edges(), d.edges());
    }
}
