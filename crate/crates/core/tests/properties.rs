use proptest::prelude::*;

use forestnet::clusters::{arboreal_from_clusters, check_p123, cluster_system};
use forestnet::io::{export_dot, parse_certificate, parse_network, parse_newick_tree, print_certificate, print_network};
use forestnet::oracles::{random_network, Bias, GenParams};
use forestnet::{decide_forest_based, extract_base_forest, verify_certificate, Network};

fn bias() -> impl Strategy<Value = Bias> {
    prop_oneof![Just(Bias::Unconstrained), Just(Bias::TreeChild), Just(Bias::Arboreal), Just(Bias::ForestSeeded)]
}

fn network() -> impl Strategy<Value = Network> {
    (any::<u64>(), 1usize..4, bias()).prop_filter_map("infeasible draw", |(seed, roots, bias)| {
        let leaves = if bias == Bias::TreeChild { 2 * roots + 1 } else { roots + 2 };
        random_network(&GenParams::new(seed, leaves, roots).bias(bias)).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generation_is_deterministic(seed in any::<u64>(), roots in 1usize..4) {
        let p = GenParams::new(seed, roots + 2, roots);
        prop_assert_eq!(random_network(&p).map(|n| print_network(&n)), random_network(&p).map(|n| print_network(&n)));
    }

    #[test]
    fn text_round_trip(n in network()) {
        let text = print_network(&n);
        let again = parse_network(&text).unwrap();
        prop_assert_eq!(print_network(&again), text);
        prop_assert!(again.is_equivalent(&n).unwrap());
    }

    #[test]
    fn certificates_verify_and_round_trip(n in network()) {
        if let Some(c) = decide_forest_based(&n).unwrap() {
            prop_assert_eq!(verify_certificate(&n, &c), Ok(()));
            let back = parse_certificate(&n, &print_certificate(&n, &c)).unwrap();
            prop_assert_eq!(back.retained_arcs(), c.retained_arcs());
            let forest = extract_base_forest(&n, &c).unwrap();
            prop_assert_eq!(forest.len(), c.component_count());
            for t in forest.trees() {
                prop_assert!(parse_newick_tree(&t.to_newick()).unwrap().is_equivalent(t));
            }
            let dot = export_dot(&n, Some(&c));
            prop_assert_eq!(dot.matches("style=dashed").count(), c.contact_arcs(&n).count());
        }
    }

    #[test]
    fn arboreal_cluster_round_trip(seed in any::<u64>(), roots in 2usize..5) {
        if let Ok(n) = random_network(&GenParams::new(seed, roots + 3, roots).bias(Bias::Arboreal)) {
            let c = cluster_system(&n);
            prop_assert!(check_p123(&c).all_hold());
            let rebuilt = arboreal_from_clusters(&c).unwrap();
            prop_assert_eq!(cluster_system(&rebuilt), c);
            prop_assert_eq!(rebuilt.root_count(), n.root_count());
        }
    }

    #[test]
    fn leaves_bound_roots_when_forest_based(n in network()) {
        if let Some(c) = decide_forest_based(&n).unwrap() {
            prop_assert!(n.leaf_count() >= n.root_count());
            if n.leaf_count() == n.root_count() {
                prop_assert!(c.is_proper(&n));
            }
        }
    }
}
