//! Exact deciders against the brute-force oracles.

use forestnet::classify::{classify_all, is_tree_based_phylo};
use forestnet::oracles::{
    brute_force_base_forests, brute_force_forest_based, brute_force_proper, brute_force_tree_based,
    enumerate_binary_networks, random_network, Bias, EnumerationLimits, GenParams,
};
use forestnet::universal::{enumerate_forests, forbidden_configuration, is_universal_forest_based};
use forestnet::{
    decide_forest_based, decide_proper_forest_based, decide_proper_two_rooted, is_based_on, verify_certificate,
    Network,
};

fn every_network(labels: &[&str], max_vertices: usize) -> Vec<Network> {
    let mut all = Vec::new();
    enumerate_binary_networks(labels, EnumerationLimits::vertices(max_vertices), |n| {
        all.push(n);
        true
    });
    all
}

#[test]
fn forest_based_on_all_small_binary_networks() {
    for (labels, b) in [(&["a", "b"][..], 8), (&["a", "b", "c"], 9), (&["a", "b", "c", "d"], 10)] {
        for n in every_network(labels, b) {
            let exact = decide_forest_based(&n).unwrap();
            if let Some(c) = &exact {
                verify_certificate(&n, c).unwrap();
            }
            assert_eq!(exact.is_some(), brute_force_forest_based(&n).unwrap());
            if n.root_count() >= 2 {
                assert_eq!(decide_proper_forest_based(&n).unwrap().is_some(), brute_force_proper(&n).unwrap());
            }
            if n.root_count() == 2 {
                assert_eq!(decide_proper_two_rooted(&n).unwrap().is_proper(), brute_force_proper(&n).unwrap());
            }
        }
    }
}

#[test]
fn tree_based_matches_brute_force() {
    let mut checked = 0;
    for seed in 0..600 {
        let Ok(n) = random_network(&GenParams::new(seed, 4, 1).leaves(2, 5).hybrids(0, 4).max_vertices(18)) else {
            continue;
        };
        if !n.is_binary() {
            continue;
        }
        assert_eq!(is_tree_based_phylo(&n).unwrap(), brute_force_tree_based(&n).unwrap());
        checked += 1;
    }
    assert!(checked > 400);
}

#[test]
fn embedding_finds_exactly_the_base_forests() {
    for n in every_network(&["a", "b", "c"], 8) {
        let base = brute_force_base_forests(&n).unwrap();
        for f in enumerate_forests(&["a", "b", "c"]).unwrap().forests() {
            let embeds = is_based_on(&n, f).unwrap();
            if let Some(c) = &embeds {
                verify_certificate(&n, c).unwrap();
            }
            assert_eq!(embeds.is_some(), base.iter().any(|g| g.is_equivalent(f)));
        }
    }
}

#[test]
fn classification_is_consistent_on_samples() {
    for seed in 0..400 {
        let bias = [Bias::Unconstrained, Bias::TreeChild, Bias::Arboreal, Bias::ForestSeeded][seed as usize % 4];
        let roots = 1 + (seed as usize / 4) % 3;
        let p = GenParams::new(seed, 2 * roots + 2, roots).hybrids(roots - 1, roots + 1).bias(bias);
        let Ok(n) = random_network(&p) else { continue };
        let report = classify_all(&n).unwrap();
        assert_eq!(report.inconsistency(), None);
        if bias == Bias::TreeChild {
            assert!(report.tree_child && report.forest_based);
        }
    }
}

/// Binary phylogenetic forests counted by the number of blocks of each
/// size: a block of size k has (2k-3)!! shapes.
fn forest_count(n: usize) -> usize {
    fn shapes(k: usize) -> usize {
        (1..=(2 * k).saturating_sub(3)).rev().step_by(2).product::<usize>().max(1)
    }
    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    // f(n) counts forests with any number of blocks, by the block of the first label
    let mut f = vec![1usize; n + 1];
    for m in 1..=n {
        f[m] = (1..=m).map(|k| binom(m - 1, k - 1) * shapes(k) * f[m - k]).sum();
    }
    f[n] - shapes(n)
}

#[test]
fn forest_catalog_sizes() {
    let labels = ["a", "b", "c", "d", "e", "f"];
    for k in 2..=6 {
        let catalog = enumerate_forests(&labels[..k]).unwrap();
        assert_eq!(catalog.len(), forest_count(k), "{k} labels");
        for (i, f) in catalog.forests().iter().enumerate() {
            assert!(f.is_binary() && f.len() >= 2);
            assert!(catalog.forests()[i + 1..].iter().all(|g| !g.is_equivalent(f)));
        }
    }
    assert_eq!(forest_count(3), 4);
    assert_eq!(forest_count(4), 22);
}

#[test]
fn forbidden_configuration_blocks_universality() {
    for n in every_network(&["a", "b", "c", "d"], 11) {
        if forbidden_configuration(&n).is_some() {
            assert!(!is_universal_forest_based(&n).unwrap().is_universal());
        }
    }
}

#[test]
fn universal_networks_are_forest_based() {
    for n in every_network(&["a", "b", "c"], 9) {
        let report = is_universal_forest_based(&n).unwrap();
        if report.is_universal() {
            assert!(decide_forest_based(&n).unwrap().is_some());
            assert_eq!(brute_force_base_forests(&n).unwrap().len(), 4);
        }
    }
}
