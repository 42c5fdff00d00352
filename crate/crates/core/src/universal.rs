//! Universal forest-based networks: networks into which every binary
//! phylogenetic forest on their label set embeds.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::budget::Budget;
use crate::clusters::{tree_from_hierarchy, Cluster, ClusterSystem};
use crate::forest::{is_based_on_with, ForestCertificate, ForestError};
use crate::network::Network;
use crate::oracles::{enumerate_binary_networks, EnumerationLimits};
use crate::trees::{PhyloForest, PhyloTree};

/// Largest label set [`enumerate_forests`] accepts.
pub const MAX_CATALOG_LABELS: usize = 6;
/// Largest label set [`is_universal_forest_based`] accepts.
pub const MAX_UNIVERSAL_LABELS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniversalError {
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("the network is not binary")]
    NotBinary,
    #[error(transparent)]
    Forest(#[from] ForestError),
}

/// All binary phylogenetic forests with at least two trees on a label set.
#[derive(Clone, Debug)]
pub struct ForestCatalog {
    labels: Vec<String>,
    forests: Vec<PhyloForest>,
}

impl ForestCatalog {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn forests(&self) -> &[PhyloForest] {
        &self.forests
    }

    pub fn len(&self) -> usize {
        self.forests.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forests.is_empty()
    }
}

/// Set partitions of `items`, blocks in order of their first element.
fn partitions(items: &[String]) -> Vec<Vec<Vec<String>>> {
    let Some((first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for p in partitions(rest) {
        let mut alone = vec![vec![first.clone()]];
        alone.extend(p.iter().cloned());
        out.push(alone);
        for i in 0..p.len() {
            let mut joined = p.clone();
            joined[i].insert(0, first.clone());
            out.push(joined);
        }
    }
    out
}

/// Non-singleton clusters of every binary tree on `block`.
fn shapes(block: &[String]) -> Vec<Vec<Cluster>> {
    if block.len() == 1 {
        return vec![Vec::new()];
    }
    let whole: Cluster = block.iter().cloned().collect();
    let (first, rest) = block.split_first().expect("non-empty block");
    let mut out = Vec::new();
    // the side holding `first` is chosen by the subset of `rest` joining it
    for bits in 0..(1u32 << rest.len()) - 1 {
        let mut left = vec![first.clone()];
        let mut right = Vec::new();
        for (i, l) in rest.iter().enumerate() {
            if bits >> i & 1 == 1 { left.push(l.clone()) } else { right.push(l.clone()) }
        }
        for a in shapes(&left) {
            for b in shapes(&right) {
                let mut c = vec![whole.clone()];
                c.extend(a.iter().cloned());
                c.extend(b.iter().cloned());
                if left.len() > 1 {
                    c.push(left.iter().cloned().collect());
                }
                if right.len() > 1 {
                    c.push(right.iter().cloned().collect());
                }
                out.push(c);
            }
        }
    }
    out
}

fn block_trees(block: &[String]) -> Vec<PhyloTree> {
    if block.len() == 1 {
        return vec![PhyloTree::single(&block[0])];
    }
    shapes(block)
        .into_iter()
        .map(|mut c| {
            c.extend(block.iter().map(|l| Cluster::from([l.clone()])));
            let h = ClusterSystem::from_clusters(c).expect("clusters of a binary tree");
            tree_from_hierarchy(&h).expect("clusters of a binary tree form a hierarchy")
        })
        .collect()
}

pub fn enumerate_forests<S: AsRef<str>>(labels: &[S]) -> Result<ForestCatalog, UniversalError> {
    let labels: Vec<String> =
        labels.iter().map(|l| l.as_ref().to_owned()).collect::<BTreeSet<_>>().into_iter().collect();
    if !(2..=MAX_CATALOG_LABELS).contains(&labels.len()) {
        return Err(UniversalError::TooLarge(format!(
            "{} labels, the catalog covers 2 to {MAX_CATALOG_LABELS}",
            labels.len()
        )));
    }
    let mut forests = Vec::new();
    for p in partitions(&labels).into_iter().filter(|p| p.len() >= 2) {
        let options: Vec<Vec<PhyloTree>> = p.iter().map(|b| block_trees(b)).collect();
        let mut pick = vec![0; options.len()];
        loop {
            let trees = pick.iter().zip(&options).map(|(&i, o)| o[i].clone()).collect();
            forests.push(PhyloForest::new(trees).expect("blocks partition the labels"));
            let Some(k) = (0..pick.len()).find(|&k| pick[k] + 1 < options[k].len()) else {
                break;
            };
            pick[k] += 1;
            pick[..k].iter_mut().for_each(|i| *i = 0);
        }
    }
    Ok(ForestCatalog { labels, forests })
}

#[derive(Clone, Debug)]
pub struct UniversalReport {
    /// Every forest tested so far, with its embedding.
    pub embedded: Vec<(PhyloForest, ForestCertificate)>,
    /// The first forest that does not embed.
    pub failing: Option<PhyloForest>,
}

impl UniversalReport {
    pub fn is_universal(&self) -> bool {
        self.failing.is_none()
    }
}

pub fn is_universal_forest_based_with(network: &Network, budget: &mut Budget) -> Result<UniversalReport, UniversalError> {
    if !network.is_binary() {
        return Err(UniversalError::NotBinary);
    }
    if network.leaf_count() > MAX_UNIVERSAL_LABELS {
        return Err(UniversalError::TooLarge(format!(
            "{} leaves, universality is tested up to {MAX_UNIVERSAL_LABELS}",
            network.leaf_count()
        )));
    }
    let labels: Vec<&str> = network.labels().collect();
    let catalog = enumerate_forests(&labels)?;
    let mut embedded = Vec::new();
    for forest in catalog.forests {
        match is_based_on_with(network, &forest, budget)? {
            Some(cert) => embedded.push((forest, cert)),
            None => return Ok(UniversalReport { embedded, failing: Some(forest) }),
        }
    }
    Ok(UniversalReport { embedded, failing: None })
}

/// Tests every forest of the catalog against `network`, stopping at the
/// first one that does not embed.
pub fn is_universal_forest_based(network: &Network) -> Result<UniversalReport, UniversalError> {
    is_universal_forest_based_with(network, &mut Budget::default())
}

/// A root or tree vertex `w` with two children whose hybrid-only chains
/// end at distinct leaves `x` and `y`. Such a network is not universal
/// once it has four or more leaves.
pub fn forbidden_configuration(network: &Network) -> Option<(usize, usize, usize)> {
    let chain_end = |mut v: usize| {
        while network.is_hybrid(v) {
            v = network.children(v)[0];
        }
        v
    };
    network.vertices().filter(|&w| !network.is_hybrid(w) && network.children(w).len() >= 2).find_map(|w| {
        let ends: Vec<usize> = network.children(w).iter().map(|&c| chain_end(c)).filter(|&e| network.is_leaf(e)).collect();
        ends.iter().enumerate().find_map(|(i, &x)| ends[i + 1..].iter().find(|&&y| y != x).map(|&y| (w, x, y)))
    })
}

/// Outcome of an exhaustive universality scan.
#[derive(Clone, Debug, Default)]
pub struct UniversalSearch {
    /// Networks tested.
    pub checked: usize,
    /// Tested networks containing the forbidden configuration.
    pub with_configuration: usize,
    /// Networks with the configuration that were universal anyway.
    pub configuration_counterexamples: usize,
    pub universal: Vec<Network>,
}

/// Tests every binary network on `labels` with at most `max_vertices`
/// vertices and at least `min_roots` roots. Stops after `stop_after`
/// universal networks when given.
pub fn search_universal(
    labels: &[&str],
    max_vertices: usize,
    min_roots: usize,
    stop_after: Option<usize>,
) -> Result<UniversalSearch, UniversalError> {
    let catalog = enumerate_forests(labels)?;
    let mut out = UniversalSearch::default();
    let mut error = None;
    enumerate_binary_networks(labels, EnumerationLimits::vertices(max_vertices), |n| {
        if n.root_count() < min_roots {
            return true;
        }
        out.checked += 1;
        let configuration = labels.len() >= 4 && forbidden_configuration(&n).is_some();
        out.with_configuration += usize::from(configuration);
        let mut budget = Budget::default();
        let mut universal = true;
        for f in catalog.forests() {
            match is_based_on_with(&n, f, &mut budget) {
                Ok(Some(_)) => {}
                Ok(None) => {
                    universal = false;
                    break;
                }
                Err(e) => {
                    error = Some(e);
                    return false;
                }
            }
        }
        if universal {
            out.configuration_counterexamples += usize::from(configuration);
            out.universal.push(n);
        }
        stop_after.is_none_or(|k| out.universal.len() < k)
    });
    match error {
        Some(e) => Err(e.into()),
        None => Ok(out),
    }
}
