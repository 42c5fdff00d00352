//! Embedding a given phylogenetic forest into a network.
//!
//! The search mirrors the path-partition decider but lets a vertex keep
//! several children. Every vertex is assigned the tree of the forest it
//! maps into; its cluster inside the retained forest must be a cluster of
//! that tree, and dropped arcs must lead into other trees. A component is
//! accepted when its cluster set equals the cluster set of its tree, which
//! is exactly equivalence after suppression.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::budget::Budget;
use crate::network::Network;
use crate::trees::PhyloForest;

use super::{bottom_up_order, ForestCertificate, ForestError};

/// Searches for a subdivision forest of `network` whose suppression is `forest`.
pub fn is_based_on_with(
    network: &Network,
    forest: &PhyloForest,
    budget: &mut Budget,
) -> Result<Option<ForestCertificate>, ForestError> {
    let labels: Vec<&str> = network.labels().collect();
    if forest.leaf_set().iter().map(String::as_str).ne(labels.iter().copied()) {
        return Err(ForestError::LeafSetMismatch);
    }
    if labels.len() > 64 {
        return Err(ForestError::TooLarge(format!("{} leaves, at most 64 supported", labels.len())));
    }
    let bit: BTreeMap<&str, u64> = labels.iter().enumerate().map(|(i, &l)| (l, 1u64 << i)).collect();
    let mask_of = |set: &BTreeSet<String>| set.iter().map(|l| bit[l.as_str()]).fold(0, |a, b| a | b);

    let tree_clusters: Vec<HashSet<u64>> =
        forest.trees().iter().map(|t| t.cluster_set().iter().map(mask_of).collect()).collect();
    let block_masks: Vec<u64> = forest.trees().iter().map(|t| mask_of(&t.leaf_set())).collect();

    let n = network.vertex_count();
    let mut block = vec![usize::MAX; n];
    let mut mask = vec![0u64; n];
    for &l in network.leaves() {
        let m = bit[network.label(l).expect("leaves are labelled")];
        mask[l] = m;
        block[l] = block_masks.iter().position(|&b| b & m != 0).expect("leaf sets agree");
    }

    let mut search = Embedding {
        network,
        tree_clusters: &tree_clusters,
        block_masks: &block_masks,
        order: bottom_up_order(network).into_iter().filter(|&v| !network.is_leaf(v)).collect(),
        block,
        mask,
        kept: vec![Vec::new(); n],
        claimed: vec![false; n],
        open: network.vertices().map(|v| network.children(v).len()).collect(),
    };
    if !search.run(0, budget)? {
        return Ok(None);
    }

    let retained: Vec<(usize, usize)> =
        search.order.iter().flat_map(|&v| search.kept[v].iter().map(move |&c| (v, c))).collect();
    Ok(Some(ForestCertificate::from_retained(network, retained)))
}

/// [`is_based_on_with`] under the default node budget.
pub fn is_based_on(network: &Network, forest: &PhyloForest) -> Result<Option<ForestCertificate>, ForestError> {
    is_based_on_with(network, forest, &mut Budget::default())
}

struct Embedding<'a> {
    network: &'a Network,
    tree_clusters: &'a [HashSet<u64>],
    block_masks: &'a [u64],
    order: Vec<usize>,
    block: Vec<usize>,
    mask: Vec<u64>,
    kept: Vec<Vec<usize>>,
    claimed: Vec<bool>,
    open: Vec<usize>,
}

impl Embedding<'_> {
    fn run(&mut self, depth: usize, budget: &mut Budget) -> Result<bool, ForestError> {
        let Some(&v) = self.order.get(depth) else {
            return Ok(self.components_match());
        };
        let children = self.network.children(v).to_vec();
        if children.len() > 20 {
            return Err(ForestError::TooLarge(format!("vertex with {} children", children.len())));
        }
        for subset in 1u32..(1 << children.len()) {
            let chosen: Vec<usize> =
                (0..children.len()).filter(|&i| subset & (1 << i) != 0).map(|i| children[i]).collect();
            if chosen.iter().any(|&c| self.claimed[c]) {
                continue;
            }
            let b = self.block[chosen[0]];
            if chosen.iter().any(|&c| self.block[c] != b) {
                continue;
            }
            if children.iter().any(|c| !chosen.contains(c) && self.block[*c] == b) {
                continue;
            }
            let union = chosen.iter().fold(0, |a, &c| a | self.mask[c]);
            if !self.tree_clusters[b].contains(&union) {
                continue;
            }
            budget.tick()?;
            let ok = self.claim(v, &chosen, b, union);
            if ok && self.run(depth + 1, budget)? {
                return Ok(true);
            }
            self.release(v);
        }
        Ok(false)
    }

    /// Each component root spans its whole tree and the component shows
    /// every cluster of that tree.
    fn components_match(&self) -> bool {
        let mut seen = HashSet::new();
        for root in self.network.vertices().filter(|&v| !self.claimed[v]) {
            let b = self.block[root];
            if !seen.insert(b) || self.mask[root] != self.block_masks[b] {
                return false;
            }
            let mut masks = HashSet::new();
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                masks.insert(self.mask[u]);
                stack.extend_from_slice(&self.kept[u]);
            }
            if masks.len() != self.tree_clusters[b].len() {
                return false;
            }
        }
        true
    }

    fn claim(&mut self, v: usize, chosen: &[usize], b: usize, union: u64) -> bool {
        self.block[v] = b;
        self.mask[v] = union;
        self.kept[v] = chosen.to_vec();
        let mut ok = true;
        for &c in chosen {
            self.claimed[c] = true;
            for &p in self.network.parents(c) {
                self.open[p] -= 1;
                if p != v && self.open[p] == 0 && self.kept[p].is_empty() && !self.network.is_leaf(p) {
                    ok = false;
                }
            }
        }
        ok
    }

    fn release(&mut self, v: usize) {
        for c in std::mem::take(&mut self.kept[v]) {
            self.claimed[c] = false;
            for &p in self.network.parents(c) {
                self.open[p] += 1;
            }
        }
        self.block[v] = usize::MAX;
        self.mask[v] = 0;
    }
}
