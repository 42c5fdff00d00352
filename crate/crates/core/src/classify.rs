//! Network classes: tree-child, tree-sibling, reticulation-visible,
//! arboreal and (for phylogenetic networks) tree-based.
//!
//! Leaves have indegree one and so count as tree vertices throughout.

use std::collections::VecDeque;

use thiserror::Error;

use crate::budget::Budget;
use crate::forest::{self, omnians, ForestError};
use crate::network::Network;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("the network has {0} roots, expected one")]
    NotSingleRoot(usize),
    #[error("the network is not binary")]
    NotBinary,
    #[error(transparent)]
    Forest(#[from] ForestError),
    #[error("class report violates {0}")]
    Inconsistent(&'static str),
}

fn has_tree_child(network: &Network, v: usize) -> bool {
    network.children(v).iter().any(|&c| network.kind(c).has_indegree_one())
}

/// A non-leaf vertex without a child of indegree one.
pub fn tree_child_violation(network: &Network) -> Option<usize> {
    network.vertices().find(|&v| !network.is_leaf(v) && !has_tree_child(network, v))
}

pub fn is_tree_child(network: &Network) -> bool {
    tree_child_violation(network).is_none()
}

/// A hybrid none of whose siblings has indegree one.
pub fn tree_sibling_violation(network: &Network) -> Option<usize> {
    network.hybrids().iter().copied().find(|&h| {
        !network
            .parents(h)
            .iter()
            .any(|&p| network.children(p).iter().any(|&c| c != h && network.kind(c).has_indegree_one()))
    })
}

pub fn is_tree_sibling(network: &Network) -> bool {
    tree_sibling_violation(network).is_none()
}

/// Leaves reachable from some root once `removed` is deleted.
fn reachable_without(network: &Network, removed: usize) -> Vec<bool> {
    let mut seen = vec![false; network.vertex_count()];
    let mut queue: VecDeque<usize> = network.roots().iter().copied().filter(|&r| r != removed).collect();
    for &r in &queue {
        seen[r] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &c in network.children(u) {
            if c != removed && !seen[c] {
                seen[c] = true;
                queue.push_back(c);
            }
        }
    }
    seen
}

/// Leaf whose every root path passes through hybrid `h`, if any.
pub fn visible_leaf(network: &Network, h: usize) -> Option<usize> {
    let seen = reachable_without(network, h);
    network.leaves().iter().copied().find(|&x| !seen[x])
}

/// A hybrid that is not visible from any leaf.
pub fn reticulation_visibility_violation(network: &Network) -> Option<usize> {
    network.hybrids().iter().copied().find(|&h| visible_leaf(network, h).is_none())
}

pub fn is_reticulation_visible(network: &Network) -> bool {
    reticulation_visibility_violation(network).is_none()
}

pub fn is_arboreal(network: &Network) -> bool {
    network.is_arboreal()
}

/// Maximum matching from omnians into hybrids (arcs omnian → hybrid).
/// Returns `(omnian, hybrid)` pairs.
pub fn omnian_matching(network: &Network) -> Vec<(usize, usize)> {
    let omni = omnians(network);
    let mut owner = vec![usize::MAX; network.vertex_count()];
    fn augment(network: &Network, v: usize, owner: &mut [usize], visited: &mut [bool]) -> bool {
        for &h in network.children(v) {
            if visited[h] {
                continue;
            }
            visited[h] = true;
            if owner[h] == usize::MAX || augment(network, owner[h], owner, visited) {
                owner[h] = v;
                return true;
            }
        }
        false
    }
    for &v in &omni {
        let mut visited = vec![false; network.vertex_count()];
        augment(network, v, &mut owner, &mut visited);
    }
    let mut pairs: Vec<(usize, usize)> =
        network.hybrids().iter().filter(|&&h| owner[h] != usize::MAX).map(|&h| (owner[h], h)).collect();
    pairs.sort_unstable();
    pairs
}

/// Tree-based test for binary phylogenetic networks: some matching of the
/// omnian–hybrid graph saturates every omnian.
pub fn is_tree_based_phylo(network: &Network) -> Result<bool, ClassifyError> {
    if network.root_count() != 1 {
        return Err(ClassifyError::NotSingleRoot(network.root_count()));
    }
    if !network.is_binary() {
        return Err(ClassifyError::NotBinary);
    }
    Ok(omnian_matching(network).len() == omnians(network).len())
}

/// All class predicates at once, with witnesses for the failing ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub roots: usize,
    pub leaves: usize,
    pub binary: bool,
    pub phylogenetic: bool,
    pub tree_child: bool,
    pub tree_child_witness: Option<usize>,
    pub tree_sibling: bool,
    pub tree_sibling_witness: Option<usize>,
    pub reticulation_visible: bool,
    pub reticulation_visible_witness: Option<usize>,
    pub arboreal: bool,
    /// `false` when fewer than two leaves.
    pub forest_based: bool,
    /// Only defined for two or more roots.
    pub proper_forest_based: Option<bool>,
    /// Only defined for binary phylogenetic networks.
    pub tree_based: Option<bool>,
}

impl ClassReport {
    /// Names the first implication between classes that the report breaks.
    pub fn inconsistency(&self) -> Option<&'static str> {
        if self.tree_child && !(self.tree_sibling && self.reticulation_visible) {
            return Some("tree-child implies tree-sibling and reticulation-visible");
        }
        if self.binary && self.tree_child && self.leaves >= 2 && !self.forest_based {
            return Some("binary tree-child implies forest-based");
        }
        if self.forest_based && self.tree_based == Some(false) {
            return Some("forest-based implies tree-based");
        }
        if self.proper_forest_based == Some(true) && !self.forest_based {
            return Some("proper implies forest-based");
        }
        if self.forest_based && self.leaves < self.roots {
            return Some("forest-based implies at least as many leaves as roots");
        }
        None
    }
}

pub fn classify_all_with(network: &Network, budget: &mut Budget) -> Result<ClassReport, ClassifyError> {
    let tree_child_witness = tree_child_violation(network);
    let tree_sibling_witness = tree_sibling_violation(network);
    let reticulation_visible_witness = reticulation_visibility_violation(network);
    let forest_based = if network.leaf_count() < 2 {
        false
    } else if network.is_arboreal() {
        forest::arboreal_forest_based(network)?.is_forest_based()
    } else {
        forest::decide_forest_based_with(network, budget)?.is_some()
    };
    let proper_forest_based = if network.root_count() >= 2 {
        Some(forest::decide_proper_forest_based_with(network, budget)?.is_some())
    } else {
        None
    };
    let tree_based = if network.root_count() == 1 && network.is_binary() {
        Some(is_tree_based_phylo(network)?)
    } else {
        None
    };
    let report = ClassReport {
        roots: network.root_count(),
        leaves: network.leaf_count(),
        binary: network.is_binary(),
        phylogenetic: network.is_phylogenetic(),
        tree_child: tree_child_witness.is_none(),
        tree_child_witness,
        tree_sibling: tree_sibling_witness.is_none(),
        tree_sibling_witness,
        reticulation_visible: reticulation_visible_witness.is_none(),
        reticulation_visible_witness,
        arboreal: network.is_arboreal(),
        forest_based,
        proper_forest_based,
        tree_based,
    };
    match report.inconsistency() {
        Some(what) => Err(ClassifyError::Inconsistent(what)),
        None => Ok(report),
    }
}

/// [`classify_all_with`] under the default node budget.
pub fn classify_all(network: &Network) -> Result<ClassReport, ClassifyError> {
    classify_all_with(network, &mut Budget::default())
}
