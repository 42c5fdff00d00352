//! Phylogenetic trees and forests.
//!
//! A [`PhyloTree`] is a single-rooted, hybrid-free digraph with labelled
//! leaves and no vertex of indegree and outdegree one (or a single labelled
//! vertex). A [`PhyloForest`] is a set of at least two such trees with
//! disjoint leaf sets.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::digraph::Digraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs exactly one root, found {0}")]
    RootCount(usize),
    #[error("vertex {0} has more than one parent")]
    Reticulation(String),
    #[error("vertex {0} has a single child")]
    Unsuppressed(String),
    #[error("leaf {0} is unlabelled")]
    UnlabeledLeaf(String),
    #[error("a forest needs at least two trees, found {0}")]
    TooFewTrees(usize),
    #[error("label {0} occurs in two trees")]
    OverlappingTrees(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhyloTree {
    graph: Digraph,
    root: usize,
}

impl PhyloTree {
    pub fn new(graph: Digraph) -> Result<Self, TreeError> {
        let roots: Vec<usize> = graph.vertices().filter(|&v| graph.indegree(v) == 0).collect();
        if roots.len() != 1 {
            return Err(TreeError::RootCount(roots.len()));
        }
        for v in graph.vertices() {
            if graph.indegree(v) > 1 {
                return Err(TreeError::Reticulation(graph.name(v).to_owned()));
            }
            if graph.outdegree(v) == 1 {
                return Err(TreeError::Unsuppressed(graph.name(v).to_owned()));
            }
            if graph.outdegree(v) == 0 && graph.label(v).is_none() {
                return Err(TreeError::UnlabeledLeaf(graph.name(v).to_owned()));
            }
        }
        Ok(Self { root: roots[0], graph })
    }

    /// The single-vertex tree on one label.
    pub fn single(label: &str) -> Self {
        let graph = Digraph::from_parts([label], [], [(label, label)]).expect("single vertex");
        Self { graph, root: 0 }
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn leaf_set(&self) -> BTreeSet<String> {
        self.graph.label_set().into_iter().map(str::to_owned).collect()
    }

    pub fn is_binary(&self) -> bool {
        self.graph.vertices().all(|v| matches!(self.graph.outdegree(v), 0 | 2))
    }

    /// Clusters of all vertices; determines the tree up to equivalence.
    pub fn cluster_set(&self) -> BTreeSet<BTreeSet<String>> {
        self.graph.clusters().into_iter().collect()
    }

    pub fn is_equivalent(&self, other: &PhyloTree) -> bool {
        self.graph.is_equivalent(&other.graph).unwrap_or(false)
    }

    /// Newick text with leaf labels only; children ordered by smallest label.
    pub fn to_newick(&self) -> String {
        let clusters = self.graph.clusters();
        let mut out = String::new();
        self.write_newick(self.root, &clusters, &mut out);
        out.push(';');
        out
    }

    fn write_newick(&self, v: usize, clusters: &[BTreeSet<String>], out: &mut String) {
        if let Some(l) = self.graph.label(v) {
            out.push_str(l);
            return;
        }
        let mut kids = self.graph.children(v).to_vec();
        kids.sort_by(|&a, &b| clusters[a].first().cmp(&clusters[b].first()));
        out.push('(');
        for (i, &c) in kids.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            self.write_newick(c, clusters, out);
        }
        out.push(')');
    }
}

/// At least two leaf-disjoint phylogenetic trees, ordered by smallest label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhyloForest {
    trees: Vec<PhyloTree>,
}

impl PhyloForest {
    pub fn new(mut trees: Vec<PhyloTree>) -> Result<Self, TreeError> {
        if trees.len() < 2 {
            return Err(TreeError::TooFewTrees(trees.len()));
        }
        let mut seen = BTreeSet::new();
        for t in &trees {
            for l in t.leaf_set() {
                if !seen.insert(l.clone()) {
                    return Err(TreeError::OverlappingTrees(l));
                }
            }
        }
        trees.sort_by_key(|t| t.leaf_set().into_iter().next());
        Ok(Self { trees })
    }

    /// Every component a single labelled vertex.
    pub fn trivial<S: AsRef<str>>(labels: impl IntoIterator<Item = S>) -> Result<Self, TreeError> {
        Self::new(labels.into_iter().map(|l| PhyloTree::single(l.as_ref())).collect())
    }

    pub fn trees(&self) -> &[PhyloTree] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn leaf_set(&self) -> BTreeSet<String> {
        self.trees.iter().flat_map(PhyloTree::leaf_set).collect()
    }

    pub fn is_binary(&self) -> bool {
        self.trees.iter().all(PhyloTree::is_binary)
    }

    /// Component-wise equivalence (trees are matched by leaf set).
    pub fn is_equivalent(&self, other: &PhyloForest) -> bool {
        self.trees.len() == other.trees.len()
            && self.trees.iter().zip(&other.trees).all(|(a, b)| a.leaf_set() == b.leaf_set() && a.is_equivalent(b))
    }

    /// One Newick tree per line.
    pub fn to_newick(&self) -> String {
        self.trees.iter().map(|t| t.to_newick() + "\n").collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_forest() {
        let f = PhyloForest::trivial(["b", "a", "c"]).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.to_newick(), "a;\nb;\nc;\n");
    }

    #[test]
    fn forest_needs_two_disjoint_trees() {
        assert_eq!(PhyloForest::trivial(["a"]).unwrap_err(), TreeError::TooFewTrees(1));
        let e = PhyloForest::new(vec![PhyloTree::single("a"), PhyloTree::single("a")]).unwrap_err();
        assert_eq!(e, TreeError::OverlappingTrees("a".into()));
    }

    #[test]
    fn unsuppressed_tree_is_rejected() {
        let g = Digraph::from_parts(["r"], [("r", "u"), ("u", "a"), ("u", "b")], [("a", "a"), ("b", "b")]).unwrap();
        assert_eq!(PhyloTree::new(g).unwrap_err(), TreeError::Unsuppressed("r".into()));
    }

    #[test]
    fn newick_orders_children() {
        let g = Digraph::from_parts(
            ["r"],
            [("r", "u"), ("r", "a"), ("u", "c"), ("u", "b")],
            [("a", "a"), ("b", "b"), ("c", "c")],
        )
        .unwrap();
        assert_eq!(PhyloTree::new(g).unwrap().to_newick(), "(a,(b,c));");
    }
}
