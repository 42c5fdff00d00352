//! Multiply rooted phylogenetic networks.
//!
//! A [`Network`] is a connected, acyclic, semi-binary digraph whose leaves
//! (indegree 1, outdegree 0) are bijectively labelled and whose roots all
//! have outdegree at least two. Networks are immutable once built; every
//! editing operation goes through [`Digraph`] and back.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::digraph::{Digraph, DigraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetworkError {
    #[error(transparent)]
    Structure(#[from] DigraphError),
    #[error("the network has no vertices")]
    Empty,
    #[error("the underlying graph is disconnected")]
    Disconnected,
    #[error("root {vertex} has outdegree {outdegree}, expected at least 2")]
    RootOutdegreeOne { vertex: String, outdegree: usize },
    #[error("hybrid {vertex} has indegree {indegree} and outdegree {outdegree}, expected 2 and 1")]
    NonSemiBinaryHybrid { vertex: String, indegree: usize, outdegree: usize },
    #[error("leaf {0} has no label")]
    UnlabeledLeaf(String),
    #[error("vertex {0} is labelled but is not a leaf")]
    LabelOnNonLeaf(String),
}

impl NetworkError {
    /// Convenience for matching structural errors without unwrapping.
    pub fn structure(&self) -> Option<&DigraphError> {
        match self {
            NetworkError::Structure(e) => Some(e),
            _ => None,
        }
    }
}

/// Degree-based role of a vertex. The four kinds partition `V(N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKind {
    Root,
    Leaf,
    TreeVertex,
    Hybrid,
}

impl VertexKind {
    fn classify(indegree: usize, outdegree: usize) -> Self {
        match (indegree, outdegree) {
            (0, _) => VertexKind::Root,
            (1, 0) => VertexKind::Leaf,
            (1, _) => VertexKind::TreeVertex,
            _ => VertexKind::Hybrid,
        }
    }

    /// Indegree one: leaves count as tree vertices.
    pub fn has_indegree_one(self) -> bool {
        matches!(self, VertexKind::Leaf | VertexKind::TreeVertex)
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VertexKind::Root => "root",
            VertexKind::Leaf => "leaf",
            VertexKind::TreeVertex => "tree-vertex",
            VertexKind::Hybrid => "hybrid",
        };
        f.write_str(s)
    }
}

/// A validated multiply rooted phylogenetic network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    graph: Digraph,
    kinds: Vec<VertexKind>,
    roots: Vec<usize>,
    hybrids: Vec<usize>,
    leaves: Vec<usize>,
    leaf_by_label: BTreeMap<String, usize>,
}

/// Incremental construction of a [`Network`] from named parts.
#[derive(Debug, Default, Clone)]
pub struct NetworkBuilder {
    vertices: Vec<String>,
    arcs: Vec<(String, String)>,
    labels: Vec<(String, String)>,
}

impl NetworkBuilder {
    pub fn vertex(mut self, v: impl Into<String>) -> Self {
        self.vertices.push(v.into());
        self
    }

    pub fn arc(mut self, tail: impl Into<String>, head: impl Into<String>) -> Self {
        self.arcs.push((tail.into(), head.into()));
        self
    }

    pub fn arcs<'a>(mut self, arcs: impl IntoIterator<Item = (&'a str, &'a str)>) -> Self {
        self.arcs.extend(arcs.into_iter().map(|(t, h)| (t.to_owned(), h.to_owned())));
        self
    }

    pub fn leaf(mut self, v: impl Into<String>, label: impl Into<String>) -> Self {
        self.labels.push((v.into(), label.into()));
        self
    }

    /// Labels each vertex with its own name.
    pub fn leaves<'a>(mut self, names: impl IntoIterator<Item = &'a str>) -> Self {
        self.labels.extend(names.into_iter().map(|v| (v.to_owned(), v.to_owned())));
        self
    }

    pub fn build(self) -> Result<Network, NetworkError> {
        let graph = Digraph::from_parts(
            self.vertices.iter().map(String::as_str),
            self.arcs.iter().map(|(t, h)| (t.as_str(), h.as_str())),
            self.labels.iter().map(|(v, l)| (v.as_str(), l.as_str())),
        )?;
        Network::from_digraph(graph)
    }
}

impl Network {
    pub fn builder() -> NetworkBuilder {
        NetworkBuilder::default()
    }

    /// Validates raw parts: vertex names, arcs and `(vertex, label)` pairs.
    pub fn build<V, A, L, S>(vertices: V, arcs: A, leaf_labels: L) -> Result<Self, NetworkError>
    where
        V: IntoIterator<Item = S>,
        A: IntoIterator<Item = (S, S)>,
        L: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        Self::from_digraph(Digraph::from_parts(vertices, arcs, leaf_labels)?)
    }

    /// Checks the network axioms on an arbitrary digraph.
    pub fn from_digraph(graph: Digraph) -> Result<Self, NetworkError> {
        if graph.vertex_count() == 0 {
            return Err(NetworkError::Empty);
        }
        if graph.component_count() != 1 {
            return Err(NetworkError::Disconnected);
        }
        let kinds: Vec<VertexKind> = graph
            .vertices()
            .map(|v| VertexKind::classify(graph.indegree(v), graph.outdegree(v)))
            .collect();
        let of_kind = |k: VertexKind| -> Vec<usize> { graph.vertices().filter(|&v| kinds[v] == k).collect() };
        let roots = of_kind(VertexKind::Root);
        let hybrids = of_kind(VertexKind::Hybrid);
        let leaves = of_kind(VertexKind::Leaf);

        for &r in &roots {
            if graph.outdegree(r) < 2 {
                return Err(NetworkError::RootOutdegreeOne {
                    vertex: graph.name(r).to_owned(),
                    outdegree: graph.outdegree(r),
                });
            }
        }
        for &h in &hybrids {
            if graph.indegree(h) != 2 || graph.outdegree(h) != 1 {
                return Err(NetworkError::NonSemiBinaryHybrid {
                    vertex: graph.name(h).to_owned(),
                    indegree: graph.indegree(h),
                    outdegree: graph.outdegree(h),
                });
            }
        }
        let mut leaf_by_label = BTreeMap::new();
        for &l in &leaves {
            match graph.label(l) {
                Some(label) => {
                    leaf_by_label.insert(label.to_owned(), l);
                }
                None => return Err(NetworkError::UnlabeledLeaf(graph.name(l).to_owned())),
            }
        }
        if let Some((v, _)) = graph.labelled_vertices().find(|&(v, _)| kinds[v] != VertexKind::Leaf) {
            return Err(NetworkError::LabelOnNonLeaf(graph.name(v).to_owned()));
        }
        Ok(Self { graph, kinds, roots, hybrids, leaves, leaf_by_label })
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn into_graph(self) -> Digraph {
        self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn arc_count(&self) -> usize {
        self.graph.arc_count()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        self.graph.vertices()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph.arcs()
    }

    pub fn name(&self, v: usize) -> &str {
        self.graph.name(v)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.graph.index_of(name)
    }

    pub fn children(&self, v: usize) -> &[usize] {
        self.graph.children(v)
    }

    pub fn parents(&self, v: usize) -> &[usize] {
        self.graph.parents(v)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.graph.label(v)
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.kinds[v]
    }

    /// Kind of the vertex with the given name.
    pub fn vertex_kind(&self, name: &str) -> Result<VertexKind, NetworkError> {
        Ok(self.kinds[self.graph.require(name)?])
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn hybrids(&self) -> &[usize] {
        &self.hybrids
    }

    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.kinds[v] == VertexKind::Leaf
    }

    pub fn is_hybrid(&self, v: usize) -> bool {
        self.kinds[v] == VertexKind::Hybrid
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.kinds[v] == VertexKind::Root
    }

    /// Number of roots, `m`.
    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    /// The label set `X` in sorted order.
    pub fn labels(&self) -> impl Iterator<Item = &str> + '_ {
        self.leaf_by_label.keys().map(String::as_str)
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn leaf_with_label(&self, label: &str) -> Option<usize> {
        self.leaf_by_label.get(label).copied()
    }

    pub fn topological_order(&self) -> &[usize] {
        self.graph.topological_order()
    }

    /// Every root and non-leaf tree vertex has outdegree two.
    pub fn is_binary(&self) -> bool {
        self.vertices().all(|v| match self.kinds[v] {
            VertexKind::Root | VertexKind::TreeVertex => self.children(v).len() == 2,
            _ => true,
        })
    }

    /// A single root.
    pub fn is_phylogenetic(&self) -> bool {
        self.roots.len() == 1
    }

    /// Labels of the leaves below `v`, including `v` itself.
    pub fn cluster_of(&self, name: &str) -> Result<BTreeSet<String>, NetworkError> {
        let v = self.graph.require(name)?;
        Ok(self.cluster(v))
    }

    pub fn cluster(&self, v: usize) -> BTreeSet<String> {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![v];
        seen[v] = true;
        let mut out = BTreeSet::new();
        while let Some(u) = stack.pop() {
            if let Some(l) = self.label(u) {
                out.insert(l.to_owned());
            }
            for &c in self.children(u) {
                if !seen[c] {
                    seen[c] = true;
                    stack.push(c);
                }
            }
        }
        out
    }

    /// Clusters of all vertices at once.
    pub fn clusters(&self) -> Vec<BTreeSet<String>> {
        self.graph.clusters()
    }

    /// The nearest root-or-hybrid ancestor of `v` (`v` itself if it is one).
    pub fn gamma(&self, v: usize) -> usize {
        let mut u = v;
        while self.kinds[u].has_indegree_one() {
            u = self.parents(u)[0];
        }
        u
    }

    /// [`Network::gamma`] by vertex name.
    pub fn gamma_of(&self, name: &str) -> Result<&str, NetworkError> {
        let v = self.graph.require(name)?;
        Ok(self.name(self.gamma(v)))
    }

    /// Labelled isomorphism with another network on the same label set.
    pub fn is_equivalent(&self, other: &Network) -> Result<bool, NetworkError> {
        Ok(self.graph.is_equivalent(&other.graph)?)
    }

    /// Subdivides one arc. The result is no longer a network in general.
    pub fn subdivide_arc(&self, tail: &str, head: &str) -> Result<(Digraph, String), NetworkError> {
        Ok(self.graph.subdivide_arc(tail, head)?)
    }

    pub fn contract_arcs<S: AsRef<str>>(&self, arcs: &[(S, S)]) -> Result<Digraph, NetworkError> {
        Ok(self.graph.contract_arcs(arcs)?)
    }

    /// Whether the underlying undirected graph is a tree.
    pub fn is_arboreal(&self) -> bool {
        self.arc_count() + 1 == self.vertex_count()
    }
}
