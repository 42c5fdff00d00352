//! Subdivision-forest certificates and their independent verifier.

use std::collections::BTreeSet;
use std::fmt;

use crate::network::Network;
use crate::trees::{PhyloForest, PhyloTree};

use super::ForestError;

/// A retained arc set `A'` together with the component of every vertex in
/// the spanning forest `(V, A')`. Contact arcs are the arcs not retained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestCertificate {
    retained: BTreeSet<(usize, usize)>,
    component_of: Vec<usize>,
}

/// Why a certificate was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateDefect {
    /// A retained arc is not an arc of the network.
    ForeignArc(usize, usize),
    /// The component map does not cover exactly the network's vertices.
    ComponentMapSize { expected: usize, found: usize },
    /// A vertex keeps two incoming arcs.
    NotAForest(usize),
    /// The component map disagrees with the connected components of `(V, A')`.
    ComponentMismatch(usize),
    /// Fewer than two components.
    SingleComponent,
    /// A non-leaf vertex of the network keeps no outgoing arc.
    LeafMismatch(usize),
    /// A contact arc joins two vertices of the same component.
    ContactInsideComponent(usize, usize),
}

impl fmt::Display for CertificateDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ForeignArc(t, h) => write!(f, "retained arc ({t}, {h}) is not in the network"),
            Self::ComponentMapSize { expected, found } => {
                write!(f, "component map has {found} entries, expected {expected}")
            }
            Self::NotAForest(v) => write!(f, "vertex {v} keeps two incoming arcs"),
            Self::ComponentMismatch(v) => write!(f, "component of vertex {v} is misreported"),
            Self::SingleComponent => f.write_str("the forest has a single component"),
            Self::LeafMismatch(v) => write!(f, "non-leaf vertex {v} keeps no outgoing arc"),
            Self::ContactInsideComponent(t, h) => write!(f, "contact arc ({t}, {h}) stays inside one component"),
        }
    }
}

impl ForestCertificate {
    /// Raw constructor; nothing is checked.
    pub fn new(retained: BTreeSet<(usize, usize)>, component_of: Vec<usize>) -> Self {
        Self { retained, component_of }
    }

    /// Derives the component map from the retained arcs. Components are
    /// numbered in order of their smallest vertex.
    pub fn from_retained(network: &Network, retained: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let retained: BTreeSet<(usize, usize)> = retained.into_iter().collect();
        let component_of = components(network.vertex_count(), &retained);
        Self { retained, component_of }
    }

    pub fn retained_arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.retained
    }

    pub fn is_retained(&self, tail: usize, head: usize) -> bool {
        self.retained.contains(&(tail, head))
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn component_map(&self) -> &[usize] {
        &self.component_of
    }

    pub fn component_count(&self) -> usize {
        self.component_of.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn contact_arcs<'a>(&'a self, network: &'a Network) -> impl Iterator<Item = (usize, usize)> + 'a {
        network.arcs().filter(|a| !self.retained.contains(a))
    }

    /// Exactly one component per root of the network.
    pub fn is_proper(&self, network: &Network) -> bool {
        self.component_count() == network.root_count()
    }
}

fn components(n: usize, arcs: &BTreeSet<(usize, usize)>) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for &(t, h) in arcs {
        let (a, b) = (find(&mut parent, t), find(&mut parent, h));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut id = vec![usize::MAX; n];
    let mut next = 0;
    let mut out = vec![0; n];
    for (v, slot) in out.iter_mut().enumerate() {
        let r = find(&mut parent, v);
        if id[r] == usize::MAX {
            id[r] = next;
            next += 1;
        }
        *slot = id[r];
    }
    out
}

/// Checks the subdivision-forest conditions from scratch: `(V, A')` is a
/// forest with at least two components, it has the same leaves as the
/// network, and every contact arc joins two components.
pub fn verify_certificate(network: &Network, cert: &ForestCertificate) -> Result<(), CertificateDefect> {
    let n = network.vertex_count();
    for &(t, h) in &cert.retained {
        if t >= n || h >= n || !network.graph().has_arc(t, h) {
            return Err(CertificateDefect::ForeignArc(t, h));
        }
    }
    if cert.component_of.len() != n {
        return Err(CertificateDefect::ComponentMapSize { expected: n, found: cert.component_of.len() });
    }
    let mut indegree = vec![0usize; n];
    let mut outdegree = vec![0usize; n];
    for &(t, h) in &cert.retained {
        indegree[h] += 1;
        outdegree[t] += 1;
        if indegree[h] > 1 {
            return Err(CertificateDefect::NotAForest(h));
        }
    }

    // the reported map must be a relabelling of the true components
    let actual = components(n, &cert.retained);
    let mut forward = vec![usize::MAX; n];
    let mut backward = std::collections::HashMap::new();
    for (v, &a) in actual.iter().enumerate() {
        let r = cert.component_of[v];
        if forward[a] == usize::MAX {
            if backward.insert(r, a).is_some() {
                return Err(CertificateDefect::ComponentMismatch(v));
            }
            forward[a] = r;
        } else if forward[a] != r {
            return Err(CertificateDefect::ComponentMismatch(v));
        }
    }
    if backward.len() < 2 {
        return Err(CertificateDefect::SingleComponent);
    }

    if let Some(v) = network.vertices().find(|&v| !network.is_leaf(v) && outdegree[v] == 0) {
        return Err(CertificateDefect::LeafMismatch(v));
    }
    for (t, h) in cert.contact_arcs(network) {
        if actual[t] == actual[h] {
            return Err(CertificateDefect::ContactInsideComponent(t, h));
        }
    }
    Ok(())
}

/// Suppresses every component of a verified certificate to a phylogenetic tree.
pub fn extract_base_forest(network: &Network, cert: &ForestCertificate) -> Result<PhyloForest, ForestError> {
    verify_certificate(network, cert).map_err(ForestError::InvalidCertificate)?;
    let spanning = network.graph().with_arcs(|t, h| cert.is_retained(t, h));
    let mut trees = Vec::new();
    let ids: BTreeSet<usize> = cert.component_of.iter().copied().collect();
    for id in ids {
        let keep: Vec<bool> = network.vertices().map(|v| cert.component_of[v] == id).collect();
        let tree = PhyloTree::new(spanning.induced(&keep).suppress())
            .expect("a verified component suppresses to a phylogenetic tree");
        trees.push(tree);
    }
    Ok(PhyloForest::new(trees).expect("verified certificates have disjoint components"))
}
