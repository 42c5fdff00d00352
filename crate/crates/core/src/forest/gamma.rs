//! The graph `Γ(N)` on roots and hybrids, and omnian extension options.

use crate::network::Network;

/// Edge of `Γ(N)` contributed by one hybrid; `u == v` is a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GammaEdge {
    pub u: usize,
    pub v: usize,
    pub hybrid: usize,
}

impl GammaEdge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// One way an omnian can be honoured in an omni-extension: the edge
/// `{γ(other parent of hybrid), hybrid}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OmniOption {
    pub omnian: usize,
    pub hybrid: usize,
    pub other_gamma: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaGraph {
    vertices: Vec<usize>,
    edges: Vec<GammaEdge>,
    options: Vec<(usize, Vec<OmniOption>)>,
}

impl GammaGraph {
    /// `R(N) ∪ H(N)` in index order.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// One edge per hybrid, in hybrid order.
    pub fn edges(&self) -> &[GammaEdge] {
        &self.edges
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(GammaEdge::is_loop)
    }

    /// Per omnian, the extension edges it may contribute.
    pub fn omni_options(&self) -> &[(usize, Vec<OmniOption>)] {
        &self.options
    }

    /// Number of minimal omni-extensions (one edge per omnian).
    pub fn extension_count(&self) -> u128 {
        self.options.iter().map(|(_, o)| o.len() as u128).product()
    }

    /// Graphviz rendering with vertex names.
    pub fn to_dot(&self, network: &Network) -> String {
        let mut out = String::from("graph gamma {\n");
        for &v in &self.vertices {
            out.push_str(&format!("  \"{}\";\n", network.name(v)));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\" [label=\"{}\"];\n",
                network.name(e.u),
                network.name(e.v),
                network.name(e.hybrid)
            ));
        }
        for (_, opts) in &self.options {
            for o in opts {
                out.push_str(&format!(
                    "  \"{}\" -- \"{}\" [style=dotted, label=\"{}\"];\n",
                    network.name(o.other_gamma),
                    network.name(o.hybrid),
                    network.name(o.omnian)
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Vertices all of whose children are hybrids.
pub fn omnians(network: &Network) -> Vec<usize> {
    network
        .vertices()
        .filter(|&v| !network.children(v).is_empty() && network.children(v).iter().all(|&c| network.is_hybrid(c)))
        .collect()
}

pub fn gamma_graph(network: &Network) -> GammaGraph {
    let vertices: Vec<usize> = network.vertices().filter(|&v| network.is_root(v) || network.is_hybrid(v)).collect();
    let edges = network
        .hybrids()
        .iter()
        .map(|&h| {
            let p = network.parents(h);
            let (a, b) = (network.gamma(p[0]), network.gamma(p[1]));
            GammaEdge { u: a.min(b), v: a.max(b), hybrid: h }
        })
        .collect();
    let options = omnians(network)
        .into_iter()
        .map(|v| {
            let opts = network
                .children(v)
                .iter()
                .map(|&h| {
                    let other = network.parents(h).iter().copied().find(|&p| p != v).expect("hybrids have two parents");
                    OmniOption { omnian: v, hybrid: h, other_gamma: network.gamma(other) }
                })
                .collect();
            (v, opts)
        })
        .collect();
    GammaGraph { vertices, edges, options }
}
