//! Polynomial forest-based test for arboreal networks.
//!
//! `μ(N)` has the parents of hybrids as vertices and one edge per hybrid,
//! joining its two parents. For arboreal `N` it is a forest, and removing
//! any arc of `N` separates its ends, so only the leaf condition matters:
//! every vertex whose children are all hybrids must keep one of them. A
//! component of `μ(N)` admits such a choice exactly when it contains a
//! target, a vertex with a non-hybrid child; orienting the component
//! towards a target gives the certificate.
//!
//! Every vertex of `μ(N)` must reach a target, not only the hybrid ones:
//! a tree vertex whose only child is a hybrid is an omnian too.

use std::collections::VecDeque;

use crate::budget::Budget;
use crate::network::Network;

use super::{decide_forest_based_with, ForestCertificate, ForestError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArborealVerdict {
    /// Certificate when the network is forest-based.
    pub certificate: Option<ForestCertificate>,
    /// Per hybrid `h`, a sequence starting at `h` whose consecutive
    /// vertices share a hybrid child and whose last vertex has a
    /// non-hybrid child. Empty when `h` has none.
    pub sequences: Vec<(usize, Vec<usize>)>,
    /// A vertex of `μ(N)` that cannot reach a target.
    pub stranded: Option<usize>,
}

impl ArborealVerdict {
    pub fn is_forest_based(&self) -> bool {
        self.certificate.is_some()
    }
}

pub fn arboreal_forest_based(network: &Network) -> Result<ArborealVerdict, ForestError> {
    if !network.is_arboreal() {
        return Err(ForestError::NotArboreal);
    }
    if network.leaf_count() < 2 {
        return Err(ForestError::TooFewLeaves(network.leaf_count()));
    }
    if network.root_count() == 1 {
        // a phylogenetic tree; the path search never backtracks here
        let certificate = decide_forest_based_with(network, &mut Budget::unlimited())?;
        return Ok(ArborealVerdict { certificate, sequences: Vec::new(), stranded: None });
    }

    let n = network.vertex_count();
    let in_mu = |v: usize| network.children(v).iter().any(|&c| network.is_hybrid(c));
    let is_target = |v: usize| network.children(v).iter().any(|&c| !network.is_hybrid(c));

    // multi-source BFS from targets; `via[v]` is the hybrid leading towards one
    let mut via = vec![usize::MAX; n];
    let mut next = vec![usize::MAX; n];
    let mut reached = vec![false; n];
    let mut queue: VecDeque<usize> = network.vertices().filter(|&v| in_mu(v) && is_target(v)).collect();
    for &t in &queue {
        reached[t] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &h in network.children(u).iter().filter(|&&c| network.is_hybrid(c)) {
            for &w in network.parents(h) {
                if !reached[w] {
                    reached[w] = true;
                    via[w] = h;
                    next[w] = u;
                    queue.push_back(w);
                }
            }
        }
    }

    let sequences = network
        .hybrids()
        .iter()
        .map(|&h| {
            let mut seq = Vec::new();
            if !in_mu(h) || reached[h] {
                let mut v = h;
                seq.push(v);
                while in_mu(v) && !is_target(v) {
                    v = next[v];
                    seq.push(v);
                }
            }
            (h, seq)
        })
        .collect();

    let stranded = network.vertices().find(|&v| in_mu(v) && !reached[v]);
    let certificate = if stranded.is_some() {
        None
    } else {
        // each hybrid keeps the arc from the parent that uses it to reach a
        // target; hybrids off the BFS forest keep their smaller parent
        let mut keeper = vec![usize::MAX; n];
        for v in network.vertices() {
            if via[v] != usize::MAX {
                keeper[via[v]] = v;
            }
        }
        let retained: Vec<(usize, usize)> = network
            .arcs()
            .filter(|&(u, h)| !network.is_hybrid(h) || keeper[h] == u || (keeper[h] == usize::MAX && network.parents(h)[0] == u))
            .collect();
        Some(ForestCertificate::from_retained(network, retained))
    };
    Ok(ArborealVerdict { certificate, sequences, stranded })
}
