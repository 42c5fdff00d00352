//! Exact forest-based decision via path partitions.
//!
//! A network is forest-based exactly when its vertices split into `|X|`
//! directed paths, each ending at a distinct leaf, such that every arc of
//! the network that is not a path arc joins two different paths. The
//! search picks a successor for every non-leaf vertex, bottom-up, so the
//! path (identified by its leaf) of every child is already fixed when its
//! parent is decided.

use crate::budget::Budget;
use crate::network::Network;

use super::{ForestCertificate, ForestError};

/// Returns a path-partition certificate, `None` if the network is not
/// forest-based, or an error when `|X| < 2` or the budget runs out.
pub fn decide_forest_based_with(network: &Network, budget: &mut Budget) -> Result<Option<ForestCertificate>, ForestError> {
    if network.leaf_count() < 2 {
        return Err(ForestError::TooFewLeaves(network.leaf_count()));
    }
    let mut search = PathSearch::new(network);
    if search.run(0, budget)? {
        let retained = search.order.iter().map(|&v| (v, search.successor[v]));
        Ok(Some(ForestCertificate::from_retained(network, retained.collect::<Vec<_>>())))
    } else {
        Ok(None)
    }
}

/// [`decide_forest_based_with`] under the default node budget.
pub fn decide_forest_based(network: &Network) -> Result<Option<ForestCertificate>, ForestError> {
    decide_forest_based_with(network, &mut Budget::default())
}

/// Children before parents, smallest index first among ready vertices.
pub(crate) fn bottom_up_order(network: &Network) -> Vec<usize> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let mut pending: Vec<usize> = network.vertices().map(|v| network.children(v).len()).collect();
    let mut heap: BinaryHeap<Reverse<usize>> =
        network.vertices().filter(|&v| pending[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(network.vertex_count());
    while let Some(Reverse(v)) = heap.pop() {
        order.push(v);
        for &p in network.parents(v) {
            pending[p] -= 1;
            if pending[p] == 0 {
                heap.push(Reverse(p));
            }
        }
    }
    order
}

struct PathSearch<'a> {
    network: &'a Network,
    /// Non-leaf vertices, bottom-up.
    order: Vec<usize>,
    successor: Vec<usize>,
    /// Leaf ending the path through each decided vertex.
    end: Vec<usize>,
    claimed: Vec<bool>,
    /// Unclaimed children of each undecided vertex.
    open: Vec<usize>,
}

impl<'a> PathSearch<'a> {
    fn new(network: &'a Network) -> Self {
        let n = network.vertex_count();
        let order: Vec<usize> = bottom_up_order(network).into_iter().filter(|&v| !network.is_leaf(v)).collect();
        let mut end = vec![usize::MAX; n];
        for &l in network.leaves() {
            end[l] = l;
        }
        let open = network.vertices().map(|v| network.children(v).len()).collect();
        Self { network, order, successor: vec![usize::MAX; n], end, claimed: vec![false; n], open }
    }

    fn run(&mut self, depth: usize, budget: &mut Budget) -> Result<bool, ForestError> {
        let Some(&v) = self.order.get(depth) else {
            return Ok(true);
        };
        let children = self.network.children(v);
        for &c in children {
            if self.claimed[c] {
                continue;
            }
            // every other child becomes a contact arc and must sit on another path
            if children.iter().any(|&o| o != c && self.end[o] == self.end[c]) {
                continue;
            }
            budget.tick()?;
            if self.claim(v, c) && self.run(depth + 1, budget)? {
                return Ok(true);
            }
            self.release(v, c);
        }
        Ok(false)
    }

    /// Returns false when some undecided parent of `c` is left without options.
    fn claim(&mut self, v: usize, c: usize) -> bool {
        self.claimed[c] = true;
        self.successor[v] = c;
        self.end[v] = self.end[c];
        let mut ok = true;
        for &p in self.network.parents(c) {
            self.open[p] -= 1;
            if p != v && self.open[p] == 0 && self.successor[p] == usize::MAX {
                ok = false;
            }
        }
        ok
    }

    fn release(&mut self, v: usize, c: usize) {
        if self.successor[v] != c {
            return;
        }
        self.claimed[c] = false;
        self.successor[v] = usize::MAX;
        self.end[v] = usize::MAX;
        for &p in self.network.parents(c) {
            self.open[p] += 1;
        }
    }
}
