//! Exhaustive enumeration of binary networks on a label set.
//!
//! Networks are built bottom-up by level, where the level of a vertex is
//! one more than the highest level among its children and leaves sit at
//! level 0. Within a level, new vertices are added in non-decreasing order
//! of `(kind, children)`. Levels are invariant and leaves are fixed by their
//! labels, so the only repeats come from interchangeable twin vertices; they
//! are filtered by an equivalence check within buckets of equal clusters.

use std::collections::{BTreeSet, HashMap};

use crate::network::Network;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_vertices: usize,
    /// Skip networks with more roots.
    pub max_roots: Option<usize>,
}

impl EnumerationLimits {
    pub fn vertices(max_vertices: usize) -> Self {
        Self { max_vertices, max_roots: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Kind {
    /// Outdegree two; a root or a tree vertex depending on its parents.
    Split,
    /// Outdegree one, indegree two.
    Hybrid,
    Leaf,
}

#[derive(Clone, Debug)]
struct Vertex {
    kind: Kind,
    children: Vec<usize>,
    level: usize,
    parents: usize,
}

impl Vertex {
    fn capacity(&self) -> usize {
        match self.kind {
            Kind::Hybrid => 2,
            _ => 1,
        }
    }

    fn free(&self) -> bool {
        self.parents < self.capacity()
    }

    /// Parents still required for a complete network.
    fn deficit(&self) -> usize {
        match self.kind {
            Kind::Split => 0,
            _ => self.capacity() - self.parents,
        }
    }
}

struct Enumerator<'a, F> {
    labels: &'a [&'a str],
    limits: EnumerationLimits,
    vertices: Vec<Vertex>,
    visit: F,
    stopped: bool,
    produced: usize,
    seen: HashMap<Vec<(usize, BTreeSet<String>)>, Vec<Network>>,
}

/// Calls `visit` on every binary network on `labels` with at most
/// `limits.max_vertices` vertices; stops early when `visit` returns
/// `false`. Returns the number of networks visited.
pub fn enumerate_binary_networks(
    labels: &[&str],
    limits: EnumerationLimits,
    visit: impl FnMut(Network) -> bool,
) -> usize {
    let vertices = labels
        .iter()
        .map(|_| Vertex { kind: Kind::Leaf, children: Vec::new(), level: 0, parents: 0 })
        .collect();
    let mut e = Enumerator { labels, limits, vertices, visit, stopped: false, produced: 0, seen: HashMap::new() };
    e.level(1, None);
    e.produced
}

impl<F: FnMut(Network) -> bool> Enumerator<'_, F> {
    /// Adds vertices at `level` with keys at least `last`, or closes the level.
    fn level(&mut self, level: usize, last: Option<(Kind, Vec<usize>)>) {
        if self.stopped {
            return;
        }
        let room = self.limits.max_vertices.saturating_sub(self.vertices.len());
        let need: usize = self.vertices.iter().map(Vertex::deficit).sum();
        if need > 2 * room {
            return;
        }
        if last.is_some() {
            // the level is non-empty: it may be the top, or another may follow
            if need == 0 {
                self.emit();
            }
            self.level(level + 1, None);
            if self.stopped {
                return;
            }
        }
        if room == 0 {
            return;
        }
        let free: Vec<usize> = (0..self.vertices.len()).filter(|&v| self.vertices[v].free()).collect();
        let mut candidates: Vec<(Kind, Vec<usize>)> = Vec::new();
        for (i, &a) in free.iter().enumerate() {
            for &b in &free[i + 1..] {
                candidates.push((Kind::Split, vec![a, b]));
            }
            candidates.push((Kind::Hybrid, vec![a]));
        }
        candidates.retain(|(_, kids)| {
            kids.iter().all(|&c| self.vertices[c].level < level)
                && kids.iter().any(|&c| self.vertices[c].level + 1 == level)
        });
        candidates.sort();
        for (kind, kids) in candidates {
            if last.as_ref().is_some_and(|l| (kind, &kids) < (l.0, &l.1)) {
                continue;
            }
            for &c in &kids {
                self.vertices[c].parents += 1;
            }
            self.vertices.push(Vertex { kind, children: kids.clone(), level, parents: 0 });
            self.level(level, Some((kind, kids.clone())));
            self.vertices.pop();
            for &c in &kids {
                self.vertices[c].parents -= 1;
            }
            if self.stopped {
                return;
            }
        }
    }

    fn emit(&mut self) {
        let roots = self.vertices.iter().filter(|v| v.kind == Kind::Split && v.parents == 0).count();
        if roots == 0 || self.limits.max_roots.is_some_and(|m| roots > m) {
            return;
        }
        let name = |v: usize| if v < self.labels.len() { self.labels[v].to_owned() } else { format!("v{v}") };
        let arcs: Vec<(String, String)> = self
            .vertices
            .iter()
            .enumerate()
            .flat_map(|(v, x)| x.children.iter().map(move |&c| (v, c)))
            .map(|(v, c)| (name(v), name(c)))
            .collect();
        let labels: Vec<(String, String)> = self.labels.iter().map(|l| (l.to_string(), l.to_string())).collect();
        let vertices: Vec<String> = (0..self.vertices.len()).map(name).collect();
        // disconnected candidates are rejected here
        if let Ok(n) = Network::build(vertices, arcs, labels) {
            let mut key: Vec<(usize, BTreeSet<String>)> =
                n.vertices().map(|v| (n.parents(v).len(), n.cluster(v))).collect();
            key.sort();
            let bucket = self.seen.entry(key).or_default();
            if bucket.iter().any(|m| m.is_equivalent(&n).unwrap_or(false)) {
                return;
            }
            bucket.push(n.clone());
            self.produced += 1;
            if !(self.visit)(n) {
                self.stopped = true;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_on_three_leaves() {
        // with at most five vertices only the three rooted binary trees fit
        let mut trees = Vec::new();
        enumerate_binary_networks(&["a", "b", "c"], EnumerationLimits::vertices(5), |n| {
            trees.push(n);
            true
        });
        assert_eq!(trees.len(), 3);
        assert!(trees.iter().all(|t| t.root_count() == 1 && t.hybrids().is_empty()));
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let mut all: Vec<Network> = Vec::new();
        enumerate_binary_networks(&["a", "b", "c"], EnumerationLimits::vertices(8), |n| {
            all.push(n);
            true
        });
        assert!(all.len() > 10);
        for (i, a) in all.iter().enumerate() {
            assert!(a.is_binary());
            for b in &all[i + 1..] {
                assert!(!a.is_equivalent(b).unwrap());
            }
        }
    }
}
