//! Seeded random networks.
//!
//! A draw samples `m` random binary trees on a random partition of the
//! leaves, joins them into a connected network with contact arcs and adds
//! further contact arcs until the hybrid count is reached. A contact arc
//! runs from a new vertex subdividing one arc (or from a root of
//! outdegree one) to a new hybrid subdividing another arc. The random
//! source is SplitMix64 seeded with the 64-bit seed, so a seed and a
//! parameter set always give the same network.

use std::collections::BTreeSet;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::classify::is_tree_child;
use crate::digraph::Digraph;
use crate::network::Network;

/// Attempts per draw before giving up.
pub const REJECTION_BUDGET: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bias {
    /// Any contact arcs; optionally multifurcating.
    Unconstrained,
    /// Every draw is tree-child.
    TreeChild,
    /// Exactly `m - 1` contact arcs, each joining two different trees.
    Arboreal,
    /// Contact arcs only between different trees, so the trees form a
    /// base forest.
    ForestSeeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub leaves: (usize, usize),
    pub roots: usize,
    pub hybrids: (usize, usize),
    pub bias: Bias,
    /// Contract this many random tree arcs afterwards (unconstrained only).
    pub contractions: usize,
    pub max_vertices: Option<usize>,
    pub seed: u64,
}

impl GenParams {
    pub fn new(seed: u64, leaves: usize, roots: usize) -> Self {
        Self {
            leaves: (leaves, leaves),
            roots,
            hybrids: (roots.saturating_sub(1), roots.saturating_sub(1) + 2),
            bias: Bias::Unconstrained,
            contractions: 0,
            max_vertices: None,
            seed,
        }
    }

    pub fn bias(mut self, bias: Bias) -> Self {
        self.bias = bias;
        self
    }

    pub fn leaves(mut self, min: usize, max: usize) -> Self {
        self.leaves = (min, max);
        self
    }

    pub fn hybrids(mut self, min: usize, max: usize) -> Self {
        self.hybrids = (min, max);
        self
    }

    pub fn max_vertices(mut self, max: usize) -> Self {
        self.max_vertices = Some(max);
        self
    }

    pub fn contractions(mut self, k: usize) -> Self {
        self.contractions = k;
        self
    }

    fn check(&self) -> Result<(), GenError> {
        let (lmin, lmax) = self.leaves;
        let (hmin, hmax) = self.hybrids;
        let fail = |m: &str| Err(GenError::InfeasibleParams(m.to_owned()));
        if self.roots == 0 {
            return fail("at least one root is needed");
        }
        if lmin > lmax || hmin > hmax {
            return fail("empty range");
        }
        if lmax < self.roots {
            return fail("more roots than leaves");
        }
        if lmax == 0 || (self.roots == 1 && lmax < 2) {
            return fail("a network needs a root of outdegree two");
        }
        if hmax + 1 < self.roots {
            return fail("too few hybrids to connect the trees");
        }
        if self.bias == Bias::Arboreal && !(hmin..=hmax).contains(&(self.roots - 1)) {
            return fail("arboreal networks have exactly m - 1 hybrids");
        }
        if self.bias == Bias::TreeChild && lmax < self.roots + hmin.max(self.roots - 1) {
            // roots and hybrids each start a tree path ending at its own leaf
            return fail("tree-child networks need at least m + h leaves");
        }
        if self.bias == Bias::ForestSeeded && self.roots < 2 && hmin > 0 {
            return fail("contact arcs between trees need two trees");
        }
        if self.contractions > 0 && self.bias != Bias::Unconstrained {
            return fail("contractions only apply to unconstrained draws");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),
    #[error("no valid network after {REJECTION_BUDGET} attempts")]
    RejectionBudgetExhausted,
}

struct Source(SplitMix64);

impl Source {
    fn below(&mut self, n: usize) -> usize {
        ((u128::from(self.0.next_u64()) * n as u128) >> 64) as usize
    }

    fn between(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    fn shuffle<T>(&mut self, v: &mut [T]) {
        for i in (1..v.len()).rev() {
            v.swap(i, self.below(i + 1));
        }
    }
}

/// Labels `a..z` for up to 26 leaves, `x1..xk` beyond.
fn leaf_label(i: usize, k: usize) -> String {
    if k <= 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("x{}", i + 1)
    }
}

/// The network under construction, with the tree of every vertex.
struct Sketch {
    arcs: BTreeSet<(usize, usize)>,
    tree: Vec<usize>,
    leaf_count: usize,
    /// Arcs added as contact arcs, or lying on a subdivided contact arc.
    contact: BTreeSet<(usize, usize)>,
}

impl Sketch {
    fn add_vertex(&mut self, tree: usize) -> usize {
        self.tree.push(tree);
        self.tree.len() - 1
    }

    fn outdegree(&self, v: usize) -> usize {
        self.arcs.range((v, 0)..(v + 1, 0)).count()
    }

    fn indegree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.1 == v).count()
    }

    fn subdivide(&mut self, (u, v): (usize, usize)) -> usize {
        let w = self.add_vertex(self.tree[v]);
        self.arcs.remove(&(u, v));
        self.arcs.insert((u, w));
        self.arcs.insert((w, v));
        if self.contact.remove(&(u, v)) {
            self.contact.insert((u, w));
            self.contact.insert((w, v));
        }
        w
    }

    fn reaches(&self, from: usize, to: usize) -> bool {
        let mut stack = vec![from];
        let mut seen = vec![false; self.tree.len()];
        while let Some(u) = stack.pop() {
            if u == to {
                return true;
            }
            for &(_, c) in self.arcs.range((u, 0)..(u + 1, 0)) {
                if !std::mem::replace(&mut seen[c], true) {
                    stack.push(c);
                }
            }
        }
        false
    }

    /// Adds a contact arc from `tail` (an arc to subdivide, or a root) to
    /// a new hybrid on `head`. Returns false, changing nothing, if that
    /// would create a cycle or a parallel arc.
    fn contact_arc(&mut self, tail: Tail, head: (usize, usize)) -> bool {
        match tail {
            Tail::Arc(a) => {
                if a == head || self.reaches(head.1, a.0) {
                    return false;
                }
                let s = self.subdivide(a);
                let h = self.subdivide(head);
                self.arcs.insert((s, h));
                self.contact.insert((s, h));
            }
            Tail::Root(r) => {
                if head.0 == r || self.reaches(head.1, r) {
                    return false;
                }
                let h = self.subdivide(head);
                self.arcs.insert((r, h));
                self.contact.insert((r, h));
            }
        }
        true
    }

    fn into_network(self) -> Option<Network> {
        let n = self.tree.len();
        let mut parents = vec![0usize; n];
        let mut children = vec![0usize; n];
        for &(u, v) in &self.arcs {
            children[u] += 1;
            parents[v] += 1;
        }
        let mut counters = [0usize; 3];
        let names: Vec<String> = (0..n)
            .map(|v| {
                if v < self.leaf_count {
                    return leaf_label(v, self.leaf_count);
                }
                if parents[v] + children[v] == 0 {
                    return String::new();
                }
                let (prefix, k) = match (parents[v], children[v]) {
                    (0, _) => ("r", 0),
                    (1, _) => ("t", 1),
                    _ => ("h", 2),
                };
                counters[k] += 1;
                format!("{prefix}{}", counters[k])
            })
            .collect();
        let labels: Vec<(&str, &str)> = (0..self.leaf_count).map(|v| (names[v].as_str(), names[v].as_str())).collect();
        let graph = Digraph::from_parts(
            names.iter().map(String::as_str).filter(|s| !s.is_empty()),
            self.arcs.iter().map(|&(u, v)| (names[u].as_str(), names[v].as_str())),
            labels,
        )
        .ok()?;
        Network::from_digraph(graph).ok()
    }
}

#[derive(Clone, Copy)]
enum Tail {
    Arc((usize, usize)),
    Root(usize),
}

/// One draw of a random network; deterministic in `params`.
pub fn random_network(params: &GenParams) -> Result<Network, GenError> {
    params.check()?;
    let mut rng = Source(SplitMix64::from_seed(params.seed.to_le_bytes()));
    for _ in 0..REJECTION_BUDGET {
        if let Some(n) = attempt(params, &mut rng) {
            return Ok(n);
        }
    }
    Err(GenError::RejectionBudgetExhausted)
}

fn attempt(params: &GenParams, rng: &mut Source) -> Option<Network> {
    let m = params.roots;
    let k = rng.between(params.leaves.0.max(m).max(if m == 1 { 2 } else { 1 }), params.leaves.1);
    let hybrids = rng.between(params.hybrids.0.max(m - 1), params.hybrids.1);
    let hybrids = if params.bias == Bias::Arboreal { m - 1 } else { hybrids };

    // leaves are vertices 0..k; split a shuffled order into m non-empty blocks
    let mut order: Vec<usize> = (0..k).collect();
    rng.shuffle(&mut order);
    let mut cuts: Vec<usize> = (1..k).collect();
    rng.shuffle(&mut cuts);
    let mut cuts: Vec<usize> = cuts.into_iter().take(m - 1).collect();
    cuts.sort_unstable();
    let mut blocks = Vec::with_capacity(m);
    let mut start = 0;
    for &c in cuts.iter().chain([&k]) {
        blocks.push(order[start..c].to_vec());
        start = c;
    }

    let mut sketch = Sketch { arcs: BTreeSet::new(), tree: vec![0; k], leaf_count: k, contact: BTreeSet::new() };
    for (t, block) in blocks.iter().enumerate() {
        for &leaf in block {
            sketch.tree[leaf] = t;
        }
    }
    let roots: Vec<usize> = blocks.iter().enumerate().map(|(t, b)| random_tree(&mut sketch, rng, t, b)).collect();

    // connect tree i to an earlier tree
    let mut added = 0;
    for i in 1..m {
        let j = rng.below(i);
        let (a, b) = if sketch.outdegree(roots[i]) == 1 || (sketch.outdegree(roots[j]) != 1 && rng.below(2) == 0) {
            (i, j)
        } else {
            (j, i)
        };
        let tail = pick_tail(&sketch, rng, a, roots[a], true);
        let head = pick_arc(&sketch, rng, Some(b), params.bias)?;
        if !sketch.contact_arc(tail, head) {
            return None;
        }
        added += 1;
    }
    if params.bias == Bias::Arboreal {
        if roots.iter().any(|&r| sketch.outdegree(r) < 2) {
            return None;
        }
        return finish(sketch, params);
    }

    // roots of single-leaf trees still need a second child
    for (t, &root) in roots.iter().enumerate() {
        if sketch.outdegree(root) == 1 {
            let target = other_tree(rng, m, t);
            let head = pick_arc(&sketch, rng, target, params.bias)?;
            if !sketch.contact_arc(Tail::Root(root), head) {
                return None;
            }
            added += 1;
        }
    }
    if added > hybrids && params.hybrids.1 < added {
        return None;
    }

    let mut tries = 0;
    while added < hybrids {
        tries += 1;
        if tries > 50 {
            return None;
        }
        let tail_tree = rng.below(m);
        let tail = pick_tail(&sketch, rng, tail_tree, roots[tail_tree], false);
        let head_tree = match params.bias {
            Bias::ForestSeeded => other_tree(rng, m, tail_tree),
            _ => None,
        };
        let Some(head) = pick_arc(&sketch, rng, head_tree, params.bias) else { continue };
        if let Tail::Arc(a) = tail {
            if params.bias == Bias::ForestSeeded && sketch.tree[a.1] == sketch.tree[head.1] {
                continue;
            }
        }
        let before = sketch.arcs.clone();
        let contact = sketch.contact.clone();
        let vertices = sketch.tree.len();
        if !sketch.contact_arc(tail, head) {
            continue;
        }
        if params.bias == Bias::TreeChild && !tree_child_sketch(&sketch) {
            sketch.arcs = before;
            sketch.contact = contact;
            sketch.tree.truncate(vertices);
            continue;
        }
        added += 1;
    }

    if params.contractions > 0 {
        contract_random(&mut sketch, rng, params.contractions);
    }
    finish(sketch, params)
}

fn finish(sketch: Sketch, params: &GenParams) -> Option<Network> {
    let network = sketch.into_network()?;
    if params.max_vertices.is_some_and(|max| network.vertex_count() > max) {
        return None;
    }
    if params.bias == Bias::TreeChild && !is_tree_child(&network) {
        return None;
    }
    Some(network)
}

fn other_tree(rng: &mut Source, m: usize, t: usize) -> Option<usize> {
    if m < 2 {
        return None;
    }
    let o = rng.below(m - 1);
    Some(if o >= t { o + 1 } else { o })
}

/// Random binary tree on `leaves` below a new root; returns the root.
fn random_tree(sketch: &mut Sketch, rng: &mut Source, t: usize, leaves: &[usize]) -> usize {
    let root = sketch.add_vertex(t);
    sketch.arcs.insert((root, leaves[0]));
    for &x in &leaves[1..] {
        // arcs of this tree, below the stem
        let tree_arcs: Vec<(usize, usize)> =
            sketch.arcs.iter().copied().filter(|&(u, v)| sketch.tree[v] == t && sketch.tree[u] == t && u != root).collect();
        let slot = rng.below(tree_arcs.len() + 1);
        let w = sketch.add_vertex(t);
        if slot == tree_arcs.len() {
            // above the current top
            let top = sketch.arcs.range((root, 0)..(root + 1, 0)).next().unwrap().1;
            sketch.arcs.remove(&(root, top));
            sketch.arcs.insert((root, w));
            sketch.arcs.insert((w, top));
        } else {
            let (u, v) = tree_arcs[slot];
            sketch.arcs.remove(&(u, v));
            sketch.arcs.insert((u, w));
            sketch.arcs.insert((w, v));
        }
        sketch.arcs.insert((w, x));
    }
    if leaves.len() > 1 {
        // the stem root has a single child; that child becomes the root
        let top = sketch.arcs.range((root, 0)..(root + 1, 0)).next().unwrap().1;
        sketch.arcs.remove(&(root, top));
        let moved: Vec<(usize, usize)> = sketch.arcs.range((top, 0)..(top + 1, 0)).copied().collect();
        for (_, c) in moved {
            sketch.arcs.remove(&(top, c));
            sketch.arcs.insert((root, c));
        }
        // `top` is now isolated; keep indices stable by leaving it unused
        sketch.tree[top] = usize::MAX;
    }
    root
}

/// A tail in tree `t`: the root when it has outdegree one (always when
/// `prefer_root`), otherwise a random arc of the tree.
fn pick_tail(sketch: &Sketch, rng: &mut Source, t: usize, root: usize, prefer_root: bool) -> Tail {
    if sketch.outdegree(root) == 1 && (prefer_root || rng.below(2) == 0) {
        return Tail::Root(root);
    }
    let arcs: Vec<(usize, usize)> = sketch
        .arcs
        .iter()
        .copied()
        .filter(|&(u, v)| sketch.tree[u] == t && sketch.tree[v] == t && !sketch.contact.contains(&(u, v)))
        .collect();
    if arcs.is_empty() {
        Tail::Root(root)
    } else {
        Tail::Arc(arcs[rng.below(arcs.len())])
    }
}

/// A random arc, restricted to tree `t` when given. Forest-seeded and
/// arboreal draws never subdivide contact arcs.
fn pick_arc(sketch: &Sketch, rng: &mut Source, t: Option<usize>, bias: Bias) -> Option<(usize, usize)> {
    let keep_contacts_whole = matches!(bias, Bias::ForestSeeded | Bias::Arboreal);
    let arcs: Vec<(usize, usize)> = sketch
        .arcs
        .iter()
        .copied()
        .filter(|&(u, v)| match t {
            Some(t) => sketch.tree[u] == t && sketch.tree[v] == t,
            None => true,
        })
        .filter(|a| !(keep_contacts_whole && sketch.contact.contains(a)))
        .collect();
    (!arcs.is_empty()).then(|| arcs[rng.below(arcs.len())])
}

fn tree_child_sketch(sketch: &Sketch) -> bool {
    let n = sketch.tree.len();
    let mut indegree = vec![0usize; n];
    for &(_, v) in &sketch.arcs {
        indegree[v] += 1;
    }
    (0..n).all(|v| {
        let mut kids = sketch.arcs.range((v, 0)..(v + 1, 0)).peekable();
        kids.peek().is_none() || sketch.arcs.range((v, 0)..(v + 1, 0)).any(|&(_, c)| indegree[c] == 1)
    })
}

/// Contracts up to `k` arcs between non-leaf vertices of indegree at most one.
fn contract_random(sketch: &mut Sketch, rng: &mut Source, k: usize) {
    for _ in 0..k {
        let candidates: Vec<(usize, usize)> = sketch
            .arcs
            .iter()
            .copied()
            .filter(|&(u, v)| {
                v >= sketch.leaf_count
                    && sketch.indegree(v) == 1
                    && sketch.indegree(u) <= 1
                    && sketch.outdegree(v) > 0
                    && !sketch.arcs.range((v, 0)..(v + 1, 0)).any(|&(_, c)| sketch.arcs.contains(&(u, c)))
            })
            .collect();
        if candidates.is_empty() {
            return;
        }
        let (u, v) = candidates[rng.below(candidates.len())];
        sketch.arcs.remove(&(u, v));
        let moved: Vec<usize> = sketch.arcs.range((v, 0)..(v + 1, 0)).map(|a| a.1).collect();
        for c in moved {
            sketch.arcs.remove(&(v, c));
            sketch.arcs.insert((u, c));
            if sketch.contact.remove(&(v, c)) {
                sketch.contact.insert((u, c));
            }
        }
        sketch.tree[v] = usize::MAX;
    }
}
