//! Leaf-labelled directed acyclic graphs without degree constraints.
//!
//! [`Digraph`] is the substrate every other structure is built on. A
//! validated [`Network`](crate::Network) wraps one, and the editing
//! operations (subdivision, suppression, arc contraction) return plain
//! digraphs because their results may violate the network degree rules.
//!
//! Vertex identifiers are opaque strings. Internally vertices are indexed in
//! lexicographic order of their names, so every iteration order exposed here
//! is deterministic.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

/// Structural errors shared by digraphs and networks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("arc ({0}, {0}) is a loop")]
    SelfLoop(String),
    #[error("arc ({tail}, {head}) occurs more than once")]
    ParallelArc { tail: String, head: String },
    #[error("the graph contains a directed cycle through {0}")]
    CycleDetected(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown arc ({tail}, {head})")]
    UnknownArc { tail: String, head: String },
    #[error("label {0} is used by more than one vertex")]
    DuplicateLabel(String),
    #[error("vertex {0} carries two different labels")]
    ConflictingLabels(String),
    #[error("vertex {0} is labelled but has children")]
    LabelOnInternalVertex(String),
    #[error("contracting would merge the labelled vertices {0} and {1}")]
    ContractionHitsLeafPair(String, String),
    #[error("the two graphs are labelled by different leaf sets")]
    LabelSetMismatch,
}

/// A finite acyclic digraph with a partial labelling of its sinks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    children: Vec<Vec<usize>>,
    parents: Vec<Vec<usize>>,
    labels: Vec<Option<String>>,
    topo: Vec<usize>,
}

impl Digraph {
    /// Builds a digraph from named vertices, arcs and `(vertex, label)` pairs.
    ///
    /// Vertices mentioned only by arcs or labels are added implicitly.
    pub fn from_parts<V, A, L, S>(vertices: V, arcs: A, labels: L) -> Result<Self, DigraphError>
    where
        V: IntoIterator<Item = S>,
        A: IntoIterator<Item = (S, S)>,
        L: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut names: BTreeSet<String> = vertices.into_iter().map(|v| v.as_ref().to_owned()).collect();
        let arcs: Vec<(String, String)> = arcs
            .into_iter()
            .map(|(t, h)| (t.as_ref().to_owned(), h.as_ref().to_owned()))
            .collect();
        let labels: Vec<(String, String)> = labels
            .into_iter()
            .map(|(v, l)| (v.as_ref().to_owned(), l.as_ref().to_owned()))
            .collect();
        for (t, h) in &arcs {
            names.insert(t.clone());
            names.insert(h.clone());
        }
        for (v, _) in &labels {
            names.insert(v.clone());
        }
        let names: Vec<String> = names.into_iter().collect();
        let index: HashMap<String, usize> =
            names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();

        let mut indexed_arcs = Vec::with_capacity(arcs.len());
        let mut seen = BTreeSet::new();
        for (t, h) in &arcs {
            if t == h {
                return Err(DigraphError::SelfLoop(t.clone()));
            }
            let pair = (index[t], index[h]);
            if !seen.insert(pair) {
                return Err(DigraphError::ParallelArc { tail: t.clone(), head: h.clone() });
            }
            indexed_arcs.push(pair);
        }

        let mut vertex_labels: Vec<Option<String>> = vec![None; names.len()];
        for (v, l) in labels {
            let i = index[&v];
            match &vertex_labels[i] {
                Some(existing) if *existing != l => return Err(DigraphError::ConflictingLabels(v)),
                _ => vertex_labels[i] = Some(l),
            }
        }
        Self::from_indexed(names, &indexed_arcs, vertex_labels)
    }

    /// Builds from already-sorted unique names and index arcs. Parallel arcs
    /// are merged; all other invariants are checked.
    pub(crate) fn from_indexed(
        names: Vec<String>,
        arcs: &[(usize, usize)],
        labels: Vec<Option<String>>,
    ) -> Result<Self, DigraphError> {
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]));
        let n = names.len();
        let mut children = vec![Vec::new(); n];
        let mut parents = vec![Vec::new(); n];
        for &(t, h) in arcs {
            if t == h {
                return Err(DigraphError::SelfLoop(names[t].clone()));
            }
            children[t].push(h);
            parents[h].push(t);
        }
        for list in children.iter_mut().chain(parents.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }

        let mut label_owner: BTreeMap<&str, usize> = BTreeMap::new();
        for (v, l) in labels.iter().enumerate() {
            if let Some(l) = l {
                if label_owner.insert(l.as_str(), v).is_some() {
                    return Err(DigraphError::DuplicateLabel(l.clone()));
                }
                if !children[v].is_empty() {
                    return Err(DigraphError::LabelOnInternalVertex(names[v].clone()));
                }
            }
        }

        let topo = topological_order(&children, &parents)
            .map_err(|v| DigraphError::CycleDetected(names[v].clone()))?;
        let index = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Ok(Self { names, index, children, parents, labels, topo })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn arc_count(&self) -> usize {
        self.children.iter().map(Vec::len).sum()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.names.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub(crate) fn require(&self, name: &str) -> Result<usize, DigraphError> {
        self.index_of(name).ok_or_else(|| DigraphError::UnknownVertex(name.to_owned()))
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn parents(&self, v: usize) -> &[usize] {
        &self.parents[v]
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.parents[v].len()
    }

    pub fn outdegree(&self, v: usize) -> usize {
        self.children[v].len()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels[v].as_deref()
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.children[tail].binary_search(&head).is_ok()
    }

    /// Arcs in lexicographic order of `(tail, head)` indices.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.children.iter().enumerate().flat_map(|(t, cs)| cs.iter().map(move |&h| (t, h)))
    }

    /// Parents before children; ties broken by smallest index.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// The set of labels carried by the graph.
    pub fn label_set(&self) -> BTreeSet<&str> {
        self.labels.iter().flatten().map(String::as_str).collect()
    }

    pub fn labelled_vertices(&self) -> impl Iterator<Item = (usize, &str)> + '_ {
        self.labels.iter().enumerate().filter_map(|(v, l)| l.as_deref().map(|l| (v, l)))
    }

    /// Number of connected components of the underlying undirected graph.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.vertex_count()];
        let mut count = 0;
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for &w in self.children[v].iter().chain(&self.parents[v]) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Labels of all labelled vertices reachable from each vertex.
    pub fn clusters(&self) -> Vec<BTreeSet<String>> {
        let mut out = vec![BTreeSet::new(); self.vertex_count()];
        for &v in self.topo.iter().rev() {
            let mut set = BTreeSet::new();
            if let Some(l) = &self.labels[v] {
                set.insert(l.clone());
            }
            for &c in &self.children[v] {
                set.extend(out[c].iter().cloned());
            }
            out[v] = set;
        }
        out
    }

    /// Replaces the arc `(tail, head)` by a path through a fresh vertex.
    /// Returns the new graph and the name of the subdivision vertex.
    pub fn subdivide_arc(&self, tail: &str, head: &str) -> Result<(Digraph, String), DigraphError> {
        let t = self.require(tail)?;
        let h = self.require(head)?;
        if !self.has_arc(t, h) {
            return Err(DigraphError::UnknownArc { tail: tail.to_owned(), head: head.to_owned() });
        }
        let fresh = self.fresh_name("s");
        let mut arcs: Vec<(&str, &str)> = self
            .arcs()
            .filter(|&a| a != (t, h))
            .map(|(a, b)| (self.name(a), self.name(b)))
            .collect();
        arcs.push((tail, fresh.as_str()));
        arcs.push((fresh.as_str(), head));
        let vertices = self.names.iter().map(String::as_str).chain([fresh.as_str()]);
        let g = Digraph::from_parts(vertices, arcs, self.labelled_vertices().map(|(v, l)| (self.name(v), l)))?;
        Ok((g, fresh))
    }

    /// Smallest `prefix{k}` not already used as a vertex name.
    pub fn fresh_name(&self, prefix: &str) -> String {
        (0..)
            .map(|k| format!("{prefix}{k}"))
            .find(|n| !self.index.contains_key(n))
            .expect("unbounded search")
    }

    /// Repeatedly suppresses indegree-1/outdegree-1 vertices and removes
    /// outdegree-1 roots until neither remains. Labelled vertices are kept.
    ///
    /// Vertices are processed in topological order; surviving vertices keep
    /// their names, so the result is independent of the processing order up
    /// to equivalence.
    pub fn suppress(&self) -> Digraph {
        let n = self.vertex_count();
        let mut children: Vec<BTreeSet<usize>> =
            self.children.iter().map(|c| c.iter().copied().collect()).collect();
        let mut parents: Vec<BTreeSet<usize>> =
            self.parents.iter().map(|p| p.iter().copied().collect()).collect();
        let mut alive = vec![true; n];
        loop {
            let mut changed = false;
            for &v in &self.topo {
                if !alive[v] || self.labels[v].is_some() || children[v].len() != 1 {
                    continue;
                }
                let c = *children[v].iter().next().unwrap();
                match parents[v].len() {
                    0 => {
                        children[v].clear();
                        parents[c].remove(&v);
                    }
                    1 => {
                        let p = *parents[v].iter().next().unwrap();
                        children[p].remove(&v);
                        children[p].insert(c);
                        parents[c].remove(&v);
                        parents[c].insert(p);
                        children[v].clear();
                        parents[v].clear();
                    }
                    _ => continue,
                }
                alive[v] = false;
                changed = true;
            }
            if !changed {
                break;
            }
        }
        self.restrict(&alive, |v| children[v].iter().copied().collect())
    }

    /// Keeps the vertices flagged in `keep`, with arcs supplied per vertex.
    fn restrict(&self, keep: &[bool], arcs_of: impl Fn(usize) -> Vec<usize>) -> Digraph {
        let mut remap = vec![usize::MAX; self.vertex_count()];
        let mut names = Vec::new();
        let mut labels = Vec::new();
        for v in self.vertices().filter(|&v| keep[v]) {
            remap[v] = names.len();
            names.push(self.names[v].clone());
            labels.push(self.labels[v].clone());
        }
        let arcs: Vec<(usize, usize)> = self
            .vertices()
            .filter(|&v| keep[v])
            .flat_map(|v| arcs_of(v).into_iter().map(move |c| (v, c)))
            .map(|(v, c)| (remap[v], remap[c]))
            .collect();
        Digraph::from_indexed(names, &arcs, labels).expect("restriction of a valid digraph")
    }

    /// The subgraph induced by the given vertex subset.
    pub fn induced(&self, keep: &[bool]) -> Digraph {
        self.restrict(keep, |v| self.children[v].iter().copied().filter(|&c| keep[c]).collect())
    }

    /// The spanning subgraph keeping only arcs accepted by `retain`.
    pub fn with_arcs(&self, retain: impl Fn(usize, usize) -> bool) -> Digraph {
        let keep = vec![true; self.vertex_count()];
        self.restrict(&keep, |v| self.children[v].iter().copied().filter(|&c| retain(v, c)).collect())
    }

    /// Contracts every arc of `arcs` (given by vertex names), merging the
    /// endpoints and any parallel arcs that result. A merged vertex keeps
    /// the name of its topmost member and the label of its labelled member.
    pub fn contract_arcs<S: AsRef<str>>(&self, arcs: &[(S, S)]) -> Result<Digraph, DigraphError> {
        let n = self.vertex_count();
        let mut rep: Vec<usize> = (0..n).collect();
        fn find(rep: &mut [usize], v: usize) -> usize {
            let mut r = v;
            while rep[r] != r {
                r = rep[r];
            }
            let mut x = v;
            while rep[x] != r {
                let next = rep[x];
                rep[x] = r;
                x = next;
            }
            r
        }
        let mut position = vec![0; n];
        for (i, &v) in self.topo.iter().enumerate() {
            position[v] = i;
        }
        for (tail, head) in arcs {
            let t = self.require(tail.as_ref())?;
            let h = self.require(head.as_ref())?;
            if !self.has_arc(t, h) {
                return Err(DigraphError::UnknownArc {
                    tail: tail.as_ref().to_owned(),
                    head: head.as_ref().to_owned(),
                });
            }
            let (a, b) = (find(&mut rep, t), find(&mut rep, h));
            if a == b {
                continue;
            }
            // the member earliest in topological order names the class
            let (top, bottom) = if position[a] <= position[b] { (a, b) } else { (b, a) };
            rep[bottom] = top;
        }

        let mut class_label: BTreeMap<usize, (usize, String)> = BTreeMap::new();
        for (v, l) in self.labelled_vertices() {
            let r = find(&mut rep, v);
            if let Some((other, _)) = class_label.get(&r) {
                return Err(DigraphError::ContractionHitsLeafPair(
                    self.names[*other].clone(),
                    self.names[v].clone(),
                ));
            }
            class_label.insert(r, (v, l.to_owned()));
        }

        let roots: Vec<usize> = (0..n).map(|v| find(&mut rep, v)).collect();
        let vertices: Vec<&str> = (0..n).filter(|&v| roots[v] == v).map(|v| self.name(v)).collect();
        let mut arc_set = BTreeSet::new();
        for (t, h) in self.arcs() {
            if roots[t] != roots[h] {
                arc_set.insert((self.name(roots[t]), self.name(roots[h])));
            }
        }
        let labels: Vec<(&str, &str)> = class_label
            .iter()
            .map(|(&r, (_, l))| (self.name(r), l.as_str()))
            .collect();
        Digraph::from_parts(vertices, arc_set, labels)
    }

    /// True iff some isomorphism maps `self` onto `other` and preserves
    /// labels. Exact backtracking, intended for graphs of a few dozen vertices.
    pub fn is_equivalent(&self, other: &Digraph) -> Result<bool, DigraphError> {
        if self.label_set() != other.label_set() {
            return Err(DigraphError::LabelSetMismatch);
        }
        Ok(Isomorphism::new(self, other).map(|mut iso| iso.search()).unwrap_or(false))
    }
}

/// Kahn's algorithm with a min-heap. On failure returns a vertex on a cycle.
fn topological_order(children: &[Vec<usize>], parents: &[Vec<usize>]) -> Result<Vec<usize>, usize> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let n = children.len();
    let mut indeg: Vec<usize> = parents.iter().map(Vec::len).collect();
    let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = heap.pop() {
        order.push(v);
        for &c in &children[v] {
            indeg[c] -= 1;
            if indeg[c] == 0 {
                heap.push(Reverse(c));
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err((0..n).find(|&v| indeg[v] > 0).unwrap())
    }
}

/// Bottom-up backtracking: a vertex may only be mapped once all of its
/// children are mapped, and its image must have exactly the mapped children.
struct Isomorphism<'a> {
    left: &'a Digraph,
    right: &'a Digraph,
    order: Vec<usize>,
    forward: Vec<Option<usize>>,
    used: Vec<bool>,
    signature_left: Vec<Signature>,
    signature_right: Vec<Signature>,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    indegree: usize,
    outdegree: usize,
    label: Option<String>,
    cluster: BTreeSet<String>,
}

fn signatures(g: &Digraph) -> Vec<Signature> {
    let clusters = g.clusters();
    g.vertices()
        .map(|v| Signature {
            indegree: g.indegree(v),
            outdegree: g.outdegree(v),
            label: g.labels[v].clone(),
            cluster: clusters[v].clone(),
        })
        .collect()
}

impl<'a> Isomorphism<'a> {
    fn new(left: &'a Digraph, right: &'a Digraph) -> Option<Self> {
        if left.vertex_count() != right.vertex_count() || left.arc_count() != right.arc_count() {
            return None;
        }
        let signature_left = signatures(left);
        let signature_right = signatures(right);
        let mut a = signature_left.clone();
        let mut b = signature_right.clone();
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
        Some(Self {
            left,
            right,
            order: left.topo.iter().rev().copied().collect(),
            forward: vec![None; left.vertex_count()],
            used: vec![false; right.vertex_count()],
            signature_left,
            signature_right,
        })
    }

    fn search(&mut self) -> bool {
        self.extend(0)
    }

    fn extend(&mut self, depth: usize) -> bool {
        let Some(&v) = self.order.get(depth) else {
            return true;
        };
        let mut image: Vec<usize> =
            self.left.children[v].iter().map(|&c| self.forward[c].expect("children first")).collect();
        image.sort_unstable();
        let candidates: Vec<usize> = match image.first() {
            // any shared parent of the mapped children
            Some(&c) => self.right.parents[c].clone(),
            None => self.right.vertices().collect(),
        };
        for w in candidates {
            if self.used[w]
                || self.signature_left[v] != self.signature_right[w]
                || self.right.children[w] != image
            {
                continue;
            }
            self.forward[v] = Some(w);
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.forward[v] = None;
            self.used[w] = false;
        }
        false
    }
}
