//! Cluster systems, hierarchies and arboreal networks realising them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::digraph::Digraph;
use crate::forest::{arboreal_forest_based, ForestError};
use crate::network::{Network, NetworkError};
use crate::trees::PhyloTree;

pub type Cluster = BTreeSet<String>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClusterError {
    #[error("invalid cluster system: {0}")]
    InvalidSystem(String),
    #[error("the cluster system is not a hierarchy")]
    NotAHierarchy,
    #[error("properties violated: {0}")]
    PropertiesViolated(String),
    #[error("no arboreal network realises the system: {0}")]
    NotRealizable(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Forest(#[from] ForestError),
}

/// A family of distinct non-empty subsets of a ground set `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterSystem {
    ground: Cluster,
    clusters: BTreeSet<Cluster>,
}

impl ClusterSystem {
    pub fn new(ground: Cluster, clusters: impl IntoIterator<Item = Cluster>) -> Result<Self, ClusterError> {
        let clusters: BTreeSet<Cluster> = clusters.into_iter().collect();
        for c in &clusters {
            if c.is_empty() {
                return Err(ClusterError::InvalidSystem("empty cluster".into()));
            }
            if !c.is_subset(&ground) {
                return Err(ClusterError::InvalidSystem(format!("cluster {} leaves the ground set", show(c))));
            }
        }
        Ok(Self { ground, clusters })
    }

    /// Ground set taken as the union of the clusters.
    pub fn from_clusters(clusters: impl IntoIterator<Item = Cluster>) -> Result<Self, ClusterError> {
        let clusters: BTreeSet<Cluster> = clusters.into_iter().collect();
        let ground = clusters.iter().flatten().cloned().collect();
        Self::new(ground, clusters)
    }

    pub fn ground(&self) -> &Cluster {
        &self.ground
    }

    pub fn clusters(&self) -> &BTreeSet<Cluster> {
        &self.clusters
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn contains(&self, c: &Cluster) -> bool {
        self.clusters.contains(c)
    }

    /// Inclusion-maximal members, in set order.
    pub fn maximal(&self) -> Vec<&Cluster> {
        self.clusters
            .iter()
            .filter(|c| !self.clusters.iter().any(|d| d.len() > c.len() && c.is_subset(d)))
            .collect()
    }

    /// Members contained in `within`, as a system on `within`.
    pub fn restrict(&self, within: &Cluster) -> ClusterSystem {
        let clusters = self.clusters.iter().filter(|c| c.is_subset(within)).cloned().collect();
        ClusterSystem { ground: within.clone(), clusters }
    }

    /// Pairwise laminar, with all singletons and the ground set.
    pub fn is_hierarchy(&self) -> bool {
        self.missing_singleton().is_none() && self.contains(&self.ground) && self.overlap().is_none()
    }

    fn missing_singleton(&self) -> Option<String> {
        self.ground.iter().find(|x| !self.contains(&BTreeSet::from([(*x).clone()]))).cloned()
    }

    /// Two members that properly overlap.
    fn overlap(&self) -> Option<(Cluster, Cluster)> {
        let v: Vec<&Cluster> = self.clusters.iter().collect();
        for (i, a) in v.iter().enumerate() {
            for b in &v[i + 1..] {
                if !a.is_disjoint(b) && !a.is_subset(b) && !b.is_subset(a) {
                    return Some(((*a).clone(), (*b).clone()));
                }
            }
        }
        None
    }
}

/// Comma-separated rendering used in messages.
pub fn show(c: &Cluster) -> String {
    c.iter().cloned().collect::<Vec<_>>().join(",")
}

/// Members as vertices, an edge for every non-empty intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionGraph {
    pub vertices: Vec<Cluster>,
    pub edges: Vec<(usize, usize)>,
}

impl IntersectionGraph {
    pub fn new<'a>(family: impl IntoIterator<Item = &'a Cluster>) -> Self {
        let vertices: Vec<Cluster> = family.into_iter().cloned().collect();
        let mut edges = Vec::new();
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if !vertices[i].is_disjoint(&vertices[j]) {
                    edges.push((i, j));
                }
            }
        }
        Self { vertices, edges }
    }

    /// Connected components as sorted vertex index lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// All clusters of a network.
pub fn cluster_system(network: &Network) -> ClusterSystem {
    let ground = network.labels().map(str::to_owned).collect();
    ClusterSystem { ground, clusters: network.clusters().into_iter().collect() }
}

/// Parent (by index) of each cluster in the Hasse diagram of a laminar family.
fn hasse_parents(clusters: &[Cluster]) -> Vec<Option<usize>> {
    clusters
        .iter()
        .map(|c| {
            clusters
                .iter()
                .enumerate()
                .filter(|(_, d)| d.len() > c.len() && c.is_subset(d))
                .min_by_key(|(_, d)| d.len())
                .map(|(i, _)| i)
        })
        .collect()
}

type NamePair = (String, String);

/// Arcs and labels of the Hasse diagram, with leaves named `l_<label>`
/// and other vertices `<prefix><i>`.
fn hierarchy_parts(h: &ClusterSystem, prefix: &str) -> (Vec<String>, Vec<NamePair>, Vec<NamePair>) {
    let clusters: Vec<Cluster> = h.clusters.iter().cloned().collect();
    let parents = hasse_parents(&clusters);
    let name = |i: usize| {
        if clusters[i].len() == 1 {
            format!("l_{}", clusters[i].first().unwrap())
        } else {
            format!("{prefix}{i}")
        }
    };
    let vertices = (0..clusters.len()).map(name).collect();
    let arcs = parents.iter().enumerate().filter_map(|(i, p)| p.map(|p| (name(p), name(i)))).collect();
    let labels = h.ground.iter().map(|x| (format!("l_{x}"), x.clone())).collect();
    (vertices, arcs, labels)
}

/// The unique phylogenetic tree whose cluster set is the hierarchy.
pub fn tree_from_hierarchy(h: &ClusterSystem) -> Result<PhyloTree, ClusterError> {
    if !h.is_hierarchy() {
        return Err(ClusterError::NotAHierarchy);
    }
    let (vertices, arcs, labels) = hierarchy_parts(h, "n");
    let graph = Digraph::from_parts(vertices, arcs, labels).expect("Hasse diagram of a hierarchy");
    Ok(PhyloTree::new(graph).expect("Hasse diagram of a hierarchy is a phylogenetic tree"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum P1Violation {
    /// A label of `X` whose singleton is missing.
    MissingSingleton(String),
    /// Two overlapping clusters below a common maximal cluster.
    Overlap { maximal: Cluster, first: Cluster, second: Cluster },
}

/// Verdicts for the three conditions characterising arboreal cluster systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P123Report {
    pub p1: Option<P1Violation>,
    /// Components of the intersection graph of maximal clusters when it
    /// is disconnected.
    pub p2: Option<Vec<Vec<Cluster>>>,
    /// Two maximal clusters whose non-empty intersection is not a cluster.
    pub p3: Option<(Cluster, Cluster)>,
}

impl P123Report {
    pub fn all_hold(&self) -> bool {
        self.p1.is_none() && self.p2.is_none() && self.p3.is_none()
    }

    /// Names of the violated properties.
    pub fn violated(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.p1.is_some() {
            out.push("P1");
        }
        if self.p2.is_some() {
            out.push("P2");
        }
        if self.p3.is_some() {
            out.push("P3");
        }
        out
    }
}

pub fn check_p123(c: &ClusterSystem) -> P123Report {
    let maximal = c.maximal();
    let p1 = c.missing_singleton().map(P1Violation::MissingSingleton).or_else(|| {
        maximal.iter().find_map(|m| {
            c.restrict(m)
                .overlap()
                .map(|(first, second)| P1Violation::Overlap { maximal: (*m).clone(), first, second })
        })
    });
    let graph = IntersectionGraph::new(maximal.iter().copied());
    let components = graph.components();
    let p2 = (components.len() > 1)
        .then(|| components.iter().map(|comp| comp.iter().map(|&i| graph.vertices[i].clone()).collect()).collect());
    let mut p3 = None;
    'outer: for (i, a) in maximal.iter().enumerate() {
        for b in &maximal[i + 1..] {
            let meet: Cluster = a.intersection(b).cloned().collect();
            if !meet.is_empty() && !c.contains(&meet) {
                p3 = Some(((*a).clone(), (*b).clone()));
                break 'outer;
            }
        }
    }
    P123Report { p1, p2, p3 }
}

/// Editable arc list used while grafting trees together.
#[derive(Clone, Debug)]
struct Draft {
    arcs: BTreeSet<(String, String)>,
    labels: BTreeMap<String, String>,
    hybrids: usize,
}

impl Draft {
    fn graph(&self) -> Digraph {
        Digraph::from_parts(
            Vec::<&str>::new(),
            self.arcs.iter().map(|(t, h)| (t.as_str(), h.as_str())),
            self.labels.iter().map(|(v, l)| (v.as_str(), l.as_str())),
        )
        .expect("drafts stay acyclic")
    }

    fn leaf_labels(&self) -> Cluster {
        self.labels.values().cloned().collect()
    }
}

struct Reconstruction<'a> {
    trees: Vec<(Cluster, ClusterSystem)>,
    system: &'a ClusterSystem,
}

impl Reconstruction<'_> {
    fn new(system: &ClusterSystem) -> Reconstruction<'_> {
        let trees = system.maximal().into_iter().map(|m| (m.clone(), system.restrict(m))).collect();
        Reconstruction { trees, system }
    }

    fn start(&self) -> Draft {
        let (vertices, arcs, labels) = hierarchy_parts(&self.trees[0].1, "v0_");
        let mut draft = Draft { arcs: arcs.into_iter().collect(), labels: labels.into_iter().collect(), hybrids: 0 };
        if draft.arcs.is_empty() {
            // a single-leaf maximal cluster; never a valid root but keep the leaf
            draft.labels = BTreeMap::from([(vertices[0].clone(), self.trees[0].0.first().unwrap().clone())]);
        }
        draft
    }

    /// Trees that overlap the draft, with the shared cluster.
    fn eligible(&self, draft: &Draft, done: &[bool]) -> Vec<(usize, Cluster)> {
        let present = draft.leaf_labels();
        (0..self.trees.len())
            .filter(|&k| !done[k])
            .filter_map(|k| {
                let meet: Cluster = self.trees[k].0.intersection(&present).cloned().collect();
                (!meet.is_empty()).then_some((k, meet))
            })
            .collect()
    }

    /// Arcs of the draft whose subdivision yields a vertex with cluster
    /// `d`; the first is the in-arc of the unique indegree-one vertex.
    fn attachment_arcs(&self, draft: &Draft, d: &Cluster) -> Result<Vec<(String, String)>, String> {
        let g = draft.graph();
        let clusters = g.clusters();
        let holders: Vec<usize> = g.vertices().filter(|&v| clusters[v] == *d).collect();
        let base: Vec<usize> = holders.iter().copied().filter(|&v| g.indegree(v) == 1).collect();
        if base.len() != 1 {
            if holders.iter().any(|&v| g.indegree(v) == 0) {
                return Err(format!("cluster {} sits at a root", show(d)));
            }
            return Err(format!("{} is not a cluster below a tree vertex", show(d)));
        }
        let mut arcs = vec![(g.name(g.parents(base[0])[0]).to_owned(), g.name(base[0]).to_owned())];
        for &w in &holders {
            for &p in g.parents(w) {
                let arc = (g.name(p).to_owned(), g.name(w).to_owned());
                if !arcs.contains(&arc) {
                    arcs.push(arc);
                }
            }
        }
        Ok(arcs)
    }

    /// Grafts tree `k` onto the draft through a new hybrid on `arc`.
    fn graft(&self, draft: &Draft, k: usize, d: &Cluster, arc: &(String, String)) -> Result<Draft, String> {
        let (m, sub) = &self.trees[k];
        if d == m {
            return Err(format!("maximal cluster {} is covered by earlier trees", show(m)));
        }
        if !sub.contains(d) {
            return Err(format!("{} is not a cluster of the tree on {}", show(d), show(m)));
        }
        let (_, tree_arcs, tree_labels) = hierarchy_parts(sub, &format!("v{k}_"));
        let attach = if d.len() == 1 { format!("l_{}", d.first().unwrap()) } else {
            let clusters: Vec<&Cluster> = sub.clusters.iter().collect();
            format!("v{k}_{}", clusters.iter().position(|c| *c == d).unwrap())
        };
        // vertices of the tree strictly below the attachment point are dropped
        let below: BTreeSet<String> = {
            let mut set = BTreeSet::new();
            let mut stack = vec![attach.clone()];
            while let Some(v) = stack.pop() {
                for (t, h) in &tree_arcs {
                    if *t == v && set.insert(h.clone()) {
                        stack.push(h.clone());
                    }
                }
            }
            set
        };
        let mut next = draft.clone();
        let hybrid = format!("h{}", next.hybrids);
        next.hybrids += 1;
        next.arcs.remove(arc);
        next.arcs.insert((arc.0.clone(), hybrid.clone()));
        next.arcs.insert((hybrid.clone(), arc.1.clone()));
        for (t, h) in tree_arcs {
            if below.contains(&h) || t == attach {
                continue;
            }
            let h = if h == attach { hybrid.clone() } else { h };
            next.arcs.insert((t, h));
        }
        for (v, l) in tree_labels {
            if !d.contains(&l) {
                next.labels.insert(v, l);
            }
        }
        Ok(next)
    }

    fn finish(&self, draft: &Draft) -> Result<Network, String> {
        let network = Network::from_digraph(draft.graph()).map_err(|e: NetworkError| e.to_string())?;
        if cluster_system(&network) != *self.system {
            return Err("the grafted network has a different cluster system".into());
        }
        Ok(network)
    }

    /// Deterministic construction: least eligible tree, base arc.
    fn canonical(&self) -> Result<Network, String> {
        let mut draft = self.start();
        let mut done = vec![false; self.trees.len()];
        done[0] = true;
        for _ in 1..self.trees.len() {
            let eligible = self.eligible(&draft, &done);
            let (k, d) = eligible.into_iter().next().ok_or("maximal clusters do not overlap")?;
            let arcs = self.attachment_arcs(&draft, &d)?;
            draft = self.graft(&draft, k, &d, &arcs[0])?;
            done[k] = true;
        }
        self.finish(&draft)
    }

    fn variants(&self, draft: &Draft, done: &mut [bool], out: &mut Vec<Network>, cap: usize) {
        if out.len() >= cap {
            return;
        }
        if done.iter().all(|&x| x) {
            if let Ok(n) = self.finish(draft) {
                out.push(n);
            }
            return;
        }
        for (k, d) in self.eligible(draft, done) {
            let Ok(arcs) = self.attachment_arcs(draft, &d) else { continue };
            for arc in arcs {
                let Ok(next) = self.graft(draft, k, &d, &arc) else { continue };
                done[k] = true;
                self.variants(&next, done, out, cap);
                done[k] = false;
            }
        }
    }
}

fn require_p123(c: &ClusterSystem) -> Result<(), ClusterError> {
    let report = check_p123(c);
    if report.all_hold() {
        Ok(())
    } else {
        Err(ClusterError::PropertiesViolated(report.violated().join(",")))
    }
}

/// Builds an arboreal network with cluster system `c`, one root per
/// maximal cluster. Trees are attached in order of their sorted label
/// lists, always subdividing the arc above the unique tree vertex that
/// carries the shared cluster.
pub fn arboreal_from_clusters(c: &ClusterSystem) -> Result<Network, ClusterError> {
    require_p123(c)?;
    Reconstruction::new(c).canonical().map_err(ClusterError::NotRealizable)
}

/// Every arboreal network reachable by varying the attachment order and
/// the subdivided arc, pairwise inequivalent. Stops after `cap` raw
/// constructions.
pub fn reconstruction_variants(c: &ClusterSystem, cap: usize) -> Result<Vec<Network>, ClusterError> {
    require_p123(c)?;
    let r = Reconstruction::new(c);
    let mut raw = Vec::new();
    let mut done = vec![false; r.trees.len()];
    done[0] = true;
    // the first tree is fixed; starting elsewhere only renames vertices
    r.variants(&r.start(), &mut done, &mut raw, cap);
    if raw.is_empty() {
        return Err(ClusterError::NotRealizable("no attachment order succeeds".into()));
    }
    let mut distinct: Vec<Network> = Vec::new();
    for n in raw {
        if !distinct.iter().any(|d| d.is_equivalent(&n).unwrap_or(false)) {
            distinct.push(n);
        }
    }
    Ok(distinct)
}

fn meet(a: &Cluster, b: &Cluster) -> Cluster {
    a.intersection(b).cloned().collect()
}

/// Whether every arboreal network with cluster system `c` is equivalent:
/// no three maximal clusters pairwise meet in the same non-empty set.
///
/// Such a triple is what a bad arc leaves behind, and a network without
/// bad arcs is the only realisation of its clusters.
pub fn is_uniquely_determined(c: &ClusterSystem) -> Result<bool, ClusterError> {
    require_p123(c)?;
    let maximal = c.maximal();
    for (i, a) in maximal.iter().enumerate() {
        for (j, b) in maximal.iter().enumerate().skip(i + 1) {
            let ab = meet(a, b);
            if ab.is_empty() {
                continue;
            }
            if maximal.iter().enumerate().any(|(k, d)| k != i && k != j && meet(a, d) == ab && meet(b, d) == ab) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The stronger test that no two overlapping maximal clusters meet a third
/// one in the same set. It implies uniqueness but is not necessary: two
/// maximal clusters may share more with each other than with the first.
pub fn no_repeated_meet(c: &ClusterSystem) -> Result<bool, ClusterError> {
    require_p123(c)?;
    let maximal = c.maximal();
    for (i, a) in maximal.iter().enumerate() {
        for (j, b) in maximal.iter().enumerate() {
            if i == j || a.is_disjoint(b) {
                continue;
            }
            let ab = meet(a, b);
            if maximal.iter().enumerate().any(|(k, d)| k != i && k != j && meet(a, d) == ab) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Arcs whose both ends are hybrids, as name pairs.
pub fn bad_arcs(network: &Network) -> Vec<(String, String)> {
    network
        .arcs()
        .filter(|&(u, v)| network.is_hybrid(u) && network.is_hybrid(v))
        .map(|(u, v)| (network.name(u).to_owned(), network.name(v).to_owned()))
        .collect()
}

/// Contracts the bad arcs one at a time in sorted order.
pub fn collapse_bad_arcs(network: &Network) -> Digraph {
    let mut graph = network.graph().clone();
    // a contracted class is named by its topmost member
    let mut alias: BTreeMap<String, String> = BTreeMap::new();
    let resolve = |alias: &BTreeMap<String, String>, v: &str| {
        let mut v = v.to_owned();
        while let Some(a) = alias.get(&v) {
            v = a.clone();
        }
        v
    };
    for (t, h) in bad_arcs(network) {
        let (t, h) = (resolve(&alias, &t), resolve(&alias, &h));
        if t == h {
            continue;
        }
        graph = graph.contract_arcs(&[(t.as_str(), h.as_str())]).expect("bad arcs join unlabelled vertices");
        let survivor = if graph.index_of(&t).is_some() { t.clone() } else { h.clone() };
        for v in [t, h] {
            if v != survivor {
                alias.insert(v, survivor.clone());
            }
        }
    }
    graph
}

/// Whether two arboreal networks with the same cluster system are both
/// forest-based or both not. They need not be: a hybrid whose parents are
/// two hybrids with no other child blocks every base forest, while the
/// chain of hybrids with the same clusters may have one.
pub fn same_clusters_transfer(n1: &Network, n2: &Network) -> Result<bool, ClusterError> {
    if !n1.is_arboreal() || !n2.is_arboreal() {
        return Err(ClusterError::PreconditionViolated("both networks must be arboreal".into()));
    }
    if cluster_system(n1) != cluster_system(n2) {
        return Err(ClusterError::PreconditionViolated("cluster systems differ".into()));
    }
    let a = arboreal_forest_based(n1)?.is_forest_based();
    let b = arboreal_forest_based(n2)?.is_forest_based();
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cl(labels: &str) -> Cluster {
        labels.chars().map(|c| c.to_string()).collect()
    }

    fn system(members: &[&str]) -> ClusterSystem {
        ClusterSystem::from_clusters(members.iter().map(|m| cl(m))).unwrap()
    }

    #[test]
    fn hierarchy_round_trip() {
        let h = system(&["a", "b", "c", "d", "ab", "abc", "abcd"]);
        assert!(h.is_hierarchy());
        let t = tree_from_hierarchy(&h).unwrap();
        assert_eq!(t.cluster_set(), *h.clusters());
        assert_eq!(t.to_newick(), "(((a,b),c),d);");
        assert!(!system(&["a", "b", "c", "ab", "bc", "abc"]).is_hierarchy());
    }

    #[test]
    fn two_cherries_sharing_a_leaf() {
        let c = system(&["a", "b", "c", "d", "ab", "abc", "cd"]);
        assert!(check_p123(&c).all_hold());
        let n = arboreal_from_clusters(&c).unwrap();
        assert_eq!(n.root_count(), 2);
        assert!(n.is_arboreal());
        assert_eq!(cluster_system(&n), c);
        assert!(is_uniquely_determined(&c).unwrap());
    }

    #[test]
    fn triangle_of_pairs_is_not_realisable() {
        let c = system(&["a", "b", "c", "ab", "bc", "ac"]);
        assert!(check_p123(&c).all_hold());
        assert!(matches!(arboreal_from_clusters(&c), Err(ClusterError::NotRealizable(_))));
    }

    #[test]
    fn property_witnesses() {
        let disconnected = system(&["a", "b", "c", "d", "ab", "cd"]);
        let r = check_p123(&disconnected);
        assert_eq!(r.violated(), vec!["P2"]);
        let no_meet = system(&["a", "b", "c", "d", "abc", "bcd"]);
        assert_eq!(check_p123(&no_meet).violated(), vec!["P3"]);
        let missing = ClusterSystem::new(cl("abc"), [cl("a"), cl("b"), cl("ab")]).unwrap();
        assert_eq!(check_p123(&missing).p1, Some(P1Violation::MissingSingleton("c".into())));
    }

    #[test]
    fn shared_singleton_gives_several_variants() {
        let c = system(&["a", "b", "c", "d", "ac", "bc", "cd"]);
        assert!(!is_uniquely_determined(&c).unwrap());
        let variants = reconstruction_variants(&c, 1000).unwrap();
        assert!(variants.len() > 1);
        let collapsed: Vec<Digraph> = variants.iter().map(collapse_bad_arcs).collect();
        for g in &collapsed[1..] {
            assert!(collapsed[0].is_equivalent(g).unwrap());
        }
    }

    #[test]
    fn larger_shared_meet_is_still_unique() {
        // {c,d} meets both other maximal clusters in {c}, but those two share {c,e}
        let c = system(&["c", "d", "e", "f", "g", "cd", "ce", "cef", "ceg"]);
        assert!(!no_repeated_meet(&c).unwrap());
        assert!(is_uniquely_determined(&c).unwrap());
        assert_eq!(reconstruction_variants(&c, 1000).unwrap().len(), 1);
    }

    #[test]
    fn equal_clusters_with_different_forest_status() {
        let net = |arcs: &[(&str, &str)]| {
            Network::builder().arcs(arcs.iter().copied()).leaves(["a", "b", "c", "d", "e"]).build().unwrap()
        };
        let fork = net(&[
            ("r1", "a"), ("r1", "h0"), ("r2", "b"), ("r2", "h0"), ("r3", "c"), ("r3", "h2"),
            ("r4", "d"), ("r4", "h2"), ("h0", "h1"), ("h2", "h1"), ("h1", "e"),
        ]);
        let chain = net(&[
            ("r1", "a"), ("r1", "x1"), ("r2", "b"), ("r2", "x1"), ("x1", "x2"), ("r3", "c"),
            ("r3", "x2"), ("x2", "x3"), ("r4", "d"), ("r4", "x3"), ("x3", "e"),
        ]);
        assert_eq!(cluster_system(&fork), cluster_system(&chain));
        assert!(!arboreal_forest_based(&fork).unwrap().is_forest_based());
        assert!(arboreal_forest_based(&chain).unwrap().is_forest_based());
        assert_eq!(same_clusters_transfer(&fork, &chain), Ok(false));
        assert!(collapse_bad_arcs(&fork).is_equivalent(&collapse_bad_arcs(&chain)).unwrap());
    }
}
