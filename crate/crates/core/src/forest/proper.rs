//! Proper forest-based networks via colourings of `Γ(N)`.
//!
//! A colouring `σ` of roots and hybrids with `m` colours certifies a
//! proper base forest when roots get distinct colours, `σ` is proper on
//! `Γ(N)` plus one extension edge per omnian, and every hybrid is reached
//! from the root of its colour through hybrids of that colour only. The
//! last condition forces `σ(h)` to be the colour of `γ` of one of the two
//! parents of `h`, so the search picks a parent side per hybrid.

use std::collections::VecDeque;
use std::fmt;

use crate::budget::Budget;
use crate::network::Network;

use super::gamma::{gamma_graph, OmniOption};
use super::{ForestCertificate, ForestError};

/// A colouring of `R(N) ∪ H(N)` together with the chosen extension edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringCertificate {
    /// Colour per vertex; `None` for tree vertices and leaves.
    colors: Vec<Option<usize>>,
    extension: Vec<OmniOption>,
    root_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringDefect {
    Uncoloured(usize),
    ColourOutOfRange(usize),
    /// The edge of `Γ(N)` contributed by this hybrid is monochromatic.
    ImproperEdge(usize),
    /// The chosen extension for this omnian is missing or monochromatic.
    ExtensionViolated(usize),
    /// Two roots share a colour.
    RootsNotBijective,
    /// This hybrid is not reachable from its root through its colour.
    Unreachable(usize),
}

impl fmt::Display for ColoringDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Uncoloured(v) => write!(f, "vertex {v} has no colour"),
            Self::ColourOutOfRange(v) => write!(f, "vertex {v} has a colour outside 0..m"),
            Self::ImproperEdge(h) => write!(f, "edge of hybrid {h} is monochromatic"),
            Self::ExtensionViolated(v) => write!(f, "omnian {v} has no valid extension edge"),
            Self::RootsNotBijective => f.write_str("two roots share a colour"),
            Self::Unreachable(h) => write!(f, "hybrid {h} is not reachable within its colour"),
        }
    }
}

impl ColoringCertificate {
    pub fn new(colors: Vec<Option<usize>>, extension: Vec<OmniOption>, root_count: usize) -> Self {
        Self { colors, extension, root_count }
    }

    pub fn color(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Option<usize>] {
        &self.colors
    }

    /// One chosen edge per omnian.
    pub fn extension(&self) -> &[OmniOption] {
        &self.extension
    }

    pub fn root_count(&self) -> usize {
        self.root_count
    }

    /// Colour of `γ(v)` for any vertex.
    fn class_of(&self, network: &Network, v: usize) -> usize {
        self.colors[network.gamma(v)].expect("roots and hybrids are coloured")
    }

    /// Checks properness, the root bijection and colour-class reachability.
    pub fn check(&self, network: &Network) -> Result<(), ColoringDefect> {
        let m = self.root_count;
        for v in network.vertices().filter(|&v| network.is_root(v) || network.is_hybrid(v)) {
            match self.colors[v] {
                None => return Err(ColoringDefect::Uncoloured(v)),
                Some(c) if c >= m => return Err(ColoringDefect::ColourOutOfRange(v)),
                _ => {}
            }
        }
        let mut root_colours: Vec<usize> = network.roots().iter().map(|&r| self.colors[r].unwrap()).collect();
        root_colours.sort_unstable();
        root_colours.dedup();
        if root_colours.len() != network.root_count() || m != network.root_count() {
            return Err(ColoringDefect::RootsNotBijective);
        }
        let gamma = gamma_graph(network);
        for e in gamma.edges() {
            if self.colors[e.u] == self.colors[e.v] {
                return Err(ColoringDefect::ImproperEdge(e.hybrid));
            }
        }
        for (omnian, options) in gamma.omni_options() {
            let chosen = self.extension.iter().find(|o| o.omnian == *omnian);
            match chosen {
                Some(o) if options.contains(o) && self.colors[o.hybrid] != self.colors[o.other_gamma] => {}
                _ => return Err(ColoringDefect::ExtensionViolated(*omnian)),
            }
        }
        for c in 0..m {
            let root = network.roots().iter().copied().find(|&r| self.colors[r] == Some(c)).unwrap();
            let mut reached = vec![false; network.vertex_count()];
            reached[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in network.children(u) {
                    let enter = !network.is_hybrid(w) || self.colors[w] == Some(c);
                    if enter && !reached[w] {
                        reached[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            if let Some(&h) = network.hybrids().iter().find(|&&h| self.colors[h] == Some(c) && !reached[h]) {
                return Err(ColoringDefect::Unreachable(h));
            }
        }
        Ok(())
    }

    /// The colour-class subgraphs as a subdivision forest: an arc is kept
    /// when both ends have the same class.
    pub fn to_forest_certificate(&self, network: &Network) -> ForestCertificate {
        let class: Vec<usize> = network.vertices().map(|v| self.class_of(network, v)).collect();
        let retained = network.arcs().filter(|&(u, v)| class[u] == class[v]).collect();
        ForestCertificate::new(retained, class)
    }
}

/// Searches for a colouring certificate; `None` if `N` is not proper
/// forest-based.
pub fn decide_proper_forest_based_with(
    network: &Network,
    budget: &mut Budget,
) -> Result<Option<ColoringCertificate>, ForestError> {
    let m = network.root_count();
    if m < 2 {
        return Err(ForestError::SingleRoot);
    }
    let gamma = gamma_graph(network);
    let hybrids: Vec<usize> = network.topological_order().iter().copied().filter(|&v| network.is_hybrid(v)).collect();
    let mut position = vec![usize::MAX; network.vertex_count()];
    for (i, &h) in hybrids.iter().enumerate() {
        position[h] = i;
    }
    // omnians are checked once their last hybrid child is coloured
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); hybrids.len()];
    for (k, (_, options)) in gamma.omni_options().iter().enumerate() {
        let last = options.iter().map(|o| position[o.hybrid]).max().expect("omnians have children");
        due[last].push(k);
    }

    let mut colors = vec![None; network.vertex_count()];
    for (i, &r) in network.roots().iter().enumerate() {
        colors[r] = Some(i);
    }
    let mut search = ColourSearch { network, gamma: &gamma, hybrids: &hybrids, due: &due, colors };
    if !search.run(0, budget)? {
        return Ok(None);
    }
    let extension = gamma
        .omni_options()
        .iter()
        .map(|(_, options)| {
            *options
                .iter()
                .find(|o| search.colors[o.hybrid] != search.colors[o.other_gamma])
                .expect("checked during the search")
        })
        .collect();
    let cert = ColoringCertificate::new(search.colors, extension, m);
    debug_assert_eq!(cert.check(network), Ok(()));
    Ok(Some(cert))
}

/// [`decide_proper_forest_based_with`] under the default node budget.
pub fn decide_proper_forest_based(network: &Network) -> Result<Option<ColoringCertificate>, ForestError> {
    decide_proper_forest_based_with(network, &mut Budget::default())
}

struct ColourSearch<'a> {
    network: &'a Network,
    gamma: &'a super::GammaGraph,
    hybrids: &'a [usize],
    due: &'a [Vec<usize>],
    colors: Vec<Option<usize>>,
}

impl ColourSearch<'_> {
    fn run(&mut self, depth: usize, budget: &mut Budget) -> Result<bool, ForestError> {
        let Some(&h) = self.hybrids.get(depth) else {
            return Ok(true);
        };
        let parents = self.network.parents(h);
        let a = self.colors[self.network.gamma(parents[0])].expect("ancestors are coloured first");
        let b = self.colors[self.network.gamma(parents[1])].expect("ancestors are coloured first");
        if a == b {
            return Ok(false);
        }
        for c in [a, b] {
            budget.tick()?;
            self.colors[h] = Some(c);
            if self.omnians_satisfied(depth) && self.run(depth + 1, budget)? {
                return Ok(true);
            }
        }
        self.colors[h] = None;
        Ok(false)
    }

    fn omnians_satisfied(&self, depth: usize) -> bool {
        self.due[depth].iter().all(|&k| {
            self.gamma.omni_options()[k].1.iter().any(|o| self.colors[o.hybrid] != self.colors[o.other_gamma])
        })
    }
}

/// Outcome of the two-rooted decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoRootedVerdict {
    /// A bipartite omni-extension and its 2-colouring.
    Bipartite(ColoringCertificate),
    /// No omni-extension is bipartite. `cycle` is an odd cycle in `Γ(N)`
    /// plus `extension`, the first extension tried; `checked` counts the
    /// extensions refuted.
    OddCycle { extension: Vec<OmniOption>, cycle: Vec<usize>, checked: u64 },
}

impl TwoRootedVerdict {
    pub fn is_proper(&self) -> bool {
        matches!(self, Self::Bipartite(_))
    }
}

/// Enumerates minimal omni-extensions of `Γ(N)` looking for a bipartite one.
pub fn decide_proper_two_rooted_with(network: &Network, budget: &mut Budget) -> Result<TwoRootedVerdict, ForestError> {
    if network.root_count() != 2 {
        return Err(ForestError::NotTwoRooted(network.root_count()));
    }
    let gamma = gamma_graph(network);
    let options: Vec<&Vec<OmniOption>> = gamma.omni_options().iter().map(|(_, o)| o).collect();
    let base: Vec<(usize, usize)> = gamma.edges().iter().map(|e| (e.u, e.v)).collect();
    let mut choice = vec![0usize; options.len()];
    let mut first_failure = None;
    let mut checked = 0u64;
    loop {
        budget.tick()?;
        let extension: Vec<OmniOption> = options.iter().zip(&choice).map(|(o, &i)| o[i]).collect();
        let mut edges = base.clone();
        edges.extend(extension.iter().map(|o| (o.other_gamma, o.hybrid)));
        match two_colour(network.vertex_count(), gamma.vertices(), &edges) {
            Ok(side) => {
                let flip = side[network.roots()[0]] == Some(1);
                let colors = side.into_iter().map(|s| s.map(|c| c ^ usize::from(flip))).collect();
                return Ok(TwoRootedVerdict::Bipartite(ColoringCertificate::new(colors, extension, 2)));
            }
            Err(cycle) => {
                checked += 1;
                first_failure.get_or_insert((extension, cycle));
            }
        }
        // odometer over the per-omnian options
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            let (extension, cycle) = first_failure.expect("at least one extension is tried");
            return Ok(TwoRootedVerdict::OddCycle { extension, cycle, checked });
        }
    }
}

/// [`decide_proper_two_rooted_with`] under the default node budget.
pub fn decide_proper_two_rooted(network: &Network) -> Result<TwoRootedVerdict, ForestError> {
    decide_proper_two_rooted_with(network, &mut Budget::default())
}

/// BFS 2-colouring of the graph on `vertices`; on failure returns an odd
/// cycle as a closed vertex sequence (first vertex not repeated).
fn two_colour(n: usize, vertices: &[usize], edges: &[(usize, usize)]) -> Result<Vec<Option<usize>>, Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u == v {
            return Err(vec![u]);
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut side = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for &s in vertices {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                match side[w] {
                    None => {
                        side[w] = Some(1 - side[u].unwrap());
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(c) if Some(c) == side[u] => return Err(odd_cycle(u, w, &parent, &depth)),
                    _ => {}
                }
            }
        }
    }
    Ok(side)
}

fn odd_cycle(mut a: usize, mut b: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut left, mut right) = (Vec::new(), Vec::new());
    while a != b {
        if depth[a] >= depth[b] {
            left.push(a);
            a = parent[a];
        } else {
            right.push(b);
            b = parent[b];
        }
    }
    left.push(a);
    left.extend(right.into_iter().rev());
    left
}
