//! Text formats: the line-oriented network format, Newick trees and
//! forests, cluster lists, certificates and DOT export.
//!
//! A network file holds one statement per line:
//!
//! ```text
//! # a cherry
//! arc r a
//! arc r b
//! leaf a x
//! leaf b y
//! ```
//!
//! Identifiers match `[A-Za-z0-9_]+`. Statements may come in any order;
//! printing sorts arcs and then leaves, which is the canonical form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::clusters::{Cluster, ClusterError, ClusterSystem};
use crate::digraph::{Digraph, DigraphError};
use crate::forest::ForestCertificate;
use crate::network::{Network, NetworkError, VertexKind};
use crate::trees::{PhyloForest, PhyloTree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Cluster(#[from] ClusterError),
}

impl IoError {
    fn syntax(line: usize, message: impl Into<String>) -> Self {
        IoError::Syntax { line, message: message.into() }
    }
}

fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// Non-blank, non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

type Parts = (Vec<(String, String)>, Vec<(String, String)>);

fn parse_parts(text: &str) -> Result<Parts, IoError> {
    let mut arcs = Vec::new();
    let mut leaves = Vec::new();
    for (line, content) in content_lines(text) {
        let words: Vec<&str> = content.split_whitespace().collect();
        let target = match words.first() {
            Some(&"arc") => &mut arcs,
            Some(&"leaf") => &mut leaves,
            _ => return Err(IoError::syntax(line, format!("expected `arc` or `leaf`, found `{content}`"))),
        };
        if words.len() != 3 {
            return Err(IoError::syntax(line, format!("`{}` takes two identifiers", words[0])));
        }
        if let Some(bad) = words[1..].iter().find(|w| !is_identifier(w)) {
            return Err(IoError::syntax(line, format!("`{bad}` is not an identifier")));
        }
        target.push((words[1].to_owned(), words[2].to_owned()));
    }
    Ok((arcs, leaves))
}

/// Reads the network format without checking the network axioms.
pub fn parse_digraph(text: &str) -> Result<Digraph, IoError> {
    let (arcs, leaves) = parse_parts(text)?;
    Ok(Digraph::from_parts(Vec::<String>::new(), arcs, leaves)?)
}

pub fn parse_network(text: &str) -> Result<Network, IoError> {
    Ok(Network::from_digraph(parse_digraph(text)?)?)
}

/// Canonical text of a digraph: sorted `arc` lines, then sorted `leaf` lines.
pub fn print_digraph(graph: &Digraph) -> String {
    let mut arcs: Vec<(&str, &str)> = graph.arcs().map(|(t, h)| (graph.name(t), graph.name(h))).collect();
    arcs.sort_unstable();
    let mut leaves: Vec<(&str, &str)> = graph.labelled_vertices().map(|(v, l)| (graph.name(v), l)).collect();
    leaves.sort_unstable();
    let mut out = String::new();
    for (t, h) in arcs {
        let _ = writeln!(out, "arc {t} {h}");
    }
    for (v, l) in leaves {
        let _ = writeln!(out, "leaf {v} {l}");
    }
    out
}

pub fn print_network(network: &Network) -> String {
    print_digraph(network.graph())
}

struct NewickParser<'a> {
    text: &'a [u8],
    pos: usize,
    arcs: Vec<(String, String)>,
    labels: Vec<(String, String)>,
    internal: usize,
}

impl NewickParser<'_> {
    fn error(&self, message: &str) -> IoError {
        IoError::syntax(1, format!("{message} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.text.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn name(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.text.get(self.pos).is_some_and(|&b| b.is_ascii_alphanumeric() || b == b'_' || b == b'.') {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.text[start..self.pos]).into_owned()
    }

    fn branch_length(&mut self) -> Result<(), IoError> {
        if self.peek() == Some(b':') {
            self.pos += 1;
            let len = self.name();
            if len.parse::<f64>().is_err() {
                return Err(self.error("malformed branch length"));
            }
        }
        Ok(())
    }

    /// Parses one subtree and returns the name of its top vertex.
    fn subtree(&mut self) -> Result<String, IoError> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            self.internal += 1;
            let me = format!("#{}", self.internal);
            loop {
                let child = self.subtree()?;
                self.arcs.push((me.clone(), child));
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error("expected `,` or `)`")),
                }
            }
            // internal node names are ignored
            self.name();
            self.branch_length()?;
            Ok(me)
        } else {
            let label = self.name();
            if label.is_empty() {
                return Err(self.error("expected a leaf label"));
            }
            self.branch_length()?;
            self.labels.push((label.clone(), label.clone()));
            Ok(label)
        }
    }
}

/// Reads one Newick tree. Internal vertices are named `n1`, `n2`, … with
/// the prefix extended by underscores if it collides with a label.
pub fn parse_newick(text: &str) -> Result<Digraph, IoError> {
    let mut p = NewickParser { text: text.as_bytes(), pos: 0, arcs: Vec::new(), labels: Vec::new(), internal: 0 };
    let top = p.subtree()?;
    if p.peek() != Some(b';') {
        return Err(p.error("expected `;`"));
    }
    p.pos += 1;
    if p.peek().is_some() {
        return Err(p.error("trailing text"));
    }
    let labels: BTreeSet<&str> = p.labels.iter().map(|(l, _)| l.as_str()).collect();
    let mut prefix = String::from("n");
    while labels.iter().any(|l| l.strip_prefix(prefix.as_str()).is_some_and(|r| r.bytes().all(|b| b.is_ascii_digit()))) {
        prefix.push('_');
    }
    let rename = |v: &str| match v.strip_prefix('#') {
        Some(i) => format!("{prefix}{i}"),
        None => v.to_owned(),
    };
    let arcs: Vec<(String, String)> = p.arcs.iter().map(|(t, h)| (rename(t), rename(h))).collect();
    Ok(Digraph::from_parts(vec![rename(&top)], arcs, p.labels.clone())?)
}

pub fn parse_newick_tree(text: &str) -> Result<PhyloTree, IoError> {
    Ok(PhyloTree::new(parse_newick(text)?)?)
}

/// A single-rooted tree network from Newick.
pub fn parse_newick_network(text: &str) -> Result<Network, IoError> {
    Ok(Network::from_digraph(parse_newick(text)?)?)
}

/// One Newick tree per line.
pub fn parse_forest(text: &str) -> Result<PhyloForest, IoError> {
    let trees = content_lines(text)
        .map(|(line, content)| {
            parse_newick_tree(content).map_err(|e| match e {
                IoError::Syntax { message, .. } => IoError::Syntax { line, message },
                other => other,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PhyloForest::new(trees)?)
}

pub fn print_forest(forest: &PhyloForest) -> String {
    forest.to_newick()
}

/// One cluster per line as comma-separated labels.
pub fn parse_clusters(text: &str) -> Result<ClusterSystem, IoError> {
    let mut clusters = Vec::new();
    for (line, content) in content_lines(text) {
        let cluster: Cluster = content.split(',').map(|l| l.trim().to_owned()).collect();
        if let Some(bad) = cluster.iter().find(|l| !is_identifier(l)) {
            return Err(IoError::syntax(line, format!("`{bad}` is not a label")));
        }
        clusters.push(cluster);
    }
    Ok(ClusterSystem::from_clusters(clusters)?)
}

pub fn print_clusters(system: &ClusterSystem) -> String {
    let mut lines: Vec<String> = system.clusters().iter().map(|c| c.iter().cloned().collect::<Vec<_>>().join(",")).collect();
    lines.sort();
    lines.into_iter().map(|l| l + "\n").collect()
}

/// Retained arcs as `keep` lines and the rest as `contact` lines.
pub fn print_certificate(network: &Network, cert: &ForestCertificate) -> String {
    let mut lines: Vec<String> = network
        .arcs()
        .map(|(t, h)| {
            let kind = if cert.is_retained(t, h) { "keep" } else { "contact" };
            format!("{kind} {} {}", network.name(t), network.name(h))
        })
        .collect();
    lines.sort();
    lines.into_iter().map(|l| l + "\n").collect()
}

/// Reads [`print_certificate`] output; the certificate is not verified.
pub fn parse_certificate(network: &Network, text: &str) -> Result<ForestCertificate, IoError> {
    let mut retained = Vec::new();
    for (line, content) in content_lines(text) {
        let words: Vec<&str> = content.split_whitespace().collect();
        let [kind @ ("keep" | "contact"), t, h] = words[..] else {
            return Err(IoError::syntax(line, format!("expected `keep` or `contact` with two vertices, found `{content}`")));
        };
        let (Some(t), Some(h)) = (network.index_of(t), network.index_of(h)) else {
            return Err(IoError::syntax(line, "unknown vertex"));
        };
        if kind == "keep" {
            retained.push((t, h));
        }
    }
    Ok(ForestCertificate::from_retained(network, retained))
}

const PALETTE: [&str; 8] = ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT text of a network. With a certificate, vertices are coloured by
/// component and contact arcs are dashed.
pub fn export_dot(network: &Network, cert: Option<&ForestCertificate>) -> String {
    let mut out = String::from("digraph network {\n  node [fontname=\"Helvetica\"];\n");
    let mut by_name: BTreeMap<&str, usize> = BTreeMap::new();
    for v in network.vertices() {
        by_name.insert(network.name(v), v);
    }
    for (&name, &v) in &by_name {
        let mut attrs = vec![match network.kind(v) {
            VertexKind::Leaf => format!("shape=plaintext, label={}", quote(network.label(v).unwrap_or(name))),
            VertexKind::Hybrid => "shape=box".to_owned(),
            VertexKind::Root => "shape=doublecircle".to_owned(),
            VertexKind::TreeVertex => "shape=circle".to_owned(),
        }];
        if let Some(c) = cert {
            attrs.push(format!("color={}", quote(PALETTE[c.component_of(v) % PALETTE.len()])));
        }
        let _ = writeln!(out, "  {} [{}];", quote(name), attrs.join(", "));
    }
    let mut arcs: Vec<(usize, usize)> = network.arcs().collect();
    arcs.sort_by_key(|&(t, h)| (network.name(t), network.name(h)));
    for (t, h) in arcs {
        let style = match cert {
            Some(c) if !c.is_retained(t, h) => " [style=dashed]",
            Some(c) => &format!(" [color={}]", quote(PALETTE[c.component_of(t) % PALETTE.len()])),
            None => "",
        };
        let _ = writeln!(out, "  {} -> {}{style};", quote(network.name(t)), quote(network.name(h)));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cherry_round_trip() {
        let n = parse_network("leaf b y\n# comment\narc r b\n\narc r a\nleaf a x\n").unwrap();
        assert_eq!(n.labels().collect::<Vec<_>>(), ["x", "y"]);
        assert_eq!(print_network(&n), "arc r a\narc r b\nleaf a x\nleaf b y\n");
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        assert_eq!(parse_network("arc r a\narc r\n").unwrap_err(), IoError::syntax(2, "`arc` takes two identifiers"));
        assert!(matches!(parse_network("arc r a-b"), Err(IoError::Syntax { line: 1, .. })));
        assert!(matches!(parse_network("edge r a"), Err(IoError::Syntax { line: 1, .. })));
    }

    #[test]
    fn root_with_one_child_is_rejected() {
        let e = parse_network("arc r a\nleaf a x").unwrap_err();
        assert!(matches!(e, IoError::Network(NetworkError::RootOutdegreeOne { .. })));
    }

    #[test]
    fn newick_trees() {
        let t = parse_newick_tree("((b:1.5,c)int,a);").unwrap();
        assert_eq!(t.to_newick(), "(a,(b,c));");
        let clash = parse_newick_network("(n1,(n2,x));").unwrap();
        assert!(clash.index_of("n_1").is_some());
        assert!(parse_newick_tree("(a,b").is_err());
        assert!(parse_newick_tree("(a,b);x").is_err());
    }

    #[test]
    fn forest_lines() {
        let f = parse_forest("(a,b);\n# single\nc;\n").unwrap();
        assert_eq!(print_forest(&f), "(a,b);\nc;\n");
        assert!(matches!(parse_forest("(a,b);\n(c,;\n"), Err(IoError::Syntax { line: 2, .. })));
    }

    #[test]
    fn cluster_lines() {
        let c = parse_clusters("a,b\na\nb\nc\n").unwrap();
        assert_eq!(print_clusters(&c), "a\na,b\nb\nc\n");
    }
}
