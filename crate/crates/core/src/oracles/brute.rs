//! Exhaustive search over retained arc sets.
//!
//! Only arc sets in which every vertex keeps at most one incoming arc can
//! be forests, so the enumeration picks, per vertex, one of its in-arcs or
//! none, and hands every candidate to [`verify_certificate`].

use crate::forest::{extract_base_forest, verify_certificate, ForestCertificate};
use crate::network::Network;
use crate::trees::PhyloForest;

use super::OracleError;

pub const MAX_BRUTE_FORCE_ARCS: usize = 22;

/// Calls `visit` on every verified certificate until it returns `true`.
fn for_each_certificate(
    network: &Network,
    mut visit: impl FnMut(ForestCertificate) -> bool,
) -> Result<(), OracleError> {
    if network.arc_count() > MAX_BRUTE_FORCE_ARCS {
        return Err(OracleError::TooLarge(network.arc_count()));
    }
    let choosers: Vec<usize> = network.vertices().filter(|&v| !network.parents(v).is_empty()).collect();
    // choice[i] == 0 drops every in-arc, k > 0 keeps the k-th
    let mut choice = vec![0usize; choosers.len()];
    loop {
        let retained = choosers
            .iter()
            .zip(&choice)
            .filter(|(_, &k)| k > 0)
            .map(|(&v, &k)| (network.parents(v)[k - 1], v));
        let cert = ForestCertificate::from_retained(network, retained);
        if verify_certificate(network, &cert).is_ok() && visit(cert) {
            return Ok(());
        }
        let mut i = 0;
        while i < choosers.len() {
            choice[i] += 1;
            if choice[i] <= network.parents(choosers[i]).len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choosers.len() {
            return Ok(());
        }
    }
}

pub fn brute_force_forest_certificate(network: &Network) -> Result<Option<ForestCertificate>, OracleError> {
    let mut found = None;
    for_each_certificate(network, |c| {
        found = Some(c);
        true
    })?;
    Ok(found)
}

pub fn brute_force_forest_based(network: &Network) -> Result<bool, OracleError> {
    Ok(brute_force_forest_certificate(network)?.is_some())
}

/// Some certificate has exactly one component per root.
pub fn brute_force_proper(network: &Network) -> Result<bool, OracleError> {
    if network.root_count() < 2 {
        return Err(OracleError::SingleRoot);
    }
    let mut found = false;
    for_each_certificate(network, |c| {
        found = c.is_proper(network);
        found
    })?;
    Ok(found)
}

/// All base forests of the network, pairwise inequivalent.
pub fn brute_force_base_forests(network: &Network) -> Result<Vec<PhyloForest>, OracleError> {
    let mut out: Vec<PhyloForest> = Vec::new();
    for_each_certificate(network, |c| {
        let f = extract_base_forest(network, &c).expect("verified certificate");
        if !out.iter().any(|g| g.is_equivalent(&f)) {
            out.push(f);
        }
        false
    })?;
    Ok(out)
}

/// Single-root networks only: some choice of one in-arc per hybrid leaves
/// every non-leaf vertex with an outgoing arc.
pub fn brute_force_tree_based(network: &Network) -> Result<bool, OracleError> {
    let hybrids = network.hybrids();
    if hybrids.len() > MAX_BRUTE_FORCE_ARCS {
        return Err(OracleError::TooLarge(network.arc_count()));
    }
    for mask in 0u32..(1 << hybrids.len()) {
        let dropped: Vec<(usize, usize)> = hybrids
            .iter()
            .enumerate()
            .map(|(i, &h)| (network.parents(h)[((mask >> i) & 1) as usize], h))
            .collect();
        let ok = network.vertices().filter(|&v| !network.is_leaf(v)).all(|v| {
            network.children(v).iter().any(|&c| !dropped.contains(&(v, c)))
        });
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}
