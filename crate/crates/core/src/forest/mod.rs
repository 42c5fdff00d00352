//! Forest-based networks: exact deciders, certificates and the
//! structural characterisations via path partitions, colourings of
//! `Γ(N)` and the auxiliary graph of arboreal networks.

mod arboreal;
mod certificate;
mod embed;
mod gamma;
mod paths;
mod proper;

use thiserror::Error;

use crate::budget::ResourceExhausted;

pub use arboreal::{arboreal_forest_based, ArborealVerdict};
pub use certificate::{extract_base_forest, verify_certificate, CertificateDefect, ForestCertificate};
pub use embed::{is_based_on, is_based_on_with};
pub use gamma::{gamma_graph, omnians, GammaEdge, GammaGraph, OmniOption};
pub use paths::{decide_forest_based, decide_forest_based_with};
pub use proper::{
    decide_proper_forest_based, decide_proper_forest_based_with, decide_proper_two_rooted,
    decide_proper_two_rooted_with, ColoringCertificate, TwoRootedVerdict,
};

pub(crate) use paths::bottom_up_order;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForestError {
    #[error("forest-based networks need at least two leaves, found {0}")]
    TooFewLeaves(usize),
    #[error("proper forest-based is defined for two or more roots only")]
    SingleRoot,
    #[error("expected exactly two roots, found {0}")]
    NotTwoRooted(usize),
    #[error("the network is not arboreal")]
    NotArboreal,
    #[error("the forest and the network have different leaf sets")]
    LeafSetMismatch,
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(CertificateDefect),
    #[error(transparent)]
    ResourceExhausted(#[from] ResourceExhausted),
}
