//! Independent brute-force deciders, a seeded network generator and an
//! exhaustive enumerator of small binary networks.

mod brute;
mod enumerate;
mod generate;

use thiserror::Error;

pub use brute::{
    brute_force_base_forests, brute_force_forest_based, brute_force_forest_certificate, brute_force_proper,
    brute_force_tree_based, MAX_BRUTE_FORCE_ARCS,
};
pub use enumerate::{enumerate_binary_networks, EnumerationLimits};
pub use generate::{random_network, Bias, GenError, GenParams, REJECTION_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} arcs exceed the brute-force limit of {MAX_BRUTE_FORCE_ARCS}")]
    TooLarge(usize),
    #[error("proper forest-based is defined for two or more roots only")]
    SingleRoot,
}
