//! Forest-based multiply rooted phylogenetic networks.

pub mod budget;
pub mod classify;
pub mod clusters;
pub mod digraph;
pub mod forest;
pub mod io;
pub mod network;
pub mod oracles;
pub mod trees;
pub mod universal;

pub use budget::{Budget, ResourceExhausted};
pub use digraph::{Digraph, DigraphError};
pub use forest::*;
pub use network::{Network, NetworkBuilder, NetworkError, VertexKind};
pub use trees::{PhyloForest, PhyloTree, TreeError};
