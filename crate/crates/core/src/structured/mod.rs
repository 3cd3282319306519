//! Structure-exploiting solvers: complement duality, closed forms for the
//! near-complete degree range, edge-coloring bisections, external-partition
//! censuses, and cubic bridge decomposition and recomposition.

mod bridge;
mod census;
mod closed_form;
mod coloring;
mod duality;

pub use bridge::{
    bridge_decompose_cubic, compose_bisection_across_bridge, BridgeDecomposition, BridgePart,
    DecomposeStep,
};
pub use census::{external_partition_census, has_external_bisection, CensusFilter, CensusReport};
pub use closed_form::{
    analyze_n_minus_4, bisection_from_matching, solve_n_minus_3, NMinus4Report, NMinus4Route,
};
pub use coloring::{bisection_from_two_colors, edge_color_cubic, ColorClass, EdgeColoring};
pub use duality::{complement_transfer, TransferDirection};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructuredError {
    #[error("degree precondition failed: expected {expected}, graph is {found}")]
    WrongDegree { expected: String, found: String },
    #[error("contract violated: {what}{}", .vertex.map(|v| format!(" (vertex {v})")).unwrap_or_default())]
    ContractViolation { what: String, vertex: Option<usize> },
    #[error("edge ({0}, {1}) is not present")]
    NoSuchEdge(usize, usize),
    #[error("edge ({0}, {1}) is not a bridge")]
    NotABridge(usize, usize),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("budget exceeded: {needed} nodes needed, {allowed} allowed")]
    Budget { needed: u64, allowed: u64 },
    #[error("construction inapplicable: {0}")]
    ConstructionInapplicable(String),
    #[error("decomposition invariant failed: {0}")]
    DecompositionInvariant(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
    #[error(transparent)]
    Partition(#[from] crate::partition::PartitionError),
    #[error(transparent)]
    Search(#[from] crate::search::SearchError),
}
