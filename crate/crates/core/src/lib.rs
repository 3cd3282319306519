//! Solvers, verifiers, generators and censuses for internal and external
//! partitions of graphs.
//!
//! An *internal* partition splits the vertices into two nonempty sides so
//! that every vertex has at least half of its neighbors on its own side; an
//! *external* partition demands the same on the opposite side. The general
//! `q`-weighted forms replace "half" with exact rational thresholds `q d(x)`
//! and `(1 - q) d(x)`. This crate provides:
//!
//! - bitmask graphs up to 64 vertices, a graph6 codec, named generators, and
//!   labeled regular-graph enumeration ([`graph`], [`graph6`], [`generate`],
//!   [`enumerate`], [`random`], [`structure`], [`mis`]);
//! - exact rational partition classification and cohesion predicates
//!   ([`partition`]);
//! - search procedures: an exhaustive oracle, fixed-size minimum cuts with a
//!   structural audit, potential-function ascent for external partitions, a
//!   threshold sweep producing one certified partition per threshold, and a
//!   peeling refinement for even-degree regular graphs ([`search`]);
//! - structure-exploiting solvers: complement duality transfers, closed forms
//!   for degrees `n-2`/`n-3`/`n-4`, cubic edge coloring with two-color
//!   bisections, external-partition censuses, and bridge decomposition and
//!   recomposition for cubic graphs ([`structured`]).
//!
//! All threshold comparisons are integer cross-multiplications; no floating
//! point enters any predicate.

pub mod enumerate;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod mis;
pub mod partition;
pub mod random;
pub mod search;
pub mod structure;
pub mod structured;

pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use partition::{classify, p_core, Partition, PartitionError, PartitionFlags, PartitionReport, Ratio};
pub use search::{SearchOutcome, SearchStats, SearchStatus};
