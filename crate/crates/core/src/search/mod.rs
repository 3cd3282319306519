//! Search procedures: the exhaustive oracle, fixed-size minimum cuts and
//! their structural audit, potential-function ascent, the threshold sweep,
//! and the peeling refinement.
//!
//! Everything here is deterministic given its inputs (and seed, where one
//! exists); tie-breaking is lowest-vertex-index-first throughout.

pub(crate) mod bipartition;
mod mincut;
mod oracle;
mod potential;
mod refine;
mod sweep;

pub mod audit;

pub use audit::{min_cut_cohesion_audit, CohesionAudit, CohesionCase};
pub use mincut::{min_cut_fixed_size, MinCutMode};
pub use oracle::{find_exact_external, find_exact_internal, find_internal_exhaustive};
pub use potential::find_q_external_potential;
pub use refine::{default_refine_start, refine_to_internal, refine_with_default_start};
pub use sweep::{gap_report, threshold_sweep, GapEntry, SweepEntry, SweepMode, SweepResult};

use serde::Serialize;
use thiserror::Error;

use crate::partition::Partition;

/// Default node budget for the exhaustive searches.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("degree {0} is odd; this procedure is stated for even degree")]
    OddDegree(usize),
    #[error("order {n} leaves no admissible threshold range (need n > d + 1, d = {d})")]
    DegenerateRange { n: usize, d: usize },
    #[error("side size {k} out of range for order {n}")]
    SideSizeOutOfRange { k: usize, n: usize },
    #[error("budget exceeded: {needed} nodes needed, {allowed} allowed")]
    Budget { needed: u64, allowed: u64 },
    #[error("starting partition is trivial")]
    TrivialStart,
    #[error(transparent)]
    Partition(#[from] crate::partition::PartitionError),
    #[error("audit violation at a minimum cut: {0}")]
    AuditViolation(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

/// Terminal status of a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    /// A partition satisfying the requested predicate was found.
    Found,
    /// The search space was exhausted; no such partition exists.
    ExhaustedNone,
    /// The node budget ran out before a conclusion.
    BudgetExceeded,
}

/// Node and move counters for regression tracking.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub moves: u64,
}

/// Outcome of a search: status, witness (when found) and counters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub partition: Option<Partition>,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub(crate) fn found(partition: Partition, stats: SearchStats) -> Self {
        SearchOutcome { status: SearchStatus::Found, partition: Some(partition), stats }
    }

    pub(crate) fn exhausted(stats: SearchStats) -> Self {
        SearchOutcome { status: SearchStatus::ExhaustedNone, partition: None, stats }
    }

    pub(crate) fn out_of_budget(stats: SearchStats) -> Self {
        SearchOutcome { status: SearchStatus::BudgetExceeded, partition: None, stats }
    }

    pub fn is_found(&self) -> bool {
        self.status == SearchStatus::Found
    }
}
