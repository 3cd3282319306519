//! Peeling refinement toward internal partitions of even-degree regular
//! graphs: repeatedly move any vertex with more than d/2 opposite-side
//! neighbors out of the side that is not yet d/2-cohesive.
//!
//! Each move shrinks the cut by at least 2, so the loop terminates either
//! with both sides d/2-cohesive (an internal partition) or with one side
//! swallowed whole.

use crate::graph::{Graph, VertexSet};
use crate::partition::Partition;
use crate::search::mincut::{min_cut_fixed_size, MinCutMode};
use crate::search::{SearchError, SearchOutcome, SearchStats};

/// Refines `start` to an internal partition or exhausts it.
///
/// Requires a d-regular graph with even d and a nontrivial start. The moved
/// vertex is the lowest-index violator, side B scanned before side A.
pub fn refine_to_internal(g: &Graph, start: &Partition) -> Result<SearchOutcome, SearchError> {
    let Some(d) = g.regular_degree() else {
        return Err(SearchError::NotRegular);
    };
    if d % 2 != 0 {
        return Err(SearchError::OddDegree(d));
    }
    if start.n() != g.n() {
        return Err(SearchError::Partition(crate::partition::PartitionError::DimensionMismatch {
            partition_n: start.n(),
            graph_n: g.n(),
        }));
    }
    if start.is_trivial() {
        return Err(SearchError::TrivialStart);
    }

    let n = g.n();
    let half = d / 2;
    let mut mask_a = start.side_a().mask();
    // cnt_a[v] = neighbors of v inside A.
    let mut cnt_a: Vec<usize> =
        (0..n).map(|v| (g.adj_row(v) & mask_a).count_ones() as usize).collect();
    let mut moves = 0u64;
    let mut cut: i64 = start
        .side_a()
        .iter()
        .map(|v| (g.adj_row(v) & !mask_a).count_ones() as i64)
        .sum();

    loop {
        if mask_a == 0 || mask_a == g.full_mask() {
            return Ok(SearchOutcome::exhausted(SearchStats { nodes: 0, moves }));
        }

        // A violator has outdegree > d/2, equivalently indegree < d/2.
        // For v in B the outdegree is its count of A-neighbors.
        let mut candidate: Option<(usize, bool)> = None;
        for v in 0..n {
            if mask_a >> v & 1 == 0 && cnt_a[v] > half {
                candidate = Some((v, false));
                break;
            }
        }
        if candidate.is_none() {
            for v in 0..n {
                if mask_a >> v & 1 == 1 && cnt_a[v] < half {
                    candidate = Some((v, true));
                    break;
                }
            }
        }
        let Some((v, from_a)) = candidate else {
            // Both sides are d/2-cohesive: internal.
            let p = Partition::new(VertexSet::new(mask_a), n).expect("mask within graph");
            return Ok(SearchOutcome::found(p, SearchStats { nodes: 0, moves }));
        };

        let outdeg =
            if from_a { d - cnt_a[v] } else { cnt_a[v] } as i64;
        mask_a ^= 1u64 << v;
        let shift: isize = if from_a { -1 } else { 1 };
        let mut t = g.adj_row(v);
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            cnt_a[w] = (cnt_a[w] as isize + shift) as usize;
        }
        moves += 1;

        // Moving an outdegree-o vertex changes the cut by d - 2o <= -2.
        cut += d as i64 - 2 * outdeg;
        debug_assert!(d as i64 - 2 * outdeg <= -2);
        debug_assert!(cut >= 0);
    }
}

/// Deterministic default start: the exact minimum-cut near-bisection when the
/// enumeration is cheap enough, otherwise the seeded swap-descent one.
pub fn default_refine_start(g: &Graph, seed: u64) -> Result<Partition, SearchError> {
    const EXACT_MASK_LIMIT: u64 = 4_000_000;
    let k = g.n() / 2;
    let exact = min_cut_fixed_size(g, k, MinCutMode::Exact, EXACT_MASK_LIMIT);
    match exact {
        Ok((p, _)) => Ok(p),
        Err(SearchError::Budget { .. }) => {
            Ok(min_cut_fixed_size(g, k, MinCutMode::SwapDescent { seed }, 0)?.0)
        }
        Err(e) => Err(e),
    }
}

/// Refinement from the default start.
pub fn refine_with_default_start(g: &Graph, seed: u64) -> Result<SearchOutcome, SearchError> {
    let start = default_refine_start(g, seed)?;
    refine_to_internal(g, &start)
}
