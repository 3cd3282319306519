//! Structural audit of exact minimum cuts at a fixed side size.
//!
//! At a cut-minimizing partition with `|A| = k` of a `d`-regular graph, the
//! minimum indegrees `l` (over A) and `m` (over B) always satisfy
//! `l + m >= d - 1`, and the two admissible shapes are:
//!
//! - split case: `l + m >= d`, so A is l-cohesive and B is (d-l)-cohesive;
//! - deficit case: `l + m = d - 1`, in which case the minimum-indegree
//!   vertices of the two sides span a complete bipartite subgraph, and moving
//!   any one of them across raises the receiving side's cohesion by one.
//!
//! Anything else would contradict cut minimality and is reported as a
//! distinguished failure.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::partition::Partition;
use crate::search::mincut::{min_cut_fixed_size, MinCutMode};
use crate::search::SearchError;

/// Audit verdict for one `(graph, k)` pair at an exact minimizer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohesionAudit {
    pub k: usize,
    pub cut: usize,
    pub partition: Partition,
    /// Minimum indegree over side A / side B at the minimizer.
    pub min_indegree_a: usize,
    pub min_indegree_b: usize,
    pub case: CohesionCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CohesionCase {
    /// `l + m = d` with A l-cohesive and B m-cohesive.
    Split { l: usize, m: usize },
    /// `l + m = d - 1`; carries the tight vertex sets that form the complete
    /// bipartite witness.
    Deficit { l: usize, m: usize, tight_a: VertexSet, tight_b: VertexSet },
}

/// Computes an exact minimum cut at side size `k` and audits its cohesion
/// structure. Requires a regular graph.
pub fn min_cut_cohesion_audit(
    g: &Graph,
    k: usize,
    max_nodes: u64,
) -> Result<CohesionAudit, SearchError> {
    let Some(d) = g.regular_degree() else {
        return Err(SearchError::NotRegular);
    };
    let (partition, cut) = min_cut_fixed_size(g, k, MinCutMode::Exact, max_nodes)?;
    let a = partition.side_a();
    let b = partition.side_b();

    let min_in = |side: VertexSet| {
        side.iter().map(|v| g.degree_in(v, side)).min().expect("side is nonempty")
    };
    let l = min_in(a);
    let m = min_in(b);

    if l + m >= d {
        // Report the canonical split pair (l, d - l); B meets the larger bound.
        return Ok(CohesionAudit {
            k,
            cut,
            partition,
            min_indegree_a: l,
            min_indegree_b: m,
            case: CohesionCase::Split { l, m: d - l },
        });
    }
    if l + m != d - 1 {
        return Err(SearchError::AuditViolation(format!(
            "min indegrees l={l}, m={m} sum below d-1={} at k={k}",
            d - 1
        )));
    }

    let tight_a: VertexSet = a.iter().filter(|&v| g.degree_in(v, a) == l).collect();
    let tight_b: VertexSet = b.iter().filter(|&v| g.degree_in(v, b) == m).collect();

    // Tight vertices across the two sides must be pairwise adjacent.
    for x in tight_a.iter() {
        for y in tight_b.iter() {
            if !g.has_edge(x, y) {
                return Err(SearchError::AuditViolation(format!(
                    "deficit case: tight vertices {x} and {y} are not adjacent (k={k})"
                )));
            }
        }
    }

    // Transferring any tight vertex raises the receiving side's cohesion.
    for x in tight_a.iter() {
        let bx = b.with(x);
        if bx.iter().any(|v| g.degree_in(v, bx) < m + 1) {
            return Err(SearchError::AuditViolation(format!(
                "deficit case: B + {{{x}}} is not {}-cohesive (k={k})",
                m + 1
            )));
        }
    }
    for y in tight_b.iter() {
        let ay = a.with(y);
        if ay.iter().any(|v| g.degree_in(v, ay) < l + 1) {
            return Err(SearchError::AuditViolation(format!(
                "deficit case: A + {{{y}}} is not {}-cohesive (k={k})",
                l + 1
            )));
        }
    }

    Ok(CohesionAudit {
        k,
        cut,
        partition,
        min_indegree_a: l,
        min_indegree_b: m,
        case: CohesionCase::Deficit { l, m, tight_a, tight_b },
    })
}
