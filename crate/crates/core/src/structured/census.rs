//! Exhaustive censuses of external partitions (the q = 1/2 case).
//!
//! Externality is side-symmetric, so partitions are counted as unordered
//! pairs: the enumeration pins vertex 0 into side A. Pruning mirrors the
//! internal oracle with the inequality pointing at the opposite side, plus a
//! size window: in a d-regular graph an external side of size s must satisfy
//! `s * ceil(d/2) <= d * (n - s)`, which caps the imbalance (3:2 for cubic).

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::partition::{Partition, Ratio};
use crate::search::bipartition::{BipartitionDfs, LeafAction, Requirement};
use crate::structured::StructuredError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CensusFilter {
    All,
    BisectionsOnly,
    UnevenOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub filter: CensusFilter,
    /// Number of unordered external partitions matching the filter.
    pub count: u64,
    pub first_witness: Option<Partition>,
    pub nodes: u64,
}

fn regular_size_window(g: &Graph) -> (usize, usize) {
    let n = g.n();
    match g.regular_degree() {
        Some(d) if d > 0 => {
            let half_up = d.div_ceil(2);
            // s * half_up <= d * (n - s)  =>  s <= d n / (d + half_up)
            let hi = d * n / (d + half_up);
            (n - hi, hi)
        }
        _ => (1, n.saturating_sub(1)),
    }
}

fn census_core(
    g: &Graph,
    filter: CensusFilter,
    max_nodes: u64,
    stop_at_first: bool,
) -> Result<CensusReport, StructuredError> {
    let n = g.n();
    let q = Ratio::ONE_HALF;
    let thr: Vec<u32> = g.vertices().map(|v| q.ceil_times(g.degree(v) as u64) as u32).collect();
    let mut dfs = BipartitionDfs::new(g, thr.clone(), thr, Requirement::OppositeSide);
    dfs.force_v0_a = true;

    let (lo, hi) = regular_size_window(g);
    match filter {
        CensusFilter::BisectionsOnly => {
            if n % 2 != 0 {
                return Ok(CensusReport { filter, count: 0, first_witness: None, nodes: 0 });
            }
            dfs.min_size_a = n / 2;
            dfs.max_size_a = n / 2;
        }
        CensusFilter::All | CensusFilter::UnevenOnly => {
            dfs.min_size_a = lo.max(1);
            dfs.max_size_a = hi.min(n.saturating_sub(1));
        }
    }
    dfs.max_nodes = max_nodes;

    let mut count = 0u64;
    let mut first_witness = None;
    let result = dfs.run(|mask| {
        if filter == CensusFilter::UnevenOnly && 2 * mask.count_ones() as usize == n {
            return LeafAction::Continue;
        }
        count += 1;
        if first_witness.is_none() {
            first_witness =
                Some(Partition::new(VertexSet::new(mask), n).expect("mask within graph"));
        }
        if stop_at_first {
            LeafAction::Stop
        } else {
            LeafAction::Continue
        }
    });

    if result.budget_hit {
        return Err(StructuredError::Budget { needed: result.nodes, allowed: max_nodes });
    }
    Ok(CensusReport { filter, count, first_witness, nodes: result.nodes })
}

/// Counts external partitions matching the filter, with a first witness.
pub fn external_partition_census(
    g: &Graph,
    filter: CensusFilter,
    max_nodes: u64,
) -> Result<CensusReport, StructuredError> {
    census_core(g, filter, max_nodes, false)
}

/// Early-stopping existence check for an external bisection.
pub fn has_external_bisection(
    g: &Graph,
    max_nodes: u64,
) -> Result<Option<Partition>, StructuredError> {
    Ok(census_core(g, CensusFilter::BisectionsOnly, max_nodes, true)?.first_witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, petersen};
    use crate::partition::classify;

    const BUDGET: u64 = 1 << 26;

    #[test]
    fn petersen_has_no_external_bisection() {
        let g = petersen();
        let r = external_partition_census(&g, CensusFilter::BisectionsOnly, BUDGET).unwrap();
        assert_eq!(r.count, 0);
        assert!(has_external_bisection(&g, BUDGET).unwrap().is_none());
    }

    #[test]
    fn petersen_does_have_external_partitions() {
        let r = external_partition_census(&petersen(), CensusFilter::All, BUDGET).unwrap();
        assert!(r.count > 0);
        let p = r.first_witness.unwrap();
        let rep = classify(&petersen(), &p, Ratio::ONE_HALF).unwrap();
        assert!(rep.flags.q_external);
    }

    #[test]
    fn k4_externals_are_exactly_its_bisections() {
        let g = complete(4).unwrap();
        let all = external_partition_census(&g, CensusFilter::All, BUDGET).unwrap();
        let bis = external_partition_census(&g, CensusFilter::BisectionsOnly, BUDGET).unwrap();
        let uneven = external_partition_census(&g, CensusFilter::UnevenOnly, BUDGET).unwrap();
        assert_eq!(all.count, bis.count);
        assert_eq!(uneven.count, 0);
        // K4: any 2|2 split gives each vertex 2 of 3 neighbors opposite.
        assert_eq!(bis.count, 3);
    }

    #[test]
    fn even_cycles_have_alternating_bisections() {
        let g = cycle(6).unwrap();
        let r = external_partition_census(&g, CensusFilter::BisectionsOnly, BUDGET).unwrap();
        assert!(r.count >= 1);
        let w = has_external_bisection(&g, BUDGET).unwrap().unwrap();
        let rep = classify(&g, &w, Ratio::ONE_HALF).unwrap();
        assert!(rep.flags.q_external && rep.flags.bisection);
    }

    #[test]
    fn odd_order_has_no_bisections_at_all() {
        let g = cycle(5).unwrap();
        let r = external_partition_census(&g, CensusFilter::BisectionsOnly, BUDGET).unwrap();
        assert_eq!((r.count, r.nodes), (0, 0));
    }
}
