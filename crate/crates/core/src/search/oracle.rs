//! Exhaustive oracle for q-internal partitions, plus exact-size variants
//! used by the duality checks.

use crate::graph::{Graph, VertexSet};
use crate::partition::{classify, Partition, Ratio};
use crate::search::bipartition::{BipartitionDfs, LeafAction, Requirement};
use crate::search::{SearchOutcome, SearchStats};

fn internal_thresholds(g: &Graph, q: Ratio) -> (Vec<u32>, Vec<u32>) {
    let co = q.complement();
    let thr_a = g.vertices().map(|v| q.ceil_times(g.degree(v) as u64) as u32).collect();
    let thr_b = g.vertices().map(|v| co.ceil_times(g.degree(v) as u64) as u32).collect();
    (thr_a, thr_b)
}

fn external_thresholds(g: &Graph, q: Ratio) -> (Vec<u32>, Vec<u32>) {
    // Same numbers; the requirement points at the opposite side instead.
    internal_thresholds(g, q)
}

/// Searches every nontrivial partition for a q-internal one.
///
/// Enumeration is a vertex-by-vertex DFS; a branch dies when a decided vertex
/// can no longer reach its own-side threshold even if all undecided vertices
/// join it. For q = 1/2 the predicate is side-symmetric, so only side
/// assignments with vertex 0 in A are visited.
///
/// `Found` comes with a witness that classifies q-internal; `ExhaustedNone`
/// certifies that no q-internal partition exists.
pub fn find_internal_exhaustive(g: &Graph, q: Ratio, max_nodes: u64) -> SearchOutcome {
    let (thr_a, thr_b) = internal_thresholds(g, q);
    let mut dfs = BipartitionDfs::new(g, thr_a, thr_b, Requirement::OwnSide);
    dfs.force_v0_a = q == Ratio::ONE_HALF;
    dfs.min_size_a = 1;
    dfs.max_size_a = g.n() - 1;
    dfs.max_nodes = max_nodes;

    run_to_outcome(g, q, dfs)
}

/// As the oracle, but restricted to partitions with `|A| = q n` exactly.
///
/// Returns `ExhaustedNone` immediately when `q n` is not an integer.
pub fn find_exact_internal(g: &Graph, q: Ratio, max_nodes: u64) -> SearchOutcome {
    let Some(k) = exact_size(g, q) else {
        return SearchOutcome::exhausted(SearchStats::default());
    };
    let (thr_a, thr_b) = internal_thresholds(g, q);
    let mut dfs = BipartitionDfs::new(g, thr_a, thr_b, Requirement::OwnSide);
    dfs.force_v0_a = q == Ratio::ONE_HALF && 2 * k == g.n();
    dfs.min_size_a = k.max(1);
    dfs.max_size_a = k.min(g.n() - 1);
    dfs.max_nodes = max_nodes;

    run_to_outcome(g, q, dfs)
}

/// Finds an exact q-external partition with `|A| = size_a`.
///
/// The orientation convention is the usual one: side `A` carries `q`, side
/// `B` carries `1-q`.
pub fn find_exact_external(g: &Graph, q: Ratio, size_a: usize, max_nodes: u64) -> SearchOutcome {
    let (thr_a, thr_b) = external_thresholds(g, q);
    let mut dfs = BipartitionDfs::new(g, thr_a, thr_b, Requirement::OppositeSide);
    dfs.force_v0_a = q == Ratio::ONE_HALF && 2 * size_a == g.n();
    dfs.min_size_a = size_a.max(1);
    dfs.max_size_a = size_a.min(g.n().saturating_sub(1));
    dfs.max_nodes = max_nodes;

    run_to_outcome_external(g, q, dfs)
}

fn exact_size(g: &Graph, q: Ratio) -> Option<usize> {
    let n = g.n() as u128;
    let prod = q.num() as u128 * n;
    (prod % q.den() as u128 == 0).then(|| (prod / q.den() as u128) as usize)
}

fn run_to_outcome(g: &Graph, q: Ratio, dfs: BipartitionDfs<'_>) -> SearchOutcome {
    let mut witness = None;
    let result = dfs.run(|mask| {
        witness = Some(mask);
        LeafAction::Stop
    });
    let stats = SearchStats { nodes: result.nodes, moves: 0 };
    match witness {
        Some(mask) => {
            let p = Partition::new(VertexSet::new(mask), g.n()).expect("mask within graph");
            debug_assert!(classify(g, &p, q).unwrap().flags.q_internal);
            SearchOutcome::found(p, stats)
        }
        None if result.budget_hit => SearchOutcome::out_of_budget(stats),
        None => SearchOutcome::exhausted(stats),
    }
}

fn run_to_outcome_external(g: &Graph, q: Ratio, dfs: BipartitionDfs<'_>) -> SearchOutcome {
    let mut witness = None;
    let result = dfs.run(|mask| {
        witness = Some(mask);
        LeafAction::Stop
    });
    let stats = SearchStats { nodes: result.nodes, moves: 0 };
    match witness {
        Some(mask) => {
            let p = Partition::new(VertexSet::new(mask), g.n()).expect("mask within graph");
            debug_assert!(classify(g, &p, q).unwrap().flags.q_external);
            SearchOutcome::found(p, stats)
        }
        None if result.budget_hit => SearchOutcome::out_of_budget(stats),
        None => SearchOutcome::exhausted(stats),
    }
}
