//! Maximum independent set by branch and bound over bitmask candidate sets.

use crate::graph::{Graph, GraphError, VertexSet};

/// Order guard: beyond this the exponential search is refused.
pub const MIS_ORDER_LIMIT: usize = 40;

/// Returns a maximum independent set; its size is the independence number.
///
/// Deterministic: branches on the lowest-index vertex of maximum degree
/// within the candidate set, exclusion first.
pub fn max_independent_set(g: &Graph) -> Result<VertexSet, GraphError> {
    if g.n() > MIS_ORDER_LIMIT {
        return Err(GraphError::SearchGuard { n: g.n(), limit: MIS_ORDER_LIMIT });
    }
    let mut best = 0u64;
    let mut best_size = 0u32;
    branch(g, g.full_mask(), 0, 0, &mut best, &mut best_size);
    Ok(VertexSet::new(best))
}

fn branch(g: &Graph, cand: u64, cur: u64, cur_size: u32, best: &mut u64, best_size: &mut u32) {
    if cur_size + cand.count_ones() <= *best_size && *best_size > 0 {
        return;
    }
    if cand == 0 {
        if cur_size > *best_size {
            *best_size = cur_size;
            *best = cur;
        }
        return;
    }

    // Vertices with no candidate neighbors are free; take them all at once.
    let mut free = 0u64;
    let mut t = cand;
    while t != 0 {
        let v = t.trailing_zeros() as usize;
        t &= t - 1;
        if g.adj_row(v) & cand == 0 {
            free |= 1u64 << v;
        }
    }
    if free != 0 {
        branch(g, cand & !free, cur | free, cur_size + free.count_ones(), best, best_size);
        return;
    }

    let mut pivot = usize::MAX;
    let mut pivot_deg = 0;
    let mut t = cand;
    while t != 0 {
        let v = t.trailing_zeros() as usize;
        t &= t - 1;
        let deg = (g.adj_row(v) & cand).count_ones();
        if pivot == usize::MAX || deg > pivot_deg {
            pivot = v;
            pivot_deg = deg;
        }
    }

    let pbit = 1u64 << pivot;
    // Include the pivot (dropping its neighborhood), then exclude it.
    branch(g, cand & !pbit & !g.adj_row(pivot), cur | pbit, cur_size + 1, best, best_size);
    branch(g, cand & !pbit, cur, cur_size, best, best_size);
}
