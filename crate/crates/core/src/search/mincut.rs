//! Minimum cuts over partitions with a fixed side size: exact enumeration
//! and a deterministic 2-swap descent.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexSet};
use crate::partition::Partition;
use crate::search::SearchError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinCutMode {
    /// Global minimizer by enumerating all side-A masks of the given size.
    Exact,
    /// 2-swap local minimum from a seeded random start: terminates when no
    /// single x in A, y in B exchange reduces the cut.
    SwapDescent { seed: u64 },
}

/// Minimizes `|E(A, B)|` over all partitions with `|A| = k`.
///
/// Exact mode requires `C(n, k)` to fit in `max_nodes`. Ties break toward the
/// lexicographically smallest mask visited first.
pub fn min_cut_fixed_size(
    g: &Graph,
    k: usize,
    mode: MinCutMode,
    max_nodes: u64,
) -> Result<(Partition, usize), SearchError> {
    let n = g.n();
    if k == 0 || k >= n {
        return Err(SearchError::SideSizeOutOfRange { k, n });
    }
    match mode {
        MinCutMode::Exact => exact(g, k, max_nodes),
        MinCutMode::SwapDescent { seed } => Ok(swap_descent(g, k, seed)),
    }
}

pub(crate) fn cut_of_mask(g: &Graph, mask: u64) -> usize {
    let mut cut = 0usize;
    let mut t = mask;
    while t != 0 {
        let v = t.trailing_zeros() as usize;
        t &= t - 1;
        cut += (g.adj_row(v) & !mask).count_ones() as usize;
    }
    cut
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn exact(g: &Graph, k: usize, max_nodes: u64) -> Result<(Partition, usize), SearchError> {
    let n = g.n();
    let work = binomial(n, k);
    if work > max_nodes as u128 {
        return Err(SearchError::Budget { needed: work.min(u64::MAX as u128) as u64, allowed: max_nodes });
    }

    // For a perfect bisection the two orientations are equivalent; pinning
    // vertex 0 into A halves the enumeration.
    let pin = 2 * k == n;
    let mut best_mask = 0u64;
    let mut best_cut = usize::MAX;

    // Gosper's hack over all k-subsets of n bits, ascending.
    let limit: u64 = if n == 64 { u64::MAX } else { 1u64 << n };
    let mut mask: u64 = (1u64 << k) - 1;
    loop {
        if !(pin && mask & 1 == 0) {
            let cut = cut_of_mask(g, mask);
            if cut < best_cut {
                best_cut = cut;
                best_mask = mask;
            }
        }
        // Next k-subset. The add wraps to zero exactly on the final subset
        // (a contiguous run at the top of the word).
        let c = mask & mask.wrapping_neg();
        let r = mask.wrapping_add(c);
        if r == 0 {
            break;
        }
        let next = (((r ^ mask) >> 2) / c) | r;
        if n < 64 && next >= limit {
            break;
        }
        mask = next;
    }

    let p = Partition::new(VertexSet::new(best_mask), n).expect("mask within graph");
    Ok((p, best_cut))
}

fn swap_descent(g: &Graph, k: usize, seed: u64) -> (Partition, usize) {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Random initial k-subset via partial Fisher-Yates.
    let mut verts: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.gen_range(i..n);
        verts.swap(i, j);
    }
    let mut mask: u64 = verts[..k].iter().map(|&v| 1u64 << v).sum();

    // cnt_a[v] = neighbors of v inside A.
    let mut cnt_a: Vec<i32> = (0..n).map(|v| (g.adj_row(v) & mask).count_ones() as i32).collect();
    let mut cut = cut_of_mask(g, mask);

    loop {
        let mut best_delta = 0i32;
        let mut best_pair: Option<(usize, usize)> = None;
        for x in 0..n {
            if mask >> x & 1 == 0 {
                continue;
            }
            let dx = g.degree(x) as i32;
            for y in 0..n {
                if mask >> y & 1 == 1 {
                    continue;
                }
                let dy = g.degree(y) as i32;
                let adj_xy = i32::from(g.has_edge(x, y));
                // Cut change for swapping x (A->B) with y (B->A).
                let delta = (cnt_a[x] - (dx - cnt_a[x])) + ((dy - cnt_a[y]) - cnt_a[y])
                    + 2 * adj_xy;
                if delta < best_delta {
                    best_delta = delta;
                    best_pair = Some((x, y));
                }
            }
        }
        let Some((x, y)) = best_pair else {
            let p = Partition::new(VertexSet::new(mask), n).expect("mask within graph");
            return (p, cut);
        };

        // Apply the swap and maintain the inside counts.
        mask &= !(1u64 << x);
        mask |= 1u64 << y;
        let mut t = g.adj_row(x);
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            cnt_a[w] -= 1;
        }
        let mut t = g.adj_row(y);
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            cnt_a[w] += 1;
        }
        cut = (cut as i32 + best_delta) as usize;
        debug_assert_eq!(cut, cut_of_mask(g, mask));
    }
}
