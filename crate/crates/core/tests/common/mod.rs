//! Definition-direct oracles shared by the integration suites. These stay
//! independent of the library's search paths: plain enumeration, no pruning.
//!
//! Each test binary uses its own slice of these helpers.
#![allow(dead_code)]

use inpart::graph::Graph;
use inpart::partition::Ratio;

/// Checks the q-internal definition directly on a side-A mask.
pub fn is_internal_mask(g: &Graph, mask: u64, q: Ratio) -> bool {
    let n = g.n();
    let full = g.full_mask();
    if mask == 0 || mask == full {
        return false;
    }
    let (num, den) = (q.num() as u128, q.den() as u128);
    (0..n).all(|v| {
        let in_a = mask >> v & 1 == 1;
        let own = if in_a { mask } else { !mask & full };
        let inside = (g.adj_row(v) & own).count_ones() as u128;
        let factor = if in_a { num } else { den - num };
        inside * den >= factor * g.degree(v) as u128
    })
}

/// Checks the q-external definition directly on a side-A mask.
pub fn is_external_mask(g: &Graph, mask: u64, q: Ratio) -> bool {
    let n = g.n();
    let full = g.full_mask();
    if mask == 0 || mask == full {
        return false;
    }
    let (num, den) = (q.num() as u128, q.den() as u128);
    (0..n).all(|v| {
        let in_a = mask >> v & 1 == 1;
        let opp = if in_a { !mask & full } else { mask };
        let outside = (g.adj_row(v) & opp).count_ones() as u128;
        let factor = if in_a { num } else { den - num };
        outside * den >= factor * g.degree(v) as u128
    })
}

/// No-pruning exhaustive search for a q-internal partition.
pub fn naive_find_internal(g: &Graph, q: Ratio) -> Option<u64> {
    let n = g.n();
    (1..(1u64 << n) - 1).find(|&mask| is_internal_mask(g, mask, q))
}

/// Counts labeled d-regular graphs on n vertices by filtering every edge
/// subset of K_n with exactly nd/2 edges.
pub fn brute_force_regular_count(n: usize, d: usize) -> u64 {
    if n * d % 2 == 1 {
        return 0;
    }
    let ne = n * (n - 1) / 2;
    let k = n * d / 2;
    if k > ne {
        return 0;
    }
    if k == 0 {
        return 1;
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    let mut count = 0u64;
    let mut mask: u64 = (1u64 << k) - 1;
    loop {
        let mut deg = [0u32; 16];
        let mut t = mask;
        while t != 0 {
            let e = t.trailing_zeros() as usize;
            t &= t - 1;
            deg[pairs[e].0] += 1;
            deg[pairs[e].1] += 1;
        }
        if deg[..n].iter().all(|&x| x == d as u32) {
            count += 1;
        }
        let c = mask & mask.wrapping_neg();
        let r = mask.wrapping_add(c);
        if r == 0 {
            break;
        }
        let next = (((r ^ mask) >> 2) / c) | r;
        if next >= 1u64 << ne {
            break;
        }
        mask = next;
    }
    count
}

/// The 10-vertex cubic graph with one bridge: two K4-minus-an-edge blocks,
/// each closed by an apex, apexes joined.
pub fn double_k4_bridged() -> Graph {
    let mut g = Graph::empty(10).unwrap();
    for (u, v) in [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1)] {
        g.add_edge(u, v).unwrap();
    }
    for (u, v) in [(5, 7), (5, 8), (6, 7), (6, 8), (7, 8), (9, 5), (9, 6)] {
        g.add_edge(u, v).unwrap();
    }
    g.add_edge(4, 9).unwrap();
    g
}

/// Deterministic (n, seed) schedule for sampled-criterion loops.
pub fn spread(i: usize, lo: usize, hi: usize) -> usize {
    lo + (i * 7919) % (hi - lo + 1)
}
