//! Potential-function ascent producing q-external partitions.
//!
//! The potential of a partition, with side A carrying q, is
//! `w(A,B) = |E(A,B)| - q * sum_{x in A} d(x) - (1-q) * sum_{x in B} d(x)`,
//! kept integral by scaling with the denominator of q. Moving a vertex whose
//! opposite-side count is below its threshold strictly increases `w`, and `w`
//! is bounded, so the ascent terminates; any local maximum is q-external:
//! dropping x from A changes `w` by `2 q d(x) - 2 d_B(x)` and adding x to A
//! changes it by `2 (1-q) d(x) - 2 d_A(x)`, so at a maximum every vertex
//! meets its opposite-side threshold.

use crate::graph::{Graph, VertexSet};
use crate::partition::{Partition, Ratio};
use crate::search::{SearchOutcome, SearchStats};

/// Hill-climbs single-vertex moves from `A = {0}` until no move increases the
/// scaled potential; the terminal partition is q-external.
///
/// The result is nontrivial whenever the graph has at least one edge (a
/// trivial partition always admits an improving move); isolated vertices
/// never move and simply stay where the start put them.
pub fn find_q_external_potential(g: &Graph, q: Ratio) -> SearchOutcome {
    let n = g.n();
    let num = q.num() as i128;
    let den = q.den() as i128;

    let mut mask_a: u64 = 1;
    // cnt_a[v] = neighbors of v in A.
    let mut cnt_a: Vec<i128> =
        (0..n).map(|v| (g.adj_row(v) & mask_a).count_ones() as i128).collect();

    let scaled_potential = |mask: u64| -> i128 {
        let mut acc = 0i128;
        for v in 0..n {
            let d = g.degree(v) as i128;
            if mask >> v & 1 == 1 {
                acc += den * (g.adj_row(v) & !mask).count_ones() as i128;
                acc -= num * d;
            } else {
                acc -= (den - num) * d;
            }
        }
        acc
    };

    let mut potential = scaled_potential(mask_a);
    let mut moves = 0u64;
    'ascending: loop {
        // Lowest-index improving vertex first: moving x out of A improves iff
        // d_B(x) < q d(x); moving x into A improves iff d_A(x) < (1-q) d(x).
        for v in 0..n {
            let d = g.degree(v) as i128;
            let in_a = mask_a >> v & 1 == 1;
            let improves = if in_a {
                den * (d - cnt_a[v]) < num * d
            } else {
                den * cnt_a[v] < (den - num) * d
            };
            if !improves {
                continue;
            }
            mask_a ^= 1u64 << v;
            let shift: i128 = if in_a { -1 } else { 1 };
            let mut t = g.adj_row(v);
            while t != 0 {
                let w = t.trailing_zeros() as usize;
                t &= t - 1;
                cnt_a[w] += shift;
            }
            moves += 1;
            if cfg!(debug_assertions) {
                let new_potential = scaled_potential(mask_a);
                debug_assert!(
                    new_potential > potential,
                    "ascent move must strictly increase the scaled potential"
                );
                potential = new_potential;
            }
            continue 'ascending;
        }
        break;
    }
    let _ = potential;

    let partition = Partition::new(VertexSet::new(mask_a), n).expect("mask in range");
    SearchOutcome::found(partition, SearchStats { nodes: 0, moves })
}
