//! Threshold sweep: one certified integral partition per threshold value.
//!
//! For a d-regular graph on n vertices and each p in 1..=n-d-1, a greedy move
//! loop on complement-side degree conditions runs to a fixed point (A_p, B_p):
//! every x in B has at least p complement-neighbors in A and every x in A has
//! at least n-d-p complement-neighbors in B. Each fixed point is a q-internal
//! partition of the graph itself with q d = |A_p| - p, and sizes obey
//! p <= |A_p| <= p + d. A jump of 3 or more between consecutive sizes is a
//! gap: some intermediate integral threshold got skipped.
//!
//! Termination certificate: with cut_c the complement cut, the quantity
//! `cut_c - (n-d-p) |A| - p |B|` rises by at least one per move and is
//! bounded, which the loop asserts move by move.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::partition::{Partition, Ratio};
use crate::search::SearchError;

/// Warm start (default) reuses the previous fixed point as p advances;
/// cold start rebuilds from the empty side each time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SweepMode {
    #[default]
    WarmStart,
    ColdStart,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    pub p: usize,
    pub side_a: VertexSet,
    pub size_a: usize,
    /// `q d = size_a - p`, the certified integral threshold numerator.
    pub q_times_d: usize,
    /// The certified ratio; `None` when `q d` degenerates to 0 or d, which
    /// only happens on disconnected inputs.
    pub q: Option<Ratio>,
}

impl SweepEntry {
    pub fn partition(&self, n: usize) -> Partition {
        Partition::new(self.side_a, n).expect("sweep side within graph")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GapEntry {
    pub p: usize,
    pub prev_size: usize,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepResult {
    pub n: usize,
    pub degree: usize,
    pub entries: Vec<SweepEntry>,
    pub gaps: Vec<GapEntry>,
    pub moves: u64,
}

impl SweepResult {
    /// Number of distinct side sizes over the sweep.
    pub fn distinct_sizes(&self) -> usize {
        let mut sizes: Vec<usize> = self.entries.iter().map(|e| e.size_a).collect();
        sizes.sort_unstable();
        sizes.dedup();
        sizes.len()
    }
}

/// Runs the sweep over every admissible threshold with warm starts.
pub fn threshold_sweep(g: &Graph) -> Result<SweepResult, SearchError> {
    threshold_sweep_with_mode(g, SweepMode::WarmStart)
}

/// Sweep with an explicit start mode (cold start exists for experiments).
pub fn threshold_sweep_with_mode(g: &Graph, mode: SweepMode) -> Result<SweepResult, SearchError> {
    let Some(d) = g.regular_degree() else {
        return Err(SearchError::NotRegular);
    };
    let n = g.n();
    if n <= d + 1 {
        return Err(SearchError::DegenerateRange { n, d });
    }
    let dd = n - d - 1; // complement degree
    let cg = g.complement();

    let mut mask_a: u64 = 0;
    // cnt_a[v] = complement-neighbors of v inside A.
    let mut cnt_a: Vec<usize> = vec![0; n];
    let mut entries = Vec::with_capacity(dd);
    let mut total_moves = 0u64;

    for p in 1..=dd {
        if mode == SweepMode::ColdStart {
            mask_a = 0;
            cnt_a.fill(0);
        }
        total_moves += run_moves(&cg, n, d, p, &mut mask_a, &mut cnt_a)?;

        let size_a = mask_a.count_ones() as usize;
        if size_a < p || size_a > p + d {
            return Err(SearchError::InvariantViolation(format!(
                "sweep size |A_{p}| = {size_a} outside [{p}, {}]",
                p + d
            )));
        }
        let q_times_d = size_a - p;
        let q = (q_times_d > 0 && q_times_d < d)
            .then(|| Ratio::new(q_times_d as u64, d as u64).expect("0 < qd < d"));
        entries.push(SweepEntry { p, side_a: VertexSet::new(mask_a), size_a, q_times_d, q });
    }

    let gaps = collect_gaps(&entries);
    Ok(SweepResult { n, degree: d, entries, gaps, moves: total_moves })
}

/// Greedy move loop for one threshold. Picks the lowest-index violating
/// vertex, checking side B before side A, and asserts the certificate rises
/// by at least one per move.
fn run_moves(
    cg: &Graph,
    n: usize,
    d: usize,
    p: usize,
    mask_a: &mut u64,
    cnt_a: &mut [usize],
) -> Result<u64, SearchError> {
    let dd = n - d - 1;
    let mut moves = 0u64;
    // Generous safety cap; the rising certificate bounds the true count.
    let move_cap = (n as u64 + 1) * (n as u64 * dd as u64 + 1);

    loop {
        // Fixed point: x in B needs cnt_a[x] >= p; x in A needs
        // d_B~(x) = dd - cnt_a[x] >= n - d - p, i.e. cnt_a[x] <= p - 1.
        let mut candidate: Option<(usize, bool)> = None;
        for v in 0..n {
            let in_a = *mask_a >> v & 1 == 1;
            if !in_a && cnt_a[v] < p {
                candidate = Some((v, false));
                break;
            }
        }
        if candidate.is_none() {
            for v in 0..n {
                let in_a = *mask_a >> v & 1 == 1;
                if in_a && dd - cnt_a[v] < n - d - p {
                    candidate = Some((v, true));
                    break;
                }
            }
        }
        let Some((v, from_a)) = candidate else {
            return Ok(moves);
        };

        // Certificate delta, from the move conditions; must be >= 1.
        let delta: i64 = if from_a {
            2 * cnt_a[v] as i64 - dd as i64 + (n - d - p) as i64 - p as i64
        } else {
            dd as i64 - 2 * cnt_a[v] as i64 - (n - d - p) as i64 + p as i64
        };
        if delta < 1 {
            return Err(SearchError::InvariantViolation(format!(
                "sweep certificate rose by {delta} < 1 at p={p}, vertex {v}"
            )));
        }

        *mask_a ^= 1u64 << v;
        let shift: isize = if from_a { -1 } else { 1 };
        let mut t = cg.adj_row(v);
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            cnt_a[w] = (cnt_a[w] as isize + shift) as usize;
        }
        moves += 1;
        if moves > move_cap {
            return Err(SearchError::InvariantViolation(format!(
                "sweep move cap exceeded at p={p}"
            )));
        }
    }
}

fn collect_gaps(entries: &[SweepEntry]) -> Vec<GapEntry> {
    entries
        .windows(2)
        .filter(|w| w[1].size_a as i64 - w[0].size_a as i64 >= 3)
        .map(|w| GapEntry { p: w[1].p, prev_size: w[0].size_a, size: w[1].size_a })
        .collect()
}

/// All size jumps of at least 3 between consecutive thresholds. An empty list
/// certifies that every integral threshold between the endpoint entries was
/// realized by some entry.
pub fn gap_report(sweep: &SweepResult) -> Vec<GapEntry> {
    collect_gaps(&sweep.entries)
}
