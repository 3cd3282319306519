//! Exhaustive enumeration of labeled regular graphs by backtracking on
//! degree-constrained edge sets. Census backend for the small-order claims.

use crate::graph::{Graph, GraphError};

/// Default order cap for the enumeration guard.
pub const ENUMERATION_ORDER_CAP: usize = 14;

/// Streams every labeled `d`-regular simple graph on `n` vertices exactly once.
///
/// Yields nothing when `n * d` is odd. Uses the default desk-scale order cap;
/// see [`enumerate_regular_with_cap`] to override it.
pub fn enumerate_regular(n: usize, d: usize) -> Result<RegularGraphs, GraphError> {
    enumerate_regular_with_cap(n, d, ENUMERATION_ORDER_CAP)
}

/// As [`enumerate_regular`] with an explicit order cap.
pub fn enumerate_regular_with_cap(
    n: usize,
    d: usize,
    cap: usize,
) -> Result<RegularGraphs, GraphError> {
    if n == 0 || n > cap {
        return Err(GraphError::EnumerationGuard { n, cap });
    }
    if d >= n {
        return Err(GraphError::InfeasibleDegree { n, d });
    }
    Ok(RegularGraphs::new(n, d))
}

/// Iterator over labeled regular graphs, lexicographic in each vertex's
/// chosen neighbor set.
pub struct RegularGraphs {
    n: usize,
    adj: Vec<u64>,
    residual: Vec<u32>,
    /// One frame per processed vertex, in vertex order.
    frames: Vec<Frame>,
    /// Next vertex to process; frames.len() vertices are already fixed.
    done: bool,
    parity_empty: bool,
}

struct Frame {
    vertex: usize,
    /// Candidate vertex ids (all above `vertex`, residual > 0 at frame entry).
    cands: Vec<u8>,
    /// Positions into `cands` of the currently chosen subset; empty when the
    /// vertex needed no further edges.
    idx: Vec<u8>,
}

impl RegularGraphs {
    fn new(n: usize, d: usize) -> Self {
        RegularGraphs {
            n,
            adj: vec![0; n],
            residual: vec![d as u32; n],
            frames: Vec::with_capacity(n),
            done: false,
            parity_empty: n * d % 2 == 1,
        }
    }

    fn apply(&mut self, frame: &Frame) {
        for &i in &frame.idx {
            let w = frame.cands[i as usize] as usize;
            self.adj[frame.vertex] |= 1 << w;
            self.adj[w] |= 1 << frame.vertex;
            self.residual[w] -= 1;
        }
        self.residual[frame.vertex] = 0;
    }

    fn unapply(&mut self, frame: &Frame) {
        let mut r = 0;
        for &i in &frame.idx {
            let w = frame.cands[i as usize] as usize;
            self.adj[frame.vertex] &= !(1 << w);
            self.adj[w] &= !(1 << frame.vertex);
            self.residual[w] += 1;
            r += 1;
        }
        self.residual[frame.vertex] = r;
    }

    /// Every still-open vertex must be able to place its residual edges among
    /// later open vertices it is not yet adjacent to.
    fn feasible_after(&self, vertex: usize) -> bool {
        let mut open = 0u64;
        for w in (vertex + 1)..self.n {
            if self.residual[w] > 0 {
                open |= 1 << w;
            }
        }
        for w in (vertex + 1)..self.n {
            if self.residual[w] as usize
                > (open & !self.adj[w] & !(1 << w)).count_ones() as usize
            {
                return false;
            }
        }
        true
    }

    /// Advance `idx` to the next r-combination of `cands`; false when exhausted.
    fn next_combination(idx: &mut [u8], ncands: usize) -> bool {
        let r = idx.len();
        if r == 0 {
            return false;
        }
        let mut i = r;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if (idx[i] as usize) < ncands - (r - i) {
                idx[i] += 1;
                for j in (i + 1)..r {
                    idx[j] = idx[j - 1] + 1;
                }
                return true;
            }
        }
    }

    /// Pushes a frame for the next vertex with its first candidate subset.
    /// Returns false when no subset exists (caller backtracks).
    fn push_vertex(&mut self) -> bool {
        let vertex = self.frames.len();
        let r = self.residual[vertex] as usize;
        let cands: Vec<u8> = ((vertex + 1)..self.n)
            .filter(|&w| self.residual[w] > 0 && !self.has(vertex, w))
            .map(|w| w as u8)
            .collect();
        if cands.len() < r {
            return false;
        }
        let idx: Vec<u8> = (0..r as u8).collect();
        let frame = Frame { vertex, cands, idx };
        self.apply(&frame);
        self.frames.push(frame);
        true
    }

    fn has(&self, u: usize, w: usize) -> bool {
        self.adj[u] >> w & 1 == 1
    }
}

impl Iterator for RegularGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done || self.parity_empty {
            return None;
        }

        // Resume: if a full assignment was yielded last time, backtrack first.
        let mut advancing = !self.frames.is_empty() && self.frames.len() == self.n;

        loop {
            if advancing {
                // Move the deepest frame to its next subset, popping when spent.
                loop {
                    let Some(mut frame) = self.frames.pop() else {
                        self.done = true;
                        return None;
                    };
                    self.unapply(&frame);
                    if Self::next_combination(&mut frame.idx, frame.cands.len()) {
                        self.apply(&frame);
                        self.frames.push(frame);
                        break;
                    }
                }
                advancing = false;
            } else if self.frames.len() < self.n {
                if !self.push_vertex() {
                    advancing = true;
                    continue;
                }
            }

            let depth = self.frames.len();
            if !self.feasible_after(depth - 1) {
                advancing = true;
                continue;
            }
            if depth == self.n {
                debug_assert!(self.residual.iter().all(|&r| r == 0));
                return Some(Graph::from_adjacency_unchecked(self.adj.clone()));
            }
        }
    }
}
