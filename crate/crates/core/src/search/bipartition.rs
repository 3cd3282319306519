//! Shared pruned DFS over two-sided vertex assignments.
//!
//! Vertices are decided in index order. A branch dies as soon as some decided
//! vertex can no longer reach its required neighbor count even if every
//! undecided neighbor lands favorably. The internal oracle and the external
//! censuses are thin wrappers differing only in which side the requirement
//! points at.

use crate::graph::Graph;

/// Which side a vertex's required neighbor count refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Requirement {
    /// `v` needs at least `thr(v)` neighbors on its own side.
    OwnSide,
    /// `v` needs at least `thr(v)` neighbors on the opposite side.
    OppositeSide,
}

/// What the leaf callback wants next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum LeafAction {
    Continue,
    Stop,
}

pub(crate) struct BipartitionDfs<'a> {
    g: &'a Graph,
    /// Required count when the vertex is placed in A / in B.
    thr_a: Vec<u32>,
    thr_b: Vec<u32>,
    requirement: Requirement,
    /// Pin vertex 0 to side A (valid when the predicate is side-symmetric).
    pub force_v0_a: bool,
    /// Inclusive window for the final size of side A.
    pub min_size_a: usize,
    pub max_size_a: usize,
    pub max_nodes: u64,
}

pub(crate) struct DfsResult {
    pub nodes: u64,
    pub budget_hit: bool,
}

impl<'a> BipartitionDfs<'a> {
    pub fn new(g: &'a Graph, thr_a: Vec<u32>, thr_b: Vec<u32>, requirement: Requirement) -> Self {
        BipartitionDfs {
            g,
            thr_a,
            thr_b,
            requirement,
            force_v0_a: false,
            min_size_a: 0,
            max_size_a: g.n(),
            max_nodes: u64::MAX,
        }
    }

    /// Runs the DFS, invoking `on_leaf` with each complete side-A mask that
    /// satisfies every requirement and the size window.
    pub fn run<F: FnMut(u64) -> LeafAction>(self, on_leaf: F) -> DfsResult {
        let n = self.g.n();
        if self.min_size_a > n || self.min_size_a > self.max_size_a {
            return DfsResult { nodes: 0, budget_hit: false };
        }
        let mut st = State {
            g: self.g,
            thr_a: &self.thr_a,
            thr_b: &self.thr_b,
            requirement: self.requirement,
            min_size_a: self.min_size_a,
            max_size_a: self.max_size_a,
            max_nodes: self.max_nodes,
            nodes: 0,
            budget_hit: false,
            stopped: false,
            cnt_a: vec![0; n],
            cnt_b: vec![0; n],
            undecided: (0..n).map(|v| self.g.degree(v) as u32).collect(),
            mask_a: 0,
            size_a: 0,
            on_leaf,
        };
        st.descend(0, true);
        if !self.force_v0_a {
            st.descend(0, false);
        }
        DfsResult { nodes: st.nodes, budget_hit: st.budget_hit }
    }
}

struct State<'a, F: FnMut(u64) -> LeafAction> {
    g: &'a Graph,
    thr_a: &'a [u32],
    thr_b: &'a [u32],
    requirement: Requirement,
    min_size_a: usize,
    max_size_a: usize,
    max_nodes: u64,
    nodes: u64,
    budget_hit: bool,
    stopped: bool,
    /// Decided neighbors of each vertex on side A / side B.
    cnt_a: Vec<u32>,
    cnt_b: Vec<u32>,
    /// Undecided neighbors of each vertex.
    undecided: Vec<u32>,
    mask_a: u64,
    size_a: usize,
    on_leaf: F,
}

impl<'a, F: FnMut(u64) -> LeafAction> State<'a, F> {
    /// Can `v` (decided, on side `in_a`) still reach its threshold if every
    /// undecided neighbor lands favorably?
    #[inline]
    fn alive(&self, v: usize, in_a: bool) -> bool {
        let thr = if in_a { self.thr_a[v] } else { self.thr_b[v] };
        let have = match (self.requirement, in_a) {
            (Requirement::OwnSide, true) | (Requirement::OppositeSide, false) => self.cnt_a[v],
            _ => self.cnt_b[v],
        };
        have + self.undecided[v] >= thr
    }

    fn descend(&mut self, v: usize, to_a: bool) {
        if self.stopped || self.budget_hit {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.budget_hit = true;
            return;
        }
        let n = self.g.n();

        let new_size_a = self.size_a + usize::from(to_a);
        let remaining = n - v - 1;
        if new_size_a > self.max_size_a || new_size_a + remaining < self.min_size_a {
            return;
        }

        // Place v, update neighbor counters, then check v and every decided
        // neighbor whose slack just shrank.
        let row = self.g.adj_row(v);
        let mut t = row;
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            if to_a {
                self.cnt_a[w] += 1;
            } else {
                self.cnt_b[w] += 1;
            }
            self.undecided[w] -= 1;
        }
        if to_a {
            self.mask_a |= 1u64 << v;
        }
        self.size_a = new_size_a;

        let mut ok = self.alive(v, to_a);
        if ok {
            let mut t = row & ((1u64 << v) - 1);
            while t != 0 {
                let w = t.trailing_zeros() as usize;
                t &= t - 1;
                if !self.alive(w, self.mask_a >> w & 1 == 1) {
                    ok = false;
                    break;
                }
            }
        }

        if ok {
            if v + 1 == n {
                if (self.on_leaf)(self.mask_a) == LeafAction::Stop {
                    self.stopped = true;
                }
            } else {
                self.descend(v + 1, true);
                self.descend(v + 1, false);
            }
        }

        // Undo.
        let mut t = row;
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            if to_a {
                self.cnt_a[w] -= 1;
            } else {
                self.cnt_b[w] -= 1;
            }
            self.undecided[w] += 1;
        }
        if to_a {
            self.mask_a &= !(1u64 << v);
        }
        self.size_a -= usize::from(to_a);
    }
}
