//! Bitmask-backed simple undirected graphs on up to 64 vertices.
//!
//! Every vertex set, partition side and neighborhood in this crate is a `u64`
//! mask, so the whole library stays within single-word set operations.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Hard cap on the number of vertices; adjacency rows are `u64` masks.
pub const MAX_VERTICES: usize = 64;

/// Errors from graph construction, generation and the graph-level searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} out of range 1..={MAX_VERTICES}")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("adjacency row {row} has bits at or above position {order}")]
    StrayBits { row: usize, order: usize },
    #[error("invalid generator parameters: {0}")]
    BadGeneratorParams(String),
    #[error("enumeration guard: order {n} exceeds the configured cap {cap}")]
    EnumerationGuard { n: usize, cap: usize },
    #[error("degree sequence infeasible: n={n}, d={d}")]
    InfeasibleDegree { n: usize, d: usize },
    #[error("random generation failed after {attempts} restarts")]
    GenerationFailed { attempts: usize },
    #[error("search guard: order {n} exceeds limit {limit}")]
    SearchGuard { n: usize, limit: usize },
    #[error("edge list parse error at line {line}: {message}")]
    EdgeListParse { line: usize, message: String },
}

/// A set of vertices, stored as a bitmask over indices `0..n`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn new(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// The set `{0, 1, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersect(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement within `{0..n}`.
    #[inline]
    pub const fn complement_in(self, n: usize) -> Self {
        VertexSet(!self.0 & full_mask(n))
    }

    #[inline]
    pub const fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterates members in increasing order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// Parses `"0x1f"` or a bare hex string.
    pub fn from_hex_str(s: &str) -> Result<Self, std::num::ParseIntError> {
        let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
        u64::from_str_radix(digits, 16).map(VertexSet)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet({:#x})", self.0)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&format_args!("{:#x}", self.0))
    }
}

/// Iterator over the set bits of a mask, lowest first.
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[inline]
pub(crate) const fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph with adjacency stored as one bitmask row per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating all invariants.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let g = Graph { n, adj };
        g.validate()?;
        Ok(g)
    }

    /// Internal constructor for rows already known to be valid (hot paths).
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.validate().is_ok());
        g
    }

    /// Checks symmetry, loop-freeness and that no bits sit above `n-1`.
    pub fn validate(&self) -> Result<(), GraphError> {
        let full = full_mask(self.n);
        for v in 0..self.n {
            if self.adj[v] & !full != 0 {
                return Err(GraphError::StrayBits { row: v, order: self.n });
            }
            if self.adj[v] >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
        }
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if (self.adj[u] >> v) & 1 != (self.adj[v] >> u) & 1 {
                    return Err(GraphError::NotSymmetric(u, v));
                }
            }
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, order: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub(crate) fn remove_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn full_mask(&self) -> u64 {
        full_mask(self.n)
    }

    #[inline]
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    pub fn adj_row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Number of neighbors of `v` inside `set`.
    #[inline]
    pub fn degree_in(&self, v: usize, set: VertexSet) -> usize {
        (self.adj[v] & set.mask()).count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut t = self.adj[u] >> (u + 1) << (u + 1);
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                t &= t - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.vertices().all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.vertices().filter(|&v| self.adj[v] == 0).collect()
    }

    /// The complement graph: edge `uv` present iff absent here, degrees `n - d(v) - 1`.
    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let adj = self
            .vertices()
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    pub fn is_connected(&self) -> bool {
        let mut reached = 1u64;
        loop {
            let mut next = reached;
            let mut t = reached;
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                t &= t - 1;
                next |= self.adj[v];
            }
            if next == reached {
                break;
            }
            reached = next;
        }
        reached == full_mask(self.n)
    }

    /// Induced subgraph on `set`, relabeled to `0..set.len()`.
    ///
    /// The second component maps new labels back to the originals.
    pub fn induced(&self, set: VertexSet) -> (Graph, Vec<usize>) {
        let vmap: Vec<usize> = set.iter().collect();
        let mut g = Graph { n: vmap.len(), adj: vec![0; vmap.len()] };
        for (i, &u) in vmap.iter().enumerate() {
            for (j, &v) in vmap.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1u64 << j;
                    g.adj[j] |= 1u64 << i;
                }
            }
        }
        (g, vmap)
    }

    /// Disjoint union, `other`'s vertices shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Renders the line-oriented `"u v"` edge-list format, one edge per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses the `"u v"` edge-list format; the order is `max vertex + 1`.
    ///
    /// Blank lines and `#` comments are skipped.
    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        let mut maxv = 0usize;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize, GraphError> {
                tok.ok_or_else(|| GraphError::EdgeListParse {
                    line: lineno + 1,
                    message: "expected two vertex indices".into(),
                })?
                .parse()
                .map_err(|e| GraphError::EdgeListParse {
                    line: lineno + 1,
                    message: format!("{e}"),
                })
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(GraphError::EdgeListParse {
                    line: lineno + 1,
                    message: "trailing tokens".into(),
                });
            }
            maxv = maxv.max(u).max(v);
            edges.push((u, v));
        }
        if edges.is_empty() {
            return Err(GraphError::EdgeListParse { line: 0, message: "no edges".into() });
        }
        Graph::from_edges(maxv + 1, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
