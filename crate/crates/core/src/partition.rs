//! Partitions, exact rational thresholds and the classification predicates.
//!
//! Every threshold comparison here is integer cross-multiplication; the
//! distinctions this crate cares about (strict vs. non-strict, integral vs.
//! not) sit on arithmetic knife edges that floating point would blur.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("ratio must satisfy 0 < num < den, got {num}/{den}")]
    RatioOutOfRange { num: u64, den: u64 },
    #[error("ratio denominator is zero")]
    ZeroDenominator,
    #[error("malformed ratio string {0:?}, expected \"num/den\"")]
    RatioParse(String),
    #[error("partition over {partition_n} vertices applied to a graph of order {graph_n}")]
    DimensionMismatch { partition_n: usize, graph_n: usize },
    #[error("side mask {mask:#x} has bits at or above position {n}")]
    MaskOutOfRange { mask: u64, n: usize },
}

/// An exact rational threshold `q = num/den` in lowest terms with `0 < q < 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

const fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Ratio {
    pub const ONE_HALF: Ratio = Ratio { num: 1, den: 2 };

    pub fn new(num: u64, den: u64) -> Result<Self, PartitionError> {
        if den == 0 {
            return Err(PartitionError::ZeroDenominator);
        }
        if num == 0 || num >= den {
            return Err(PartitionError::RatioOutOfRange { num, den });
        }
        let g = gcd(num, den);
        Ok(Ratio { num: num / g, den: den / g })
    }

    #[inline]
    pub fn num(self) -> u64 {
        self.num
    }

    #[inline]
    pub fn den(self) -> u64 {
        self.den
    }

    /// `1 - q`, always another valid ratio.
    pub fn complement(self) -> Ratio {
        Ratio { num: self.den - self.num, den: self.den }
    }

    /// Whether `self <= other` as rationals.
    pub fn le(self, other: Ratio) -> bool {
        (self.num as u128) * (other.den as u128) <= (other.num as u128) * (self.den as u128)
    }

    /// Whether `q * value` is an integer.
    #[inline]
    pub fn times_is_integer(self, value: u64) -> bool {
        (self.num as u128 * value as u128) % self.den as u128 == 0
    }

    /// `ceil(q * value)`.
    #[inline]
    pub fn ceil_times(self, value: u64) -> u64 {
        (((self.num as u128) * (value as u128)).div_ceil(self.den as u128)) as u64
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Ratio {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once('/').ok_or_else(|| PartitionError::RatioParse(s.into()))?;
        let num = a.trim().parse().map_err(|_| PartitionError::RatioParse(s.into()))?;
        let den = b.trim().parse().map_err(|_| PartitionError::RatioParse(s.into()))?;
        Ratio::new(num, den)
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A two-sided vertex partition, stored as side `A`; `B` is the complement.
///
/// Trivial partitions (one side empty) are representable; the classification
/// predicates report them with all internal/external flags false.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    side_a: VertexSet,
    n: usize,
}

impl Partition {
    pub fn new(side_a: VertexSet, n: usize) -> Result<Self, PartitionError> {
        if side_a.mask() & !VertexSet::full(n).mask() != 0 {
            return Err(PartitionError::MaskOutOfRange { mask: side_a.mask(), n });
        }
        Ok(Partition { side_a, n })
    }

    #[inline]
    pub fn side_a(&self) -> VertexSet {
        self.side_a
    }

    #[inline]
    pub fn side_b(&self) -> VertexSet {
        self.side_a.complement_in(self.n)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size_a(&self) -> usize {
        self.side_a.len()
    }

    #[inline]
    pub fn size_b(&self) -> usize {
        self.n - self.size_a()
    }

    pub fn is_trivial(&self) -> bool {
        self.size_a() == 0 || self.size_a() == self.n
    }

    /// The same partition with the side roles exchanged.
    pub fn swapped(&self) -> Partition {
        Partition { side_a: self.side_b(), n: self.n }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition(A={}, n={})", self.side_a, self.n)
    }
}

/// Classification flags for a `(graph, partition, q)` triple.
///
/// The orientation convention: `q` applies to side `A`, `1-q` to side `B`.
/// Callers wanting the mirrored reading classify the swapped partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionFlags {
    /// Every `x in A` has `d_A(x) >= q d(x)` and every `x in B` has `d_B(x) >= (1-q) d(x)`.
    pub q_internal: bool,
    /// Every `x in A` has `d_B(x) >= q d(x)` and every `x in B` has `d_A(x) >= (1-q) d(x)`.
    pub q_external: bool,
    /// `q d(v)` is an integer for every vertex.
    pub integral: bool,
    /// `|A| = q n` exactly.
    pub exact: bool,
    /// `||A| - q n| < 1` (strict).
    pub near_exact: bool,
    /// `|A| = |B|`.
    pub bisection: bool,
    /// `||A| - |B|| <= 1`.
    pub near_bisection: bool,
}

/// Full per-vertex account of a partition against a graph and a threshold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub n: usize,
    pub q: Ratio,
    pub side_a: VertexSet,
    pub size_a: usize,
    pub size_b: usize,
    /// `|E(A, B)|`.
    pub cut: usize,
    /// Own-side neighbor count per vertex: `d_A(x)` for `x in A`, `d_B(x)` for `x in B`.
    pub indegree: Vec<u32>,
    /// Opposite-side neighbor count per vertex.
    pub outdegree: Vec<u32>,
    pub flags: PartitionFlags,
}

/// Classifies `p` against `g` at threshold `q`; all comparisons are integral.
pub fn classify(g: &Graph, p: &Partition, q: Ratio) -> Result<PartitionReport, PartitionError> {
    if p.n() != g.n() {
        return Err(PartitionError::DimensionMismatch { partition_n: p.n(), graph_n: g.n() });
    }
    let n = g.n();
    let a = p.side_a();
    let b = p.side_b();

    let mut indegree = vec![0u32; n];
    let mut outdegree = vec![0u32; n];
    let mut cut = 0usize;
    for v in g.vertices() {
        let own = if a.contains(v) { a } else { b };
        indegree[v] = g.degree_in(v, own) as u32;
        outdegree[v] = (g.degree(v) - indegree[v] as usize) as u32;
        if a.contains(v) {
            cut += outdegree[v] as usize;
        }
    }

    let num = q.num() as u128;
    let den = q.den() as u128;
    let conum = den - num;

    // d_A(x)*den >= num*d(x) style comparisons, per vertex.
    let meets = |count: u32, factor: u128, v: usize| -> bool {
        count as u128 * den >= factor * g.degree(v) as u128
    };

    let nontrivial = !p.is_trivial();
    let mut q_internal = nontrivial;
    let mut q_external = nontrivial;
    for v in g.vertices() {
        // Side A carries factor q, side B carries 1-q; internal tests the
        // own-side count and external the opposite-side count.
        let factor = if a.contains(v) { num } else { conum };
        q_internal &= meets(indegree[v], factor, v);
        q_external &= meets(outdegree[v], factor, v);
    }

    let integral = g.vertices().all(|v| q.times_is_integer(g.degree(v) as u64));

    let ka = p.size_a() as u128;
    let exact = ka * den == num * n as u128;
    // ||A| - qn| < 1  <=>  |den*|A| - num*n| < den.
    let lhs = ka * den;
    let rhs = num * n as u128;
    let near_exact = lhs.abs_diff(rhs) < den;
    let bisection = 2 * p.size_a() == n;
    let near_bisection = (2 * p.size_a()).abs_diff(n) <= 1;

    Ok(PartitionReport {
        n,
        q,
        side_a: a,
        size_a: p.size_a(),
        size_b: p.size_b(),
        cut,
        indegree,
        outdegree,
        flags: PartitionFlags {
            q_internal,
            q_external,
            integral,
            exact,
            near_exact,
            bisection,
            near_bisection,
        },
    })
}

/// The unique maximum subset `T` of `s` with minimum internal degree `>= p`,
/// computed by peeling low-degree vertices to a fixed point.
///
/// Unions of such sets again satisfy the degree bound, so the maximum one
/// exists and equals this fixed point.
pub fn p_core(g: &Graph, s: VertexSet, p: usize) -> VertexSet {
    debug_assert!(s.is_subset_of(VertexSet::full(g.n())), "vertex set outside graph");
    let mut t = s.intersect(VertexSet::full(g.n()));
    loop {
        let mut removed = false;
        for v in t.iter() {
            if g.degree_in(v, t) < p {
                t.remove(v);
                removed = true;
            }
        }
        if !removed {
            return t;
        }
    }
}

/// `S` itself has minimum internal degree `>= p`.
pub fn is_p_cohesive(g: &Graph, s: VertexSet, p: usize) -> bool {
    !s.is_empty() && p_core(g, s, p) == s
}

/// No subset of `S` is `p`-cohesive; equivalently the `p`-core of `S` is empty.
pub fn is_p_crumble(g: &Graph, s: VertexSet, p: usize) -> bool {
    p_core(g, s, p).is_empty()
}
