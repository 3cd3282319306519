//! Bridge elimination in cubic graphs, and recomposition of external
//! bisections across the bridge.
//!
//! Deleting the two endpoints of a bridge leaves each side with exactly two
//! degree-2 vertices; a loop then either joins those two by a new edge
//! (done: a smaller cubic graph with one marked non-original edge) or peels
//! vertex pairs until it can. The recomposition colors both parts, bisects
//! them avoiding the marked edges' colors, reinstates every deleted pair
//! split across the sides, and picks pair orientations so the result is an
//! external bisection of the original graph.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::partition::{classify, Partition, Ratio};
use crate::structure::structure;
use crate::structured::coloring::{bisection_from_two_colors, edge_color_cubic, ColorClass};
use crate::structured::StructuredError;

/// One decomposition step, in original vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DecomposeStep {
    /// The two degree-2 vertices were not adjacent: a new edge joined them
    /// and the component became cubic.
    JoinEnds { added: (usize, usize) },
    /// Adjacent degree-2 pair removed; their distinct other neighbors became
    /// the next degree-2 pair.
    RemovePair { pair: (usize, usize) },
    /// Adjacent degree-2 pair removed; they shared a neighbor, which was
    /// deleted together with its remaining neighbor.
    RemovePairAndNeighbors { pair: (usize, usize), extra: (usize, usize) },
}

/// One terminal cubic part, relabeled to `0..graph.n()`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgePart {
    pub graph: Graph,
    /// Local label -> original label.
    pub vertices: Vec<usize>,
    /// The non-original edge, in local labels.
    pub marked: (usize, usize),
    /// The same edge in original labels.
    pub marked_original: (usize, usize),
    pub steps: Vec<DecomposeStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeDecomposition {
    pub bridge: (usize, usize),
    pub parts: [BridgePart; 2],
}

impl BridgeDecomposition {
    /// Deleted vertex pairs across both parts, in deletion order, bridge
    /// endpoints excluded. Every pair is adjacent in the original graph.
    fn deleted_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for part in &self.parts {
            for step in &part.steps {
                match step {
                    DecomposeStep::JoinEnds { .. } => {}
                    DecomposeStep::RemovePair { pair } => pairs.push(*pair),
                    DecomposeStep::RemovePairAndNeighbors { pair, extra } => {
                        pairs.push(*pair);
                        pairs.push(*extra);
                    }
                }
            }
        }
        pairs
    }
}

/// Eliminates a bridge of a cubic graph, producing two smaller cubic graphs
/// each carrying one marked non-original edge plus the full deletion log.
pub fn bridge_decompose_cubic(
    g: &Graph,
    bridge: (usize, usize),
) -> Result<BridgeDecomposition, StructuredError> {
    if g.regular_degree() != Some(3) {
        return Err(StructuredError::WrongDegree {
            expected: "cubic".into(),
            found: g
                .regular_degree()
                .map_or("irregular".into(), |d| format!("{d}-regular")),
        });
    }
    let (b1, b2) = (bridge.0.min(bridge.1), bridge.0.max(bridge.1));
    if !g.has_edge(b1, b2) {
        return Err(StructuredError::NoSuchEdge(b1, b2));
    }
    if !structure(g).bridges.contains(&(b1, b2)) {
        return Err(StructuredError::NotABridge(b1, b2));
    }

    // Removing the bridge edge splits g into the two endpoint sides.
    let mut cut = g.clone();
    cut.remove_edge_unchecked(b1, b2);
    let comps = structure(&cut).components;
    let side_of = |v: usize| {
        comps
            .iter()
            .find(|c| c.contains(v))
            .copied()
            .expect("endpoint is in some component")
    };
    let side1 = side_of(b1);
    let side2 = side_of(b2);
    if side1 == side2 {
        return Err(StructuredError::NotABridge(b1, b2));
    }

    let part1 = decompose_side(g, side1.without(b1), b1)?;
    let part2 = decompose_side(g, side2.without(b2), b2)?;
    Ok(BridgeDecomposition { bridge: (b1, b2), parts: [part1, part2] })
}

/// Runs the peeling loop on one side (already without its bridge endpoint).
fn decompose_side(
    g: &Graph,
    side: VertexSet,
    endpoint: usize,
) -> Result<BridgePart, StructuredError> {
    // Work on adjacency restricted to the live set, original labels.
    let mut live = side;
    let deg = |live: VertexSet, v: usize| (g.adj_row(v) & live.mask()).count_ones() as usize;
    let mut steps = Vec::new();

    let added = loop {
        let twos: Vec<usize> = live.iter().filter(|&v| deg(live, v) == 2).collect();
        if twos.len() != 2 {
            return Err(StructuredError::DecompositionInvariant(format!(
                "side of endpoint {endpoint} has {} degree-2 vertices (expected 2)",
                twos.len()
            )));
        }
        let (u, v) = (twos[0], twos[1]);
        if live.iter().any(|w| w != u && w != v && deg(live, w) != 3) {
            return Err(StructuredError::DecompositionInvariant(format!(
                "side of endpoint {endpoint} has a vertex of unexpected degree"
            )));
        }

        if !g.has_edge(u, v) {
            steps.push(DecomposeStep::JoinEnds { added: (u, v) });
            break (u, v);
        }

        // Adjacent pair: remove both; branch on whether they share a neighbor.
        let u_other = (g.adj_row(u) & live.mask() & !(1u64 << v)).trailing_zeros() as usize;
        let v_other = (g.adj_row(v) & live.mask() & !(1u64 << u)).trailing_zeros() as usize;
        live.remove(u);
        live.remove(v);
        if u_other == v_other {
            let shared = u_other;
            let rest_mask = g.adj_row(shared) & live.mask();
            if rest_mask.count_ones() != 1 {
                return Err(StructuredError::DecompositionInvariant(format!(
                    "shared neighbor {shared} should have exactly one live neighbor left"
                )));
            }
            let rest = rest_mask.trailing_zeros() as usize;
            live.remove(shared);
            live.remove(rest);
            steps.push(DecomposeStep::RemovePairAndNeighbors {
                pair: (u, v),
                extra: (shared, rest),
            });
        } else {
            steps.push(DecomposeStep::RemovePair { pair: (u, v) });
        }
        if live.len() < 4 {
            return Err(StructuredError::DecompositionInvariant(format!(
                "side of endpoint {endpoint} shrank below the smallest cubic order"
            )));
        }
    };

    let (u, v) = added;
    let (mut graph, vertices) = g.induced(live);
    let local = |orig: usize| vertices.iter().position(|&x| x == orig).expect("vertex is live");
    graph.add_edge(local(u), local(v))?;
    if graph.regular_degree() != Some(3) {
        return Err(StructuredError::DecompositionInvariant(
            "terminal component is not cubic".into(),
        ));
    }
    let marked = (local(u).min(local(v)), local(u).max(local(v)));
    Ok(BridgePart {
        graph,
        vertices,
        marked,
        marked_original: (u.min(v), u.max(v)),
        steps,
    })
}

/// Composes an external bisection of `g` from class-1 colorings of the two
/// decomposition parts.
///
/// Each part is bisected with the two colors avoiding its marked edge; the
/// deleted pairs and the bridge endpoints are reinstated split across sides.
/// The free choices (flipping either part, orienting each pair) are searched
/// exhaustively in a fixed order; the first assignment whose result verifies
/// as an external bisection of `g` wins.
pub fn compose_bisection_across_bridge(
    g: &Graph,
    dec: &BridgeDecomposition,
) -> Result<Partition, StructuredError> {
    let mut part_masks = [0u64; 2]; // side-A picks per part, original labels
    let mut part_all = [0u64; 2];

    for (i, part) in dec.parts.iter().enumerate() {
        let coloring = edge_color_cubic(&part.graph)?;
        if coloring.verdict == ColorClass::Class2 {
            return Err(StructuredError::ConstructionInapplicable(format!(
                "part {} is class 2, the two-color bisection does not exist",
                i + 1
            )));
        }
        let marked_color = coloring
            .color_of(part.marked.0, part.marked.1)
            .expect("marked edge is in the part");
        let free: Vec<u8> = (0..3u8).filter(|&c| c != marked_color).collect();
        let p = bisection_from_two_colors(&part.graph, &coloring, free[0], free[1], Some(part.marked))?;
        for local in p.side_a().iter() {
            part_masks[i] |= 1u64 << part.vertices[local];
        }
        for &orig in &part.vertices {
            part_all[i] |= 1u64 << orig;
        }
    }

    let pairs = dec.deleted_pairs();
    let bits = 3 + pairs.len();
    if bits > 24 {
        return Err(StructuredError::Budget { needed: 1 << bits, allowed: 1 << 24 });
    }

    let n = g.n();
    let (b1, b2) = dec.bridge;
    for assignment in 0u32..(1u32 << bits) {
        let flip = |i: usize| assignment >> i & 1 == 1;
        let mut mask = 0u64;
        for i in 0..2 {
            mask |= if flip(i) { part_all[i] & !part_masks[i] } else { part_masks[i] };
        }
        // Bridge endpoints split; lower endpoint to A unless flipped.
        mask |= 1u64 << (if flip(2) { b2 } else { b1 });
        for (j, &(u, v)) in pairs.iter().enumerate() {
            let (lo, hi) = (u.min(v), u.max(v));
            mask |= 1u64 << (if flip(3 + j) { hi } else { lo });
        }

        let p = Partition::new(VertexSet::new(mask), n)?;
        let report = classify(g, &p, Ratio::ONE_HALF)?;
        if report.flags.q_external && report.flags.bisection {
            return Ok(p);
        }
    }

    Err(StructuredError::ConstructionInapplicable(
        "no pair orientation yields an external bisection".into(),
    ))
}
