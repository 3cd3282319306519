//! Connected components and bridge detection.

use crate::graph::{Graph, VertexSet};

/// Components and bridges of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    /// Connected components in order of their lowest vertex.
    pub components: Vec<VertexSet>,
    /// Bridges as `(u, v)` with `u < v`, lexicographically sorted.
    pub bridges: Vec<(usize, usize)>,
}

/// Computes connected components and all bridges (standard low-link DFS).
pub fn structure(g: &Graph) -> StructureReport {
    let n = g.n();
    let mut components = Vec::new();
    let mut seen = 0u64;
    for v in 0..n {
        if seen >> v & 1 == 1 {
            continue;
        }
        let mut comp = 1u64 << v;
        loop {
            let mut next = comp;
            let mut t = comp;
            while t != 0 {
                let u = t.trailing_zeros() as usize;
                t &= t - 1;
                next |= g.adj_row(u);
            }
            if next == comp {
                break;
            }
            comp = next;
        }
        seen |= comp;
        components.push(VertexSet::new(comp));
    }

    let mut bridges = bridges_lowlink(g);
    bridges.sort_unstable();
    StructureReport { components, bridges }
}

/// Returns `true` when `(u, v)` is a bridge of `g`.
pub fn is_bridge(g: &Graph, u: usize, v: usize) -> bool {
    g.has_edge(u, v) && structure(g).bridges.contains(&(u.min(v), u.max(v)))
}

fn bridges_lowlink(g: &Graph) -> Vec<(usize, usize)> {
    const UNSEEN: u32 = u32::MAX;
    let n = g.n();
    let mut order = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut clock = 0u32;
    let mut out = Vec::new();

    // Depth is bounded by n <= 64, so plain recursion is fine.
    fn dfs(
        g: &Graph,
        v: usize,
        parent: Option<usize>,
        clock: &mut u32,
        order: &mut [u32],
        low: &mut [u32],
        out: &mut Vec<(usize, usize)>,
    ) {
        order[v] = *clock;
        low[v] = *clock;
        *clock += 1;
        let mut parent_edge_skipped = false;
        let mut t = g.adj_row(v);
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            if Some(w) == parent && !parent_edge_skipped {
                // Skip the tree edge once; simple graphs have no parallel edges.
                parent_edge_skipped = true;
                continue;
            }
            if order[w] == u32::MAX {
                dfs(g, w, Some(v), clock, order, low, out);
                low[v] = low[v].min(low[w]);
                if low[w] > order[v] {
                    out.push((v.min(w), v.max(w)));
                }
            } else {
                low[v] = low[v].min(order[w]);
            }
        }
    }

    for v in 0..n {
        if order[v] == UNSEEN {
            dfs(g, v, None, &mut clock, &mut order, &mut low, &mut out);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::cycle;
    use crate::graph::Graph;

    #[test]
    fn cycle_has_one_component_no_bridges() {
        let r = structure(&cycle(8).unwrap());
        assert_eq!(r.components.len(), 1);
        assert!(r.bridges.is_empty());
    }

    #[test]
    fn path_is_all_bridges() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = structure(&p4);
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.bridges, vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn disjoint_components_are_reported_in_order() {
        let g = cycle(3).unwrap().disjoint_union(&cycle(4).unwrap()).unwrap();
        let r = structure(&g);
        assert_eq!(r.components.len(), 2);
        assert_eq!(r.components[0], VertexSet::new(0b0000111));
        assert_eq!(r.components[1], VertexSet::new(0b1111000));
        assert!(r.bridges.is_empty());
    }

    #[test]
    fn two_triangles_joined_by_an_edge() {
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
        )
        .unwrap();
        let r = structure(&g);
        assert_eq!(r.bridges, vec![(2, 3)]);
        assert!(is_bridge(&g, 3, 2));
        assert!(!is_bridge(&g, 0, 1));
    }
}
