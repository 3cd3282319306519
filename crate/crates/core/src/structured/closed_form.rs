//! Closed-form and structure-exploiting solvers for the near-complete degree
//! range: d = n-2, d = n-3 and d = n-4.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::mis::max_independent_set;
use crate::partition::{classify, Partition, Ratio};
use crate::search::{SearchOutcome, SearchStats};
use crate::structured::census::has_external_bisection;
use crate::structured::coloring::{bisection_from_two_colors, edge_color_cubic, ColorClass};
use crate::structured::StructuredError;

fn expect_degree(g: &Graph, offset: usize, what: &str) -> Result<usize, StructuredError> {
    let found = g.regular_degree();
    let n = g.n();
    match found {
        Some(d) if n > offset && d == n - offset => Ok(d),
        Some(d) => Err(StructuredError::WrongDegree {
            expected: what.into(),
            found: format!("{d}-regular on {n} vertices"),
        }),
        None => Err(StructuredError::WrongDegree {
            expected: what.into(),
            found: "irregular".into(),
        }),
    }
}

/// Internal bisection of an (n-2)-regular graph: the complement is a perfect
/// matching; splitting every matched pair across the sides does it.
pub fn bisection_from_matching(g: &Graph) -> Result<Partition, StructuredError> {
    expect_degree(g, 2, "(n-2)-regular")?;
    let cg = g.complement();
    let mut side_a = VertexSet::EMPTY;
    for v in cg.vertices() {
        let row = cg.adj_row(v);
        debug_assert_eq!(row.count_ones(), 1, "complement must be a perfect matching");
        let mate = row.trailing_zeros() as usize;
        if v < mate {
            side_a.insert(v);
        }
    }
    let p = Partition::new(side_a, g.n())?;
    let report = classify(g, &p, Ratio::ONE_HALF)?;
    if !(report.flags.q_internal && report.flags.bisection) {
        return Err(StructuredError::InvariantViolation(
            "matched-pair split failed to classify as an internal bisection".into(),
        ));
    }
    Ok(p)
}

/// Decides internal partitions of (n-3)-regular graphs without search.
///
/// The complement is 2-regular, a disjoint union of cycles. With at most one
/// odd cycle, placing every cycle alternately (lowest vertex first, into side
/// A) yields an internal near-bisection; with two or more odd cycles no
/// internal partition exists at all, so `ExhaustedNone` here is a certificate.
pub fn solve_n_minus_3(g: &Graph) -> Result<SearchOutcome, StructuredError> {
    expect_degree(g, 3, "(n-3)-regular")?;
    let cg = g.complement();
    let cycles = cycle_decomposition(&cg)?;
    let odd = cycles.iter().filter(|c| c.len() % 2 == 1).count();
    if odd >= 2 {
        return Ok(SearchOutcome::exhausted(SearchStats::default()));
    }

    let mut side_a = VertexSet::EMPTY;
    for cycle in &cycles {
        for (i, &v) in cycle.iter().enumerate() {
            if i % 2 == 0 {
                side_a.insert(v);
            }
        }
    }
    let p = Partition::new(side_a, g.n())?;
    let report = classify(g, &p, Ratio::ONE_HALF)?;
    if !(report.flags.q_internal && report.flags.near_bisection) {
        return Err(StructuredError::InvariantViolation(
            "alternating placement failed to classify as an internal near-bisection".into(),
        ));
    }
    Ok(SearchOutcome::found(p, SearchStats::default()))
}

/// Walks the cycles of a 2-regular graph, each starting at its lowest vertex.
fn cycle_decomposition(cg: &Graph) -> Result<Vec<Vec<usize>>, StructuredError> {
    let mut cycles = Vec::new();
    let mut seen = 0u64;
    for start in cg.vertices() {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut cycle = vec![start];
        seen |= 1 << start;
        let mut prev = start;
        let mut cur = (cg.adj_row(start)).trailing_zeros() as usize;
        while cur != start {
            cycle.push(cur);
            seen |= 1 << cur;
            let next_mask = cg.adj_row(cur) & !(1u64 << prev);
            if next_mask.count_ones() != 1 {
                return Err(StructuredError::InvariantViolation(
                    "complement is not 2-regular".into(),
                ));
            }
            prev = cur;
            cur = next_mask.trailing_zeros() as usize;
        }
        if cycle.len() < 3 {
            return Err(StructuredError::InvariantViolation(
                "complement cycle shorter than a triangle".into(),
            ));
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Which route settled an (n-4)-regular instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NMinus4Route {
    /// The cubic complement has an external bisection; its dual is an
    /// internal bisection here.
    ViaBisection,
    /// The cubic complement has an independent set of n/2 - 1 vertices; that
    /// clique and its complement form the internal partition.
    ViaClique,
    /// Neither witness exists; no internal partition exists at all.
    NoPartition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NMinus4Report {
    pub route: NMinus4Route,
    pub witness: Option<Partition>,
    pub complement_class: ColorClass,
    pub independence_number: usize,
}

/// Decides internal partitions of (n-4)-regular graphs.
///
/// Any internal partition forces one of two witnesses in the cubic
/// complement: an external bisection (tried first via class-1 coloring, then
/// exhaustively) or an independent set of size n/2 - 1. Conversely each
/// witness builds an internal partition, so `NoPartition` is a certificate.
pub fn analyze_n_minus_4(g: &Graph, max_nodes: u64) -> Result<NMinus4Report, StructuredError> {
    expect_degree(g, 4, "(n-4)-regular")?;
    let n = g.n();
    let cg = g.complement();
    debug_assert_eq!(cg.regular_degree(), Some(3));

    let coloring = edge_color_cubic(&cg)?;
    let complement_class = coloring.verdict;

    let ext_bisection = match complement_class {
        ColorClass::Class1 => Some(bisection_from_two_colors(&cg, &coloring, 0, 1, None)?),
        ColorClass::Class2 => has_external_bisection(&cg, max_nodes)?,
    };

    if let Some(p) = ext_bisection {
        let report = classify(g, &p, Ratio::ONE_HALF)?;
        if !(report.flags.q_internal && report.flags.bisection) {
            return Err(StructuredError::InvariantViolation(
                "dual of an external bisection failed to be an internal bisection".into(),
            ));
        }
        let alpha = max_independent_set(&cg)?.len();
        return Ok(NMinus4Report {
            route: NMinus4Route::ViaBisection,
            witness: Some(p),
            complement_class,
            independence_number: alpha,
        });
    }

    let mis = max_independent_set(&cg)?;
    let alpha = mis.len();
    if alpha + 1 >= n / 2 {
        // With no external bisection around, alpha is exactly n/2 - 1, and
        // the clique on the anticlique side makes the partition internal.
        let p = Partition::new(mis.complement_in(n), n)?;
        let report = classify(g, &p, Ratio::ONE_HALF)?;
        if !report.flags.q_internal {
            return Err(StructuredError::InvariantViolation(
                "anticlique-complement split failed to classify internal".into(),
            ));
        }
        return Ok(NMinus4Report {
            route: NMinus4Route::ViaClique,
            witness: Some(p),
            complement_class,
            independence_number: alpha,
        });
    }

    Ok(NMinus4Report {
        route: NMinus4Route::NoPartition,
        witness: None,
        complement_class,
        independence_number: alpha,
    })
}
