//! Complement duality: exact q-internal partitions of a graph are
//! (1-q)-external in its complement, and conversely when the complement-side
//! thresholds are integral.
//!
//! "Exact" throughout means `|A| = q n` with q the internal-side ratio; the
//! external reading of the same partition keeps that size.

use crate::graph::Graph;
use crate::partition::{classify, Partition, PartitionReport, Ratio};
use crate::structured::StructuredError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransferDirection {
    /// Input: exact q-internal in `g`. Output: (1-q)-external classification
    /// in the complement, with the external flag guaranteed.
    InternalToExternal,
    /// Input: exact (1-q)-external in `g` (side A of size q n), with the
    /// complement classification integral at q. Output: q-internal
    /// classification in the complement, with internal and exact guaranteed.
    ExternalToInternal,
}

fn lowest_failing_vertex(report: &PartitionReport, external: bool) -> Option<usize> {
    let q = report.q;
    let (num, den) = (q.num() as u128, q.den() as u128);
    (0..report.n).find(|&v| {
        let factor = if report.side_a.contains(v) { num } else { den - num };
        let have = if external { report.outdegree[v] } else { report.indegree[v] };
        let degree = (report.indegree[v] + report.outdegree[v]) as u128;
        (have as u128) * den < factor * degree
    })
}

/// Transfers a partition across complementation, checking the applicable
/// preconditions and asserting the guaranteed conclusion flags.
///
/// Returns the classification of the same vertex split in `complement(g)`,
/// at ratio `1-q` for the internal-to-external direction and at `q` for the
/// converse.
pub fn complement_transfer(
    g: &Graph,
    p: &Partition,
    q: Ratio,
    direction: TransferDirection,
) -> Result<PartitionReport, StructuredError> {
    let cg = g.complement();
    let exact_at_q = (p.size_a() as u128) * q.den() as u128 == q.num() as u128 * g.n() as u128;

    match direction {
        TransferDirection::InternalToExternal => {
            let input = classify(g, p, q)?;
            if !input.flags.q_internal {
                return Err(StructuredError::ContractViolation {
                    what: format!("partition is not {q}-internal in the input graph"),
                    vertex: lowest_failing_vertex(&input, false),
                });
            }
            if !exact_at_q {
                return Err(StructuredError::ContractViolation {
                    what: format!("|A| = {} is not q n = {q} * {}", p.size_a(), g.n()),
                    vertex: None,
                });
            }
            let output = classify(&cg, p, q.complement())?;
            if !output.flags.q_external {
                return Err(StructuredError::InvariantViolation(
                    "exact internal partition failed to transfer to an external one".into(),
                ));
            }
            Ok(output)
        }
        TransferDirection::ExternalToInternal => {
            let input = classify(g, p, q.complement())?;
            if !input.flags.q_external {
                return Err(StructuredError::ContractViolation {
                    what: format!(
                        "partition is not {}-external in the input graph",
                        q.complement()
                    ),
                    vertex: lowest_failing_vertex(&input, true),
                });
            }
            if !exact_at_q {
                return Err(StructuredError::ContractViolation {
                    what: format!("|A| = {} is not q n = {q} * {}", p.size_a(), g.n()),
                    vertex: None,
                });
            }
            let output = classify(&cg, p, q)?;
            if !output.flags.integral {
                return Err(StructuredError::ContractViolation {
                    what: format!("complement partition is not integral at q = {q}"),
                    vertex: (0..g.n())
                        .find(|&v| !q.times_is_integer(cg.degree(v) as u64)),
                });
            }
            if !(output.flags.q_internal && output.flags.exact) {
                return Err(StructuredError::InvariantViolation(
                    "exact external partition with integral complement failed to transfer".into(),
                ));
            }
            Ok(output)
        }
    }
}
