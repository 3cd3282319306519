//! Seeded random regular graphs via the pairing model.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

const MAX_RESTARTS: usize = 10_000;

/// A uniform-ish random `d`-regular simple graph, deterministic in `seed`.
///
/// Pairing model: the lowest vertex with open stubs is matched to a uniformly
/// random compatible stub (no loops, no repeated edges); a dead end triggers a
/// whole restart.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::OrderOutOfRange(n));
    }
    if d >= n || n * d % 2 != 0 {
        return Err(GraphError::InfeasibleDegree { n, d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    'attempt: for _ in 0..MAX_RESTARTS {
        let mut adj = vec![0u64; n];
        let mut residual = vec![d; n];
        loop {
            let Some(u) = (0..n).find(|&v| residual[v] > 0) else {
                return Ok(Graph::from_adjacency_unchecked(adj));
            };
            // Candidate partners weighted by their open stub count.
            let mut total = 0usize;
            for w in (u + 1)..n {
                if residual[w] > 0 && adj[u] >> w & 1 == 0 {
                    total += residual[w];
                }
            }
            if total == 0 {
                continue 'attempt;
            }
            let mut pick = rng.gen_range(0..total);
            let mut chosen = usize::MAX;
            for w in (u + 1)..n {
                if residual[w] > 0 && adj[u] >> w & 1 == 0 {
                    if pick < residual[w] {
                        chosen = w;
                        break;
                    }
                    pick -= residual[w];
                }
            }
            adj[u] |= 1 << chosen;
            adj[chosen] |= 1 << u;
            residual[u] -= 1;
            residual[chosen] -= 1;
        }
    }
    Err(GraphError::GenerationFailed { attempts: MAX_RESTARTS })
}

/// As [`random_regular`] but resamples (incrementing the seed) until the
/// graph is connected. Returns the graph and the seed that produced it.
pub fn random_regular_connected(n: usize, d: usize, seed: u64) -> Result<(Graph, u64), GraphError> {
    let mut s = seed;
    for _ in 0..MAX_RESTARTS {
        let g = random_regular(n, d, s)?;
        if g.is_connected() {
            return Ok((g, s));
        }
        s = s.wrapping_add(1);
    }
    Err(GraphError::GenerationFailed { attempts: MAX_RESTARTS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::complete;

    #[test]
    fn degrees_are_exact() {
        for (n, d, seed) in [(14usize, 6usize, 7u64), (20, 3, 1), (9, 4, 42), (16, 8, 3)] {
            let g = random_regular(n, d, seed).unwrap();
            g.validate().unwrap();
            assert_eq!(g.regular_degree(), Some(d), "n={n} d={d}");
        }
    }

    #[test]
    fn forced_k4() {
        assert_eq!(random_regular(4, 3, 5).unwrap(), complete(4).unwrap());
    }

    #[test]
    fn deterministic_per_seed() {
        let a = random_regular(18, 5, 99).unwrap();
        let b = random_regular(18, 5, 99).unwrap();
        let c = random_regular(18, 5, 100).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c, "different seeds should virtually always differ");
    }

    #[test]
    fn parity_violation_is_rejected() {
        assert!(matches!(
            random_regular(5, 3, 0),
            Err(GraphError::InfeasibleDegree { n: 5, d: 3 })
        ));
        assert!(matches!(
            random_regular(4, 4, 0),
            Err(GraphError::InfeasibleDegree { .. })
        ));
    }

    #[test]
    fn connected_variant_reports_seed() {
        let (g, s) = random_regular_connected(12, 3, 0).unwrap();
        assert!(g.is_connected());
        assert_eq!(g, random_regular(12, 3, s).unwrap());
    }
}
