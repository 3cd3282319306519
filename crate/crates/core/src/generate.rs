//! Generators for the named graphs and parameterized families used across the
//! test corpus and the CLI.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

/// A generator family plus its parameters.
///
/// The compact string form accepted by [`GeneratorSpec::from_str`] is
/// `name(args)` with nesting for `complement` and `union`, e.g.
/// `complete(7)`, `multipartite(3,3,3)`, `qm(4)`, `complement(petersen)`,
/// `union(petersen,complete(4))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Complete { n: usize },
    CompleteMultipartite { parts: Vec<usize> },
    Cycle { n: usize },
    Petersen,
    /// Complete graph on an even order minus a perfect matching.
    CocktailParty { n: usize },
    /// The 2m-regular order-3m+2 family: a clique K_{m-1}, an (m-2)-regular
    /// block on m+1 vertices, and m+2 independent vertices joined completely
    /// to the first two blocks.
    Qm { m: usize },
    /// The embedded 28-vertex cubic graph (see `data/fig28.edges`).
    Fig28,
    ComplementOf(Box<GeneratorSpec>),
    DisjointUnion(Vec<GeneratorSpec>),
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match self {
            GeneratorSpec::Complete { n } => complete(*n),
            GeneratorSpec::CompleteMultipartite { parts } => complete_multipartite(parts),
            GeneratorSpec::Cycle { n } => cycle(*n),
            GeneratorSpec::Petersen => Ok(petersen()),
            GeneratorSpec::CocktailParty { n } => cocktail_party(*n),
            GeneratorSpec::Qm { m } => qm(*m),
            GeneratorSpec::Fig28 => Ok(fig28()),
            GeneratorSpec::ComplementOf(inner) => Ok(inner.build()?.complement()),
            GeneratorSpec::DisjointUnion(specs) => {
                if specs.is_empty() {
                    return Err(GraphError::BadGeneratorParams("empty union".into()));
                }
                let mut graphs = specs.iter().map(|s| s.build());
                let mut acc = graphs.next().unwrap()?;
                for g in graphs {
                    acc = acc.disjoint_union(&g?)?;
                }
                Ok(acc)
            }
        }
    }
}

/// Builds a graph directly from a spec; convenience over `spec.build()`.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GraphError> {
    spec.build()
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Complete multipartite graph with consecutive vertex blocks.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    if parts.is_empty() || parts.iter().any(|&p| p == 0) {
        return Err(GraphError::BadGeneratorParams(
            "multipartite parts must be nonempty and positive".into(),
        ));
    }
    let n: usize = parts.iter().sum();
    let mut g = Graph::empty(n)?;
    let mut starts = Vec::with_capacity(parts.len() + 1);
    let mut acc = 0;
    for &p in parts {
        starts.push(acc);
        acc += p;
    }
    starts.push(acc);
    for i in 0..parts.len() {
        for j in (i + 1)..parts.len() {
            for u in starts[i]..starts[i + 1] {
                for v in starts[j]..starts[j + 1] {
                    g.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadGeneratorParams(format!("cycle needs n >= 3, got {n}")));
    }
    let mut g = Graph::empty(n)?;
    for v in 0..n {
        g.add_edge(v, (v + 1) % n)?;
    }
    Ok(g)
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i--i+5.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10).unwrap();
    for v in 0..5 {
        g.add_edge(v, (v + 1) % 5).unwrap();
        g.add_edge(v, v + 5).unwrap();
        g.add_edge(v + 5, (v + 2) % 5 + 5).unwrap();
    }
    g
}

/// K_n minus the perfect matching {2i, 2i+1}; (n-2)-regular.
pub fn cocktail_party(n: usize) -> Result<Graph, GraphError> {
    if n < 4 || n % 2 != 0 {
        return Err(GraphError::BadGeneratorParams(format!(
            "cocktail party graph needs even n >= 4, got {n}"
        )));
    }
    let mut g = complete(n)?;
    for i in 0..n / 2 {
        g.remove_edge_unchecked(2 * i, 2 * i + 1);
    }
    Ok(g)
}

/// The 2m-regular family on 3m+2 vertices with no internal partition.
///
/// Blocks, in vertex order: `X1 = K_{m-1}` on `0..m-1`; `X2` on `m-1..2m`,
/// fixed here as the complement of the cycle C_{m+1} (an (m-2)-regular
/// choice; any (m-2)-regular graph on m+1 vertices would do); `Y` = `2m..3m+2`
/// independent, completely joined to `X1 + X2`.
pub fn qm(m: usize) -> Result<Graph, GraphError> {
    if m <= 2 {
        return Err(GraphError::BadGeneratorParams(format!("qm family needs m > 2, got {m}")));
    }
    let n = 3 * m + 2;
    if n > MAX_VERTICES {
        return Err(GraphError::OrderOutOfRange(n));
    }
    let mut g = Graph::empty(n)?;
    // X1 = K_{m-1} on 0..m-1.
    for u in 0..(m - 1) {
        for v in (u + 1)..(m - 1) {
            g.add_edge(u, v)?;
        }
    }
    // X2 = complement of C_{m+1} on m-1..2m.
    let base = m - 1;
    let k = m + 1;
    for i in 0..k {
        for j in (i + 1)..k {
            let consecutive = (i + 1) % k == j || (j + 1) % k == i;
            if !consecutive {
                g.add_edge(base + i, base + j)?;
            }
        }
    }
    // Complete bipartite join between X = 0..2m and Y = 2m..3m+2.
    for x in 0..2 * m {
        for y in 2 * m..n {
            g.add_edge(x, y)?;
        }
    }
    Ok(g)
}

/// The embedded 28-vertex connected cubic graph in which every external
/// partition is balanced. Validated on load.
pub fn fig28() -> Graph {
    let text = include_str!("../data/fig28.edges");
    let g = Graph::from_edge_list(text).expect("embedded fig28 edge list parses");
    assert_eq!(g.n(), 28, "fig28 must have 28 vertices");
    assert_eq!(g.regular_degree(), Some(3), "fig28 must be cubic");
    assert!(g.is_connected(), "fig28 must be connected");
    g
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Complete { n } => write!(f, "complete({n})"),
            GeneratorSpec::CompleteMultipartite { parts } => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "multipartite({})", parts.join(","))
            }
            GeneratorSpec::Cycle { n } => write!(f, "cycle({n})"),
            GeneratorSpec::Petersen => write!(f, "petersen"),
            GeneratorSpec::CocktailParty { n } => write!(f, "cocktail({n})"),
            GeneratorSpec::Qm { m } => write!(f, "qm({m})"),
            GeneratorSpec::Fig28 => write!(f, "fig28"),
            GeneratorSpec::ComplementOf(inner) => write!(f, "complement({inner})"),
            GeneratorSpec::DisjointUnion(specs) => {
                let parts: Vec<String> = specs.iter().map(|s| s.to_string()).collect();
                write!(f, "union({})", parts.join(","))
            }
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = SpecParser { s: s.trim(), pos: 0 };
        let spec = p.parse_spec()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(spec)
    }
}

struct SpecParser<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> SpecParser<'a> {
    fn err(&self, msg: &str) -> GraphError {
        GraphError::BadGeneratorParams(format!("{msg} at position {} in {:?}", self.pos, self.s))
    }

    fn skip_ws(&mut self) {
        while self.s[self.pos..].starts_with(' ') {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<&'a str, GraphError> {
        self.skip_ws();
        let rest = &self.s[self.pos..];
        let end = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '-' || c == '_'))
            .unwrap_or(rest.len());
        if end == 0 {
            return Err(self.err("expected a family name"));
        }
        self.pos += end;
        Ok(&rest[..end])
    }

    fn int_args(&mut self) -> Result<Vec<usize>, GraphError> {
        let mut args = Vec::new();
        if !self.eat('(') {
            return Ok(args);
        }
        loop {
            self.skip_ws();
            let rest = &self.s[self.pos..];
            let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            if end == 0 {
                return Err(self.err("expected an integer argument"));
            }
            args.push(rest[..end].parse().map_err(|_| self.err("bad integer"))?);
            self.pos += end;
            if self.eat(',') {
                continue;
            }
            if self.eat(')') {
                return Ok(args);
            }
            return Err(self.err("expected ',' or ')'"));
        }
    }

    fn spec_args(&mut self) -> Result<Vec<GeneratorSpec>, GraphError> {
        if !self.eat('(') {
            return Err(self.err("expected '('"));
        }
        let mut specs = Vec::new();
        loop {
            specs.push(self.parse_spec()?);
            if self.eat(',') {
                continue;
            }
            if self.eat(')') {
                return Ok(specs);
            }
            return Err(self.err("expected ',' or ')'"));
        }
    }

    fn parse_spec(&mut self) -> Result<GeneratorSpec, GraphError> {
        let name = self.ident()?;
        let one = |args: &[usize], what: &str| -> Result<usize, GraphError> {
            if args.len() != 1 {
                return Err(GraphError::BadGeneratorParams(format!(
                    "{what} takes exactly one integer"
                )));
            }
            Ok(args[0])
        };
        match name {
            "complete" | "k" => {
                let args = self.int_args()?;
                Ok(GeneratorSpec::Complete { n: one(&args, "complete")? })
            }
            "multipartite" | "complete-multipartite" => {
                let parts = self.int_args()?;
                Ok(GeneratorSpec::CompleteMultipartite { parts })
            }
            "cycle" | "c" => {
                let args = self.int_args()?;
                Ok(GeneratorSpec::Cycle { n: one(&args, "cycle")? })
            }
            "petersen" => Ok(GeneratorSpec::Petersen),
            "cocktail" | "cocktail-party" => {
                let args = self.int_args()?;
                Ok(GeneratorSpec::CocktailParty { n: one(&args, "cocktail")? })
            }
            "qm" | "qm-family" => {
                let args = self.int_args()?;
                Ok(GeneratorSpec::Qm { m: one(&args, "qm")? })
            }
            "fig28" => Ok(GeneratorSpec::Fig28),
            "complement" | "complement-of" => {
                let mut specs = self.spec_args()?;
                if specs.len() != 1 {
                    return Err(GraphError::BadGeneratorParams(
                        "complement takes exactly one spec".into(),
                    ));
                }
                Ok(GeneratorSpec::ComplementOf(Box::new(specs.remove(0))))
            }
            "union" | "disjoint-union" => Ok(GeneratorSpec::DisjointUnion(self.spec_args()?)),
            other => Err(GraphError::BadGeneratorParams(format!("unknown family {other:?}"))),
        }
    }
}
