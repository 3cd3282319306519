//! Command-line driver: solve / verify / sweep / generate / census / survey
//! over graph6 inputs, one self-contained JSON or CSV record per graph,
//! parallel across graphs.

mod report;

use std::io::{Read, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use inpart::generate::GeneratorSpec;
use inpart::graph::{Graph, VertexSet};
use inpart::graph6;
use inpart::mis::max_independent_set;
use inpart::partition::{classify, Partition, Ratio};
use inpart::search::{
    find_exact_internal, find_internal_exhaustive, find_q_external_potential, min_cut_fixed_size,
    refine_with_default_start, threshold_sweep, MinCutMode, SearchOutcome, SearchStatus,
    DEFAULT_NODE_BUDGET,
};
use inpart::structured::{
    analyze_n_minus_4, bisection_from_matching, edge_color_cubic, external_partition_census,
    has_external_bisection, solve_n_minus_3, CensusFilter, NMinus4Route,
};

use report::{CsvRecord, Record};

#[derive(Parser)]
#[command(
    name = "inpart",
    version,
    about = "Solvers, verifiers, generators and censuses for internal and external graph partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Exhaustive oracle: a definite verdict for q-internal partitions.
    Exact,
    /// Swap-descent minimum-cut near-bisection, classified at q.
    Descent,
    /// Potential ascent: always finds a q-external partition.
    Potential,
    /// Threshold sweep over all admissible integral thresholds.
    Sweep,
    /// Peeling refinement from the default minimum-cut start (even degree).
    Refine,
    /// Degree-dispatched closed forms for d = n-2, n-3, n-4.
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Filter {
    All,
    Bisections,
    Uneven,
}

impl From<Filter> for CensusFilter {
    fn from(f: Filter) -> CensusFilter {
        match f {
            Filter::All => CensusFilter::All,
            Filter::Bisections => CensusFilter::BisectionsOnly,
            Filter::Uneven => CensusFilter::UnevenOnly,
        }
    }
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Output format for report records.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Worker threads for cross-graph parallelism (0 = rayon default).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Node budget for exhaustive searches.
    #[arg(long = "budget-nodes", default_value_t = DEFAULT_NODE_BUDGET)]
    budget_nodes: u64,
    /// Seed for the seeded procedures (descent starts).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Search each input graph for a q-internal partition.
    Solve {
        #[arg(long, default_value = "1/2")]
        q: Ratio,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        #[command(flatten)]
        common: CommonArgs,
        /// graph6 files, one graph per line; `-` reads standard input.
        inputs: Vec<String>,
    },
    /// Classify a given partition against each input graph.
    Verify {
        #[arg(long, default_value = "1/2")]
        q: Ratio,
        /// Side-A vertex mask as hex, e.g. 0x07.
        #[arg(long)]
        partition: String,
        #[command(flatten)]
        common: CommonArgs,
        inputs: Vec<String>,
    },
    /// Run the threshold sweep on each (regular) input graph.
    Sweep {
        #[command(flatten)]
        common: CommonArgs,
        inputs: Vec<String>,
    },
    /// Count external partitions of each input graph.
    Census {
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        #[command(flatten)]
        common: CommonArgs,
        inputs: Vec<String>,
    },
    /// Emit a named graph as graph6 on standard output.
    Generate {
        /// Family: complete, multipartite, cycle, petersen, cocktail, qm,
        /// fig28, complement, union; or a full spec string like
        /// `union(petersen,complete(4))`.
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Comma-separated part sizes for multipartite.
        #[arg(long)]
        parts: Option<String>,
        /// Inner spec(s) for complement/union, comma-separated.
        #[arg(long)]
        of: Option<String>,
        /// Emit the "u v" edge list instead of graph6.
        #[arg(long)]
        edges: bool,
    },
    /// Run a named check bundle.
    Survey {
        /// Preset: nonexistence-table, petersen-facts, cubic-bisection.
        preset: String,
        /// graph6 inputs for presets that take them (cubic-bisection).
        #[arg(long)]
        input: Vec<String>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(failures) => {
            if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<usize> {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve { q, method, common, inputs } => {
            let records = run_per_graph(&inputs, &common, move |item| solve_one(item, q, method))?;
            emit(&records, common.format)
        }
        Command::Verify { q, partition, common, inputs } => {
            let mask = VertexSet::from_hex_str(&partition)
                .with_context(|| format!("bad --partition mask {partition:?}"))?;
            let records = run_per_graph(&inputs, &common, move |item| verify_one(item, q, mask))?;
            emit(&records, common.format)
        }
        Command::Sweep { common, inputs } => {
            let records = run_per_graph(&inputs, &common, sweep_one)?;
            emit(&records, common.format)
        }
        Command::Census { filter, common, inputs } => {
            let records =
                run_per_graph(&inputs, &common, move |item| census_one(item, filter.into()))?;
            emit(&records, common.format)
        }
        Command::Generate { family, n, m, parts, of, edges } => {
            let spec = build_spec(&family, n, m, parts.as_deref(), of.as_deref())?;
            let g = spec.build()?;
            if edges {
                print!("{}", g.to_edge_list());
            } else {
                println!("{}", graph6::encode(&g));
            }
            Ok(0)
        }
        Command::Survey { preset, input, common } => {
            let records = survey(&preset, &input, &common)?;
            emit(&records, common.format)
        }
    }
}

/// A parsed input line: source file, global index, graph or parse error.
struct InputItem {
    source: String,
    index: usize,
    graph: Result<Graph, String>,
}

fn read_inputs(inputs: &[String]) -> Result<Vec<InputItem>> {
    if inputs.is_empty() {
        bail!("no inputs given (use `-` for standard input)");
    }
    let mut items = Vec::new();
    let mut index = 0;
    for path in inputs {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).context("reading standard input")?;
            buf
        } else {
            std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
        };
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            items.push(InputItem {
                source: path.clone(),
                index,
                graph: graph6::decode(line).map_err(|e| e.to_string()),
            });
            index += 1;
        }
    }
    Ok(items)
}

/// Runs `f` over every input graph with cross-graph parallelism; records come
/// back in input order.
fn run_per_graph<F>(inputs: &[String], common: &CommonArgs, f: F) -> Result<Vec<Record>>
where
    F: Fn(GraphItem<'_>) -> Record + Sync + Send,
{
    let items = read_inputs(inputs)?;
    let budget = common.budget_nodes;
    let seed = common.seed;
    let work = |item: &InputItem| -> Record {
        match &item.graph {
            Err(e) => Record::new(item.index, &item.source, "parse").fail(e.clone()),
            Ok(g) => f(GraphItem { g, index: item.index, source: &item.source, budget, seed }),
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(common.jobs)
        .build()
        .context("building worker pool")?;
    let mut records: Vec<Record> = pool.install(|| items.par_iter().map(work).collect());
    records.sort_by_key(|r| r.index);
    Ok(records)
}

struct GraphItem<'a> {
    g: &'a Graph,
    index: usize,
    source: &'a str,
    budget: u64,
    seed: u64,
}

fn base_record(item: &GraphItem<'_>, command: &str) -> Record {
    let mut r = Record::new(item.index, item.source, command);
    r.graph6 = Some(graph6::encode(item.g));
    r.n = Some(item.g.n());
    r
}

fn attach_outcome(r: &mut Record, g: &Graph, q: Ratio, outcome: &SearchOutcome) {
    r.status = match outcome.status {
        SearchStatus::Found => "found",
        SearchStatus::ExhaustedNone => "exhausted_none",
        SearchStatus::BudgetExceeded => "budget_exceeded",
    }
    .into();
    r.stats = outcome.stats;
    if let Some(p) = &outcome.partition {
        attach_partition(r, g, q, p);
    }
}

fn attach_partition(r: &mut Record, g: &Graph, q: Ratio, p: &Partition) {
    r.witness = Some(p.side_a().to_string());
    r.witness_size = Some(p.size_a());
    if let Ok(report) = classify(g, p, q) {
        r.cut = Some(report.cut);
        r.flags = Some(report.flags);
    }
}

fn solve_one(item: GraphItem<'_>, q: Ratio, method: Method) -> Record {
    let g = item.g;
    let mut r = base_record(&item, "solve");
    r.q = Some(q);
    r.method = Some(
        match method {
            Method::Exact => "exact",
            Method::Descent => "descent",
            Method::Potential => "potential",
            Method::Sweep => "sweep",
            Method::Refine => "refine",
            Method::Structured => "structured",
        }
        .into(),
    );

    match method {
        Method::Exact => {
            let out = find_internal_exhaustive(g, q, item.budget);
            attach_outcome(&mut r, g, q, &out);
        }
        Method::Descent => {
            let k = g.n() / 2;
            match min_cut_fixed_size(g, k, MinCutMode::SwapDescent { seed: item.seed }, 0) {
                Ok((p, cut)) => {
                    attach_partition(&mut r, g, q, &p);
                    r.cut = Some(cut);
                    let internal = r.flags.map(|f| f.q_internal).unwrap_or(false);
                    r.status = if internal { "found".into() } else { "not_found".into() };
                }
                Err(e) => return r.fail(e.to_string()),
            }
        }
        Method::Potential => {
            let out = find_q_external_potential(g, q);
            attach_outcome(&mut r, g, q, &out);
        }
        Method::Sweep => return sweep_one(item),
        Method::Refine => match refine_with_default_start(g, item.seed) {
            Ok(out) => attach_outcome(&mut r, g, q, &out),
            Err(e) => return r.fail(e.to_string()),
        },
        Method::Structured => {
            let n = g.n();
            match g.regular_degree() {
                Some(d) if n >= 2 && d == n - 2 => match bisection_from_matching(g) {
                    Ok(p) => {
                        r.status = "found".into();
                        attach_partition(&mut r, g, q, &p);
                    }
                    Err(e) => return r.fail(e.to_string()),
                },
                Some(d) if n >= 3 && d == n - 3 => match solve_n_minus_3(g) {
                    Ok(out) => attach_outcome(&mut r, g, q, &out),
                    Err(e) => return r.fail(e.to_string()),
                },
                Some(d) if n >= 4 && d == n - 4 => match analyze_n_minus_4(g, item.budget) {
                    Ok(rep) => {
                        r.route = Some(rep.route);
                        r.complement_class = Some(rep.complement_class);
                        r.status = match rep.route {
                            NMinus4Route::NoPartition => "exhausted_none".into(),
                            _ => "found".into(),
                        };
                        if let Some(p) = rep.witness {
                            attach_partition(&mut r, g, q, &p);
                        }
                    }
                    Err(e) => return r.fail(e.to_string()),
                },
                Some(d) => {
                    return r.fail(format!(
                        "no structured solver for degree {d} at order {n} (need d in {{n-2, n-3, n-4}})"
                    ))
                }
                None => return r.fail("structured solvers need a regular graph".into()),
            }
        }
    }
    r
}

fn verify_one(item: GraphItem<'_>, q: Ratio, mask: VertexSet) -> Record {
    let g = item.g;
    let mut r = base_record(&item, "verify");
    r.q = Some(q);
    let p = match Partition::new(mask, g.n()) {
        Ok(p) => p,
        Err(e) => return r.fail(e.to_string()),
    };
    match classify(g, &p, q) {
        Ok(report) => {
            r.witness = Some(p.side_a().to_string());
            r.witness_size = Some(p.size_a());
            r.cut = Some(report.cut);
            r.flags = Some(report.flags);
        }
        Err(e) => return r.fail(e.to_string()),
    }
    r
}

fn sweep_one(item: GraphItem<'_>) -> Record {
    let g = item.g;
    let mut r = base_record(&item, "sweep");
    match threshold_sweep(g) {
        Ok(sweep) => {
            r.stats.moves = sweep.moves;
            r.entries = Some(sweep.entries);
            r.gaps = Some(sweep.gaps);
        }
        Err(e) => return r.fail(e.to_string()),
    }
    r
}

fn census_one(item: GraphItem<'_>, filter: CensusFilter) -> Record {
    let g = item.g;
    let mut r = base_record(&item, "census");
    r.filter = Some(filter);
    match external_partition_census(g, filter, item.budget) {
        Ok(report) => {
            r.count = Some(report.count);
            r.stats.nodes = report.nodes;
            if let Some(p) = report.first_witness {
                attach_partition(&mut r, g, Ratio::ONE_HALF, &p);
            }
        }
        Err(e) => return r.fail(e.to_string()),
    }
    r
}

fn build_spec(
    family: &str,
    n: Option<usize>,
    m: Option<usize>,
    parts: Option<&str>,
    of: Option<&str>,
) -> Result<GeneratorSpec> {
    let need = |opt: Option<usize>, what: &str| {
        opt.with_context(|| format!("family {family:?} requires --{what}"))
    };
    let spec = match family {
        "complete" => GeneratorSpec::Complete { n: need(n, "n")? },
        "multipartite" => {
            let parts = parts.context("multipartite requires --parts, e.g. --parts 3,3,3")?;
            let parts: Vec<usize> = parts
                .split(',')
                .map(|s| s.trim().parse().context("bad part size"))
                .collect::<Result<_>>()?;
            GeneratorSpec::CompleteMultipartite { parts }
        }
        "cycle" => GeneratorSpec::Cycle { n: need(n, "n")? },
        "petersen" => GeneratorSpec::Petersen,
        "cocktail" => GeneratorSpec::CocktailParty { n: need(n, "n")? },
        "qm" => GeneratorSpec::Qm { m: need(m, "m")? },
        "fig28" => GeneratorSpec::Fig28,
        "complement" => {
            let inner = of.context("complement requires --of SPEC")?;
            GeneratorSpec::ComplementOf(Box::new(inner.parse()?))
        }
        "union" => {
            let inner = of.context("union requires --of SPEC[,SPEC...]")?;
            GeneratorSpec::DisjointUnion(split_specs(inner)?)
        }
        // Fall back to the full spec-string grammar.
        other => other.parse()?,
    };
    Ok(spec)
}

/// Splits top-level comma-separated specs, respecting parentheses.
fn split_specs(s: &str) -> Result<Vec<GeneratorSpec>> {
    let mut specs = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                specs.push(s[start..i].parse()?);
                start = i + 1;
            }
            _ => {}
        }
    }
    specs.push(s[start..].parse()?);
    Ok(specs)
}

fn survey(preset: &str, input: &[String], common: &CommonArgs) -> Result<Vec<Record>> {
    match preset {
        "nonexistence-table" => survey_nonexistence(common),
        "petersen-facts" => survey_petersen(common),
        "cubic-bisection" => survey_cubic_bisection(input, common),
        other => bail!(
            "unknown survey preset {other:?} (have: nonexistence-table, petersen-facts, cubic-bisection)"
        ),
    }
}

/// Named graphs with no internal partition: the exhaustive oracle must
/// return exhausted_none on each.
fn survey_nonexistence(common: &CommonArgs) -> Result<Vec<Record>> {
    let table: Vec<(&str, GeneratorSpec)> = vec![
        ("K4", GeneratorSpec::Complete { n: 4 }),
        ("K3,3", GeneratorSpec::CompleteMultipartite { parts: vec![3, 3] }),
        ("K5", GeneratorSpec::Complete { n: 5 }),
        ("K7", GeneratorSpec::Complete { n: 7 }),
        ("K3,3,3", GeneratorSpec::CompleteMultipartite { parts: vec![3, 3, 3] }),
        ("Q3", GeneratorSpec::Qm { m: 3 }),
        ("Q4", GeneratorSpec::Qm { m: 4 }),
    ];
    let mut records = Vec::new();
    for (i, (name, spec)) in table.iter().enumerate() {
        let g = spec.build()?;
        let mut r = Record::new(i, "generate", "survey");
        r.method = Some("nonexistence-table".into());
        r.check = Some(format!("{name} has no internal partition"));
        r.graph6 = Some(graph6::encode(&g));
        r.n = Some(g.n());
        r.q = Some(Ratio::ONE_HALF);
        let out = find_internal_exhaustive(&g, Ratio::ONE_HALF, common.budget_nodes);
        attach_outcome(&mut r, &g, Ratio::ONE_HALF, &out);
        r.expected = Some("exhausted_none".into());
        r.actual = Some(r.status.clone());
        r.pass = Some(r.status == "exhausted_none");
        records.push(r);
    }
    Ok(records)
}

fn survey_petersen(common: &CommonArgs) -> Result<Vec<Record>> {
    let g = inpart::generate::petersen();
    let cg = g.complement();
    let mut records = Vec::new();
    let mut push = |check: &str, expected: String, actual: String, graph: &Graph| {
        let mut r = Record::new(records.len(), "generate", "survey");
        r.method = Some("petersen-facts".into());
        r.check = Some(check.into());
        r.graph6 = Some(graph6::encode(graph));
        r.n = Some(graph.n());
        r.pass = Some(expected == actual);
        r.status = if expected == actual { "ok".into() } else { "mismatch".into() };
        r.expected = Some(expected);
        r.actual = Some(actual);
        records.push(r);
    };

    let bis = external_partition_census(&g, CensusFilter::BisectionsOnly, common.budget_nodes)?;
    push("Petersen external bisections", "0".into(), bis.count.to_string(), &g);

    let alpha = max_independent_set(&g)?.len();
    push("Petersen independence number", "4".into(), alpha.to_string(), &g);

    let internal = find_internal_exhaustive(&cg, Ratio::ONE_HALF, common.budget_nodes);
    push(
        "complement(Petersen) internal partition",
        "found".into(),
        format!("{:?}", internal.status).to_lowercase(),
        &cg,
    );

    let bisect = find_exact_internal(&cg, Ratio::ONE_HALF, common.budget_nodes);
    push(
        "complement(Petersen) internal bisection",
        "exhaustednone".into(),
        format!("{:?}", bisect.status).to_lowercase(),
        &cg,
    );
    Ok(records)
}

/// For each input cubic graph: class verdict and external-bisection
/// existence (informational, no expectation).
fn survey_cubic_bisection(input: &[String], common: &CommonArgs) -> Result<Vec<Record>> {
    if input.is_empty() {
        bail!("cubic-bisection needs --input FILE");
    }
    let items = read_inputs(input)?;
    let budget = common.budget_nodes;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(common.jobs).build()?;
    let records: Vec<Record> = pool.install(|| {
        items
            .par_iter()
            .map(|item| {
                let mut r = Record::new(item.index, &item.source, "survey");
                r.method = Some("cubic-bisection".into());
                let g = match &item.graph {
                    Ok(g) => g,
                    Err(e) => return r.fail(e.clone()),
                };
                r.graph6 = Some(graph6::encode(g));
                r.n = Some(g.n());
                if g.regular_degree() != Some(3) {
                    return r.fail("input graph is not cubic".into());
                }
                match edge_color_cubic(g) {
                    Ok(c) => r.complement_class = Some(c.verdict),
                    Err(e) => return r.fail(e.to_string()),
                }
                match has_external_bisection(g, budget) {
                    Ok(Some(p)) => {
                        r.status = "found".into();
                        attach_partition(&mut r, g, Ratio::ONE_HALF, &p);
                    }
                    Ok(None) => r.status = "exhausted_none".into(),
                    Err(e) => return r.fail(e.to_string()),
                }
                r
            })
            .collect()
    });
    Ok(records)
}

/// Prints records and returns the number of failures (errors or failed
/// expectations).
fn emit(records: &[Record], format: OutputFormat) -> Result<usize> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        OutputFormat::Json => {
            for r in records {
                serde_json::to_writer(&mut out, r)?;
                writeln!(out)?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(CsvRecord::from(r))?;
            }
            w.flush()?;
        }
    }
    Ok(records
        .iter()
        .filter(|r| r.status == "error" || r.pass == Some(false))
        .count())
}
