//! `hookimm`: hook immanantal polynomials and hook immanants of graph
//! matrices from the command line.
//!
//! Exit codes: 0 success, 1 usage, 2 unreadable input, 3 verification
//! failure, 4 size limit.

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hook_immanant::graphs::{
    build_h, cycles_through_edge, cycles_through_vertex, dicycles_through_arc,
    dicycles_through_vertex, families, parse_graph, parse_graph6, AnyGraph, CycleRecord, Digraph,
    MatrixParams, Preset, GRAPH6_PRACTICAL_LIMIT,
};
use hook_immanant::immanant::{hook_poly_bruteforce, immanant_bruteforce, HookIndex};
use hook_immanant::recursion::{EvalContext, RecursionValue};
use hook_immanant::symgroup::hook_character_table;
use hook_immanant::verify::{self, Suite, VerifyOptions};
use hook_immanant::{Error, Exec, Poly, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Largest order handed to the memoized recursion (subsets of the vertex
/// set are kept in memory).
const MAX_RECURSION_ORDER: usize = 20;
/// `auto` switches from the oracle to the recursion at this order.
const AUTO_THRESHOLD: usize = 7;
const MAX_CHARACTER_TABLE: usize = 30;

#[derive(Parser)]
#[command(
    name = "hookimm",
    version,
    about = "Hook immanants of graph matrices beta*D + gamma*A"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hook immanantal polynomials Φ_k(H, x) = d_k(xI - H)
    Poly(ComputeArgs),
    /// Hook immanants d_k(H)
    Imm(ComputeArgs),
    /// Run a property suite against the permutation oracle
    Verify(VerifyArgs),
    /// List the simple cycles through a vertex or edge as CSV
    Cycles(CyclesArgs),
    /// Print the hook character table of S_n as CSV
    Chars {
        #[arg(long)]
        n: usize,
    },
    /// Time the oracle against the memoized recursion, CSV output
    Bench(BenchArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Edge-list file ("n m [directed]" header, 1-based vertices); `-` reads stdin
    #[arg(long, conflicts_with = "graph6", required_unless_present = "graph6")]
    edges: Option<String>,
    /// Undirected graph in graph6
    #[arg(long)]
    graph6: Option<String>,
    /// Read the edge list as arcs even without the `directed` header flag
    #[arg(long, conflicts_with = "graph6")]
    directed: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixName {
    Laplacian,
    Signless,
    Adjacency,
    AAlpha,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Vertex,
    Edge,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, value_enum, conflicts_with_all = ["beta", "gamma"])]
    matrix: Option<MatrixName>,
    /// Parameter of the A_alpha preset, in [0, 1]
    #[arg(long)]
    alpha: Option<Rational>,
    #[arg(long, requires = "gamma", allow_hyphen_values = true)]
    beta: Option<Rational>,
    #[arg(long, requires = "beta", allow_hyphen_values = true)]
    gamma: Option<Rational>,
    #[arg(long, value_enum, default_value = "auto")]
    method: Method,
    /// Hook index, or `all` for k = 1..n
    #[arg(long, default_value = "all", allow_hyphen_values = true)]
    k: String,
    /// Pivot vertex (1-based) for the vertex method
    #[arg(long)]
    pivot: Option<usize>,
    /// Edge `u,v` (1-based; the arc u -> v for digraphs) for the edge method
    #[arg(long)]
    edge: Option<String>,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: Suite,
    /// Largest order enumerated (at most 6 for graph suites, 8 for trees and characters)
    #[arg(long, default_value_t = 5)]
    n: usize,
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Random digraphs on 5-6 vertices in the digraph suite
    #[arg(long, default_value_t = 500)]
    samples: usize,
    /// Run instances on the calling thread only
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct CyclesArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, conflicts_with = "edge", required_unless_present = "edge")]
    vertex: Option<usize>,
    #[arg(long)]
    edge: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Random,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, default_value_t = 1)]
    min_n: usize,
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 2,
            Error::SizeLimit { .. } => 4,
            _ => 1,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn load_graph(args: &GraphArgs) -> CliResult<AnyGraph> {
    if let Some(code) = &args.graph6 {
        let g = parse_graph6(code.trim())?;
        if g.order() > GRAPH6_PRACTICAL_LIMIT {
            return Err(Error::SizeLimit {
                what: "graph6 input",
                got: g.order(),
                limit: GRAPH6_PRACTICAL_LIMIT,
            }
            .into());
        }
        return Ok(g.into());
    }
    let path = args
        .edges
        .as_deref()
        .expect("clap requires --edges or --graph6");
    let mut text = String::new();
    let read = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(drop)
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::input(format!("cannot read {path}: {e}")))?;
    let g = parse_graph(&text)?;
    Ok(match g {
        AnyGraph::Undirected(g) if args.directed => {
            Digraph::from_arcs(g.order(), &g.edges())?.into()
        }
        g => g,
    })
}

fn matrix_params(args: &ComputeArgs) -> CliResult<MatrixParams> {
    if args.alpha.is_some() && !matches!(args.matrix, Some(MatrixName::AAlpha)) {
        return Err(Failure::usage(
            "--alpha is only valid with --matrix a-alpha",
        ));
    }
    let preset = match (args.matrix, &args.beta, &args.gamma) {
        (Some(MatrixName::Laplacian), ..) => Preset::Laplacian,
        (Some(MatrixName::Signless), ..) => Preset::Signless,
        (Some(MatrixName::Adjacency), ..) => Preset::Adjacency,
        (Some(MatrixName::AAlpha), ..) => {
            let alpha = args
                .alpha
                .clone()
                .ok_or_else(|| Failure::usage("--matrix a-alpha needs --alpha"))?;
            Preset::AAlpha(alpha)
        }
        (None, Some(beta), Some(gamma)) => {
            return Ok(MatrixParams::new(beta.clone(), gamma.clone()));
        }
        _ => {
            return Err(Failure::usage(
                "give either --matrix or both --beta and --gamma",
            ))
        }
    };
    preset.params().map_err(|e| Failure::usage(e.to_string()))
}

fn parse_k(k: &str, n: usize) -> CliResult<Vec<i64>> {
    if k == "all" {
        return Ok((1..=n as i64).collect());
    }
    k.parse()
        .map(|k| vec![k])
        .map_err(|_| Failure::usage(format!("--k expects an integer or `all`, got `{k}`")))
}

/// `u,v` or `u-v`, 1-based, to a 0-based pair.
fn parse_edge(s: &str) -> CliResult<(usize, usize)> {
    let parts: Vec<&str> = s.split([',', '-']).map(str::trim).collect();
    match parts.as_slice() {
        [u, v] => match (u.parse::<usize>(), v.parse::<usize>()) {
            (Ok(u), Ok(v)) if u >= 1 && v >= 1 => Ok((u - 1, v - 1)),
            _ => Err(Failure::usage(format!("bad edge `{s}`"))),
        },
        _ => Err(Failure::usage(format!(
            "edge must look like `u,v`, got `{s}`"
        ))),
    }
}

fn zero_based_vertex(v: usize) -> CliResult<usize> {
    v.checked_sub(1)
        .ok_or_else(|| Failure::usage("vertices are numbered from 1"))
}

/// The computation chosen by `--method` with its pivot or edge resolved.
enum Plan {
    Oracle,
    General,
    Vertex(usize),
    Edge(usize, usize),
}

impl Plan {
    fn label(&self) -> &'static str {
        match self {
            Plan::Oracle => "oracle",
            Plan::General => "recursion",
            Plan::Vertex(_) => "vertex",
            Plan::Edge(..) => "edge",
        }
    }
}

fn plan(args: &ComputeArgs, g: &AnyGraph) -> CliResult<Plan> {
    if args.pivot.is_some() && args.method != Method::Vertex {
        return Err(Failure::usage("--pivot needs --method vertex"));
    }
    if args.edge.is_some() && args.method != Method::Edge {
        return Err(Failure::usage("--edge needs --method edge"));
    }
    let n = g.order();
    let plan = match args.method {
        Method::Oracle => Plan::Oracle,
        Method::Auto if n < AUTO_THRESHOLD => Plan::Oracle,
        Method::Auto => Plan::General,
        Method::Vertex => {
            let v = zero_based_vertex(args.pivot.unwrap_or(1))?;
            if v >= n {
                return Err(Error::UnknownVertex(v + 1).into());
            }
            Plan::Vertex(v)
        }
        Method::Edge => {
            let (u, v) = match &args.edge {
                Some(e) => parse_edge(e)?,
                None => {
                    let edges = match g {
                        AnyGraph::Undirected(g) => g.edges(),
                        AnyGraph::Directed(d) => d.arcs(),
                    };
                    *edges.first().ok_or_else(|| {
                        Failure::usage("the edge method needs a graph with an edge")
                    })?
                }
            };
            Plan::Edge(u, v)
        }
    };
    if !matches!(plan, Plan::Oracle) && n > MAX_RECURSION_ORDER {
        return Err(Error::SizeLimit {
            what: "graph order for the recursion",
            got: n,
            limit: MAX_RECURSION_ORDER,
        }
        .into());
    }
    Ok(plan)
}

fn recurse<V: RecursionValue>(ctx: &mut EvalContext<V>, plan: &Plan, k: i64) -> CliResult<V> {
    let value = match *plan {
        Plan::General => ctx.general(0, k),
        Plan::Vertex(v) => ctx.vertex(v, k)?,
        Plan::Edge(u, v) => ctx.edge(u, v, k).map_err(|e| match e {
            Error::MissingEdge(a, b) => {
                Failure::usage(format!("edge {}-{} is not present", a + 1, b + 1))
            }
            Error::UnknownVertex(v) => Failure::usage(format!("unknown vertex {}", v + 1)),
            e => e.into(),
        })?,
        Plan::Oracle => unreachable!("oracle is not a recursion"),
    };
    Ok(value)
}

#[derive(Serialize)]
struct PolyRecord {
    n: usize,
    k: i64,
    beta: Rational,
    gamma: Rational,
    method: &'static str,
    coeffs: Poly,
}

#[derive(Serialize)]
struct ImmRecord {
    n: usize,
    k: i64,
    beta: Rational,
    gamma: Rational,
    method: &'static str,
    value: Rational,
}

fn warn_out_of_range(ks: &[i64], n: usize) {
    for k in ks {
        if *k < 1 || *k > n as i64 {
            eprintln!("warning: k = {k} is outside 1..={n}; the result is zero");
        }
    }
}

fn emit<T: Serialize>(
    records: &[T],
    format: Format,
    value_column: &str,
    human: impl Fn(&T) -> String,
    csv: impl Fn(&T) -> String,
) {
    match format {
        Format::Json => {
            let text = if records.len() == 1 {
                serde_json::to_string(&records[0])
            } else {
                serde_json::to_string(records)
            };
            println!("{}", text.expect("records serialize"));
        }
        Format::Csv => {
            println!("n,k,beta,gamma,method,{value_column}");
            records.iter().for_each(|r| println!("{}", csv(r)));
        }
        Format::Human => records.iter().for_each(|r| println!("{}", human(r))),
    }
}

fn cmd_poly(args: &ComputeArgs) -> CliResult {
    let g = load_graph(&args.graph)?;
    let p = matrix_params(args)?;
    let n = g.order();
    let ks = parse_k(&args.k, n)?;
    warn_out_of_range(&ks, n);
    let plan = plan(args, &g)?;
    let mut ctx = EvalContext::<Poly>::new(g.clone(), p.clone());
    let m = build_h(&g, &p);
    let records = ks
        .iter()
        .map(|&k| {
            let coeffs = match plan {
                Plan::Oracle => hook_poly_bruteforce(&m, HookIndex(k))?,
                _ => recurse(&mut ctx, &plan, k)?,
            };
            Ok(PolyRecord {
                n,
                k,
                beta: p.beta.clone(),
                gamma: p.gamma.clone(),
                method: plan.label(),
                coeffs,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    emit(
        &records,
        args.format,
        "coeffs",
        |r| format!("Φ_{}(x) = {}", r.k, r.coeffs),
        |r| {
            format!(
                "{},{},{},{},{},{}",
                r.n,
                r.k,
                r.beta,
                r.gamma,
                r.method,
                r.coeffs.to_strings().join(" ")
            )
        },
    );
    Ok(())
}

fn cmd_imm(args: &ComputeArgs) -> CliResult {
    let g = load_graph(&args.graph)?;
    let p = matrix_params(args)?;
    let n = g.order();
    let ks = parse_k(&args.k, n)?;
    warn_out_of_range(&ks, n);
    let plan = plan(args, &g)?;
    let mut ctx = EvalContext::<Rational>::new(g.clone(), p.clone());
    let m = build_h(&g, &p);
    let records = ks
        .iter()
        .map(|&k| {
            let value = match plan {
                Plan::Oracle => immanant_bruteforce(&m, HookIndex(k))?,
                _ => recurse(&mut ctx, &plan, k)?,
            };
            Ok(ImmRecord {
                n,
                k,
                beta: p.beta.clone(),
                gamma: p.gamma.clone(),
                method: plan.label(),
                value,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    emit(
        &records,
        args.format,
        "value",
        |r| format!("d_{} = {}", r.k, r.value),
        |r| {
            format!(
                "{},{},{},{},{},{}",
                r.n, r.k, r.beta, r.gamma, r.method, r.value
            )
        },
    );
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> CliResult {
    let opts = VerifyOptions {
        n: args.n,
        seed: args.seed,
        exec: if args.sequential {
            Exec::Sequential
        } else {
            Exec::Parallel
        },
        random_digraphs: args.samples,
    };
    let reports = verify::run(args.suite, &opts)?;
    for r in &reports {
        println!("{} {r}", if r.passed() { "PASS" } else { "FAIL" });
    }
    if reports.iter().all(verify::Report::passed) {
        Ok(())
    } else {
        Err(Failure {
            code: 3,
            message: "verification failed".into(),
        })
    }
}

fn cmd_cycles(args: &CyclesArgs) -> CliResult {
    let g = load_graph(&args.graph)?;
    let bad_vertex = |e: Error| match e {
        Error::UnknownVertex(v) => Failure::usage(format!("unknown vertex {}", v + 1)),
        Error::MissingEdge(u, v) => {
            Failure::usage(format!("edge {}-{} is not present", u + 1, v + 1))
        }
        e => e.into(),
    };
    let cycles: Vec<CycleRecord> = match (&g, args.vertex, &args.edge) {
        (AnyGraph::Undirected(g), Some(v), _) => cycles_through_vertex(g, zero_based_vertex(v)?),
        (AnyGraph::Directed(d), Some(v), _) => dicycles_through_vertex(d, zero_based_vertex(v)?),
        (AnyGraph::Undirected(g), None, Some(e)) => {
            let (u, v) = parse_edge(e)?;
            cycles_through_edge(g, u, v)
        }
        (AnyGraph::Directed(d), None, Some(e)) => {
            let (u, v) = parse_edge(e)?;
            dicycles_through_arc(d, u, v)
        }
        _ => unreachable!("clap requires --vertex or --edge"),
    }
    .map_err(bad_vertex)?;
    println!("length,vertices");
    for c in cycles {
        let verts: Vec<String> = c.vertices().iter().map(|v| (v + 1).to_string()).collect();
        println!("{},{}", c.len(), verts.join(" "));
    }
    Ok(())
}

fn cmd_chars(n: usize) -> CliResult {
    if n > MAX_CHARACTER_TABLE {
        return Err(Error::SizeLimit {
            what: "character table",
            got: n,
            limit: MAX_CHARACTER_TABLE,
        }
        .into());
    }
    let (classes, rows) = hook_character_table(n)?;
    let header: Vec<String> = classes
        .iter()
        .map(|c| {
            c.parts()
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    println!("k,{}", header.join(","));
    for (k, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("{},{}", k + 1, cells.join(","));
    }
    Ok(())
}

fn cmd_bench(args: &BenchArgs) -> CliResult {
    let limit = hook_immanant::symgroup::MAX_ENUMERATION;
    if args.max_n > limit {
        return Err(Error::SizeLimit {
            what: "benchmark order",
            got: args.max_n,
            limit,
        }
        .into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let p = MatrixParams::laplacian();
    println!("n,method,milliseconds");
    for n in args.min_n.max(1)..=args.max_n {
        let g: AnyGraph = match args.family {
            Family::Path => families::path(n)?.into(),
            Family::Cycle => families::cycle(n)?.into(),
            Family::Complete => families::complete(n)?.into(),
            Family::Random => families::random_graph(n, 0.5, &mut rng)?.into(),
        };
        let k = n.div_ceil(2) as i64;
        let start = Instant::now();
        let by_oracle = hook_poly_bruteforce(&build_h(&g, &p), HookIndex(k))?;
        let oracle_ms = start.elapsed().as_secs_f64() * 1e3;
        let start = Instant::now();
        let by_recursion = EvalContext::<Poly>::new(g, p.clone()).general(0, k);
        let recursion_ms = start.elapsed().as_secs_f64() * 1e3;
        if by_oracle != by_recursion {
            return Err(Failure {
                code: 3,
                message: format!("oracle and recursion disagree at n = {n}"),
            });
        }
        println!("{n},oracle,{oracle_ms:.3}");
        println!("{n},recursion,{recursion_ms:.3}");
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Poly(args) => cmd_poly(&args),
        Command::Imm(args) => cmd_imm(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Cycles(args) => cmd_cycles(&args),
        Command::Chars { n } => cmd_chars(n),
        Command::Bench(args) => cmd_bench(&args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
