//! `wgraph`: generate graphs, run algorithms on edge-list files, check the
//! algorithms against brute force and time them.

use std::fs::{self, File, OpenOptions};
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use wgraph::apsp::{faster_all_pairs, floyd_warshall, johnson, slow_all_pairs, DistanceMatrix};
use wgraph::harness::{self, Algorithm, GeneratorSpec, Model, Suite};
use wgraph::mst::{boruvka_mst, kruskal_mst, prim_matrix_mst, prim_mst};
use wgraph::sssp::{bellman_ford, dag_shortest_path, dijkstra, dijkstra_matrix};
use wgraph::{topological_sort, Edge, Error, Graph, SsspResult};

#[derive(Parser)]
#[command(name = "wgraph", version, about = "Weighted graph algorithms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random graph as an edge list.
    Generate(GenerateArgs),
    /// Run one algorithm on an edge-list file and print the result as CSV.
    Run(RunArgs),
    /// Check the algorithms against brute-force oracles on random graphs.
    Verify(VerifyArgs),
    /// Time an algorithm over growing graphs and fit a log-log slope.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// random-gnp, random-connected, complete, dag or tree-plus-edges.
    #[arg(long)]
    model: Model,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    /// Inclusive weight range as `lo:hi`.
    #[arg(long, default_value = "1:100", value_parser = parse_range)]
    weights: (f64, f64),
    /// Integer weights.
    #[arg(long)]
    int: bool,
    #[arg(long)]
    directed: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    algo: Algorithm,
    #[arg(long)]
    graph: PathBuf,
    /// Start node for Prim and the single-source algorithms, or a row
    /// filter for the all-pairs ones.
    #[arg(long)]
    source: Option<String>,
    /// Only report this target.
    #[arg(long)]
    target: Option<String>,
    /// Add a column with the path, nodes separated by spaces.
    #[arg(long)]
    show_path: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// mst, sssp or apsp.
    #[arg(long)]
    suite: Suite,
    #[arg(long, default_value_t = 100)]
    instances: usize,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    algo: Algorithm,
    /// Comma-separated node counts in ascending order.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[arg(long, default_value = "complete")]
    model: Model,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long, default_value = "1:100", value_parser = parse_range)]
    weights: (f64, f64),
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV file to append to; created with a header if missing.
    #[arg(long)]
    out: PathBuf,
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(lo)?, num(hi)?))
}

/// Why a command stopped. Each kind has its own exit status.
enum Failure {
    Verification(String),
    Usage(String),
    Input(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Input(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownAlgorithm(_) | Error::InvalidSpec(_) | Error::MissingNode(_) | Error::NoPath(_) => {
                Failure::Usage(e.to_string())
            }
            // malformed files and graphs the chosen algorithm cannot accept
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn io_failure(context: &str) -> impl Fn(io::Error) -> Failure + '_ {
    move |e| Failure::Input(format!("{context}: {e}"))
}

fn csv_failure(e: csv::Error) -> Failure {
    Failure::Input(format!("writing output: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Generate(args) => generate(args),
        Command::Run(args) => run(args),
        Command::Verify(args) => verify(args),
        Command::Bench(args) => bench(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("wgraph: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn generate(args: GenerateArgs) -> Result<(), Failure> {
    let spec = GeneratorSpec::new(args.model, args.n)
        .density(args.density)
        .weights(args.weights.0, args.weights.1)
        .integer(args.int)
        .directed(args.directed || args.model == Model::Dag)
        .seed(args.seed);
    let g = harness::generate(&spec)?;
    match args.out {
        Some(path) => {
            let mut file = io::BufWriter::new(File::create(&path).map_err(io_failure("creating output"))?);
            harness::write_edge_list(&g, &mut file)?;
            file.flush().map_err(io_failure("writing output"))?;
        }
        None => harness::write_edge_list(&g, &mut io::stdout().lock())?,
    }
    Ok(())
}

fn run(args: RunArgs) -> Result<(), Failure> {
    let text = fs::read_to_string(&args.graph).map_err(io_failure(&args.graph.to_string_lossy()))?;
    let g: Graph<String> = harness::parse_edge_list(&text)?;
    for node in args.source.iter().chain(&args.target) {
        if !g.has_node(node) {
            return Err(Failure::Usage(format!("node {node:?} is not in the graph")));
        }
    }
    let mut out = csv::Writer::from_writer(io::stdout().lock());
    match args.algo {
        Algorithm::Boruvka | Algorithm::Kruskal | Algorithm::Prim | Algorithm::PrimMatrix => {
            run_mst(&g, &args, &mut out)?
        }
        Algorithm::BellmanFord | Algorithm::Dijkstra | Algorithm::DijkstraMatrix | Algorithm::DagShortestPath => {
            run_sssp(&g, &args, &mut out)?
        }
        Algorithm::FloydWarshall | Algorithm::Johnson | Algorithm::SlowAllPairs | Algorithm::FasterAllPairs => {
            run_apsp(&g, &args, &mut out)?
        }
        Algorithm::TopologicalSort => {
            reject_flags(&args, true, true, true)?;
            out.write_record(["position", "node"]).map_err(csv_failure)?;
            for (i, node) in topological_sort(&g)?.iter().enumerate() {
                out.write_record([i.to_string(), node.clone()]).map_err(csv_failure)?;
            }
        }
    }
    out.flush().map_err(io_failure("writing output"))
}

fn reject_flags(args: &RunArgs, source: bool, target: bool, path: bool) -> Result<(), Failure> {
    let used = [
        (source && args.source.is_some(), "--source"),
        (target && args.target.is_some(), "--target"),
        (path && args.show_path, "--show-path"),
    ];
    match used.iter().find(|(set, _)| *set) {
        Some((_, flag)) => Err(Failure::Usage(format!("{} does not take {flag}", args.algo))),
        None => Ok(()),
    }
}

fn first_node(g: &Graph<String>) -> Option<String> {
    g.nodes().min().cloned()
}

type Out<'a> = csv::Writer<io::StdoutLock<'a>>;

fn run_mst(g: &Graph<String>, args: &RunArgs, out: &mut Out) -> Result<(), Failure> {
    let prim = matches!(args.algo, Algorithm::Prim | Algorithm::PrimMatrix);
    reject_flags(args, !prim, true, true)?;
    let (edges, total): (Vec<Edge<String>>, f64) = match args.algo {
        Algorithm::Boruvka | Algorithm::Kruskal => {
            let forest = if args.algo == Algorithm::Boruvka { boruvka_mst(g)? } else { kruskal_mst(g)? };
            (forest.tree.sorted_edges(), forest.total_weight)
        }
        _ => {
            let source = args.source.clone().or_else(|| first_node(g));
            let tree = if args.algo == Algorithm::Prim { prim_mst(g, source)? } else { prim_matrix_mst(g, source)? };
            (tree.edges(), tree.total_weight)
        }
    };
    out.write_record(["source", "target", "weight"]).map_err(csv_failure)?;
    for e in &edges {
        out.write_record([e.source.clone(), e.target.clone(), e.weight.to_string()])
            .map_err(csv_failure)?;
    }
    eprintln!("{}: {} edges, total weight {total}", args.algo, edges.len());
    Ok(())
}

fn path_cell(path: Result<Vec<String>, Error>) -> Result<String, Failure> {
    match path {
        Ok(p) => Ok(p.join(" ")),
        Err(Error::NoPath(_)) => Ok(String::new()),
        Err(e) => Err(e.into()),
    }
}

fn run_sssp(g: &Graph<String>, args: &RunArgs, out: &mut Out) -> Result<(), Failure> {
    let source = args
        .source
        .clone()
        .or_else(|| first_node(g))
        .ok_or_else(|| Failure::Usage("the graph has no nodes".into()))?;
    let result: SsspResult<String> = match args.algo {
        Algorithm::BellmanFord => bellman_ford(g, &source)?,
        Algorithm::Dijkstra => dijkstra(g, &source)?,
        Algorithm::DijkstraMatrix => dijkstra_matrix(g, &source)?,
        _ => dag_shortest_path(g, &source)?,
    };
    let mut header = vec!["target", "distance"];
    if args.show_path {
        header.push("path");
    }
    out.write_record(&header).map_err(csv_failure)?;
    let targets = match &args.target {
        Some(t) => vec![t.clone()],
        None => g.sorted_nodes(),
    };
    for t in targets {
        let d = result.distance_to(&t).unwrap_or(f64::INFINITY);
        let mut row = vec![t.clone(), d.to_string()];
        if args.show_path {
            row.push(path_cell(result.path_to(&t))?);
        }
        out.write_record(&row).map_err(csv_failure)?;
    }
    Ok(())
}

fn run_apsp(g: &Graph<String>, args: &RunArgs, out: &mut Out) -> Result<(), Failure> {
    let fw = args.algo == Algorithm::FloydWarshall;
    if !fw {
        reject_flags(args, false, false, true)?;
    }
    let (distance, paths): (DistanceMatrix<String>, _) = match args.algo {
        Algorithm::FloydWarshall => {
            let r = floyd_warshall(g)?;
            (r.distance.clone(), Some(r))
        }
        Algorithm::Johnson => (johnson(g)?, None),
        Algorithm::SlowAllPairs => (slow_all_pairs(g)?, None),
        _ => (faster_all_pairs(g)?, None),
    };
    let mut header = vec!["source", "target", "distance"];
    if args.show_path {
        header.push("path");
    }
    out.write_record(&header).map_err(csv_failure)?;
    let keep = |filter: &Option<String>, node: &String| filter.as_ref().map_or(true, |f| f == node);
    for (s, t, d) in distance.iter() {
        if !keep(&args.source, s) || !keep(&args.target, t) {
            continue;
        }
        let mut row = vec![s.clone(), t.clone(), d.to_string()];
        if let (true, Some(p)) = (args.show_path, &paths) {
            row.push(path_cell(p.path(s, t))?);
        }
        out.write_record(&row).map_err(csv_failure)?;
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<(), Failure> {
    let report = harness::verify(args.suite, args.instances, args.max_n, args.seed)?;
    for (seed, message) in &report.failures {
        println!("FAIL instance seed {seed}: {message}");
    }
    let passed = report.instances - report.failures.len();
    println!("{} suite: {passed}/{} instances passed", report.suite, report.instances);
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} instances failed", report.failures.len())))
    }
}

fn bench(args: BenchArgs) -> Result<(), Failure> {
    if args.trials == 0 {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }
    let template = GeneratorSpec::new(args.model, 0)
        .density(args.density)
        .weights(args.weights.0, args.weights.1)
        .seed(args.seed);
    let records = harness::bench(args.algo.name(), &args.sizes, args.trials, &template)?;
    let fresh = fs::metadata(&args.out).map_or(true, |m| m.len() == 0);
    let file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(&args.out)
        .map_err(io_failure("opening output"))?;
    if fresh {
        harness::write_csv(&records, file)?;
    } else {
        // appending: the header is already there
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(file);
        for r in &records {
            w.serialize(r).map_err(csv_failure)?;
        }
        w.flush().map_err(io_failure("writing output"))?;
    }
    println!("{} records written to {}", records.len(), args.out.display());
    if let Some(fit) = harness::fit_log_log(&records) {
        for (v, t) in &fit.points {
            println!("V={v} median {:.6} s", t);
        }
        println!("log-log slope {:.3} (intercept {:.3})", fit.slope, fit.intercept);
    }
    Ok(())
}
