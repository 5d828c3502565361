use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use updom::constructions::{
    certify_gadget, certify_q, gadget_construct, h_graph, q_construct, subdivide, tripod, HConvention,
};
use updom::dichotomy::classify_monogenic;
use updom::domination::{Oracle, Witnessed, DEFAULT_CAP};
use updom::formats::{read_graphs, to_graph6};
use updom::recognition::{
    find_2k2, find_nice_partition, forbidden_set, in_class_s, in_z_k, NicePartition,
};
use updom::induced::contains_induced;
use updom::sweep::{run, run_all, CriterionReport, SweepConfig};
use updom::two_k2::{upper_dominating_2k2, Method};
use updom::{Error, Girth, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "updom", version, about = "Exact upper domination: solvers, reductions, recognition, dichotomy")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Seed for the randomized corpora of `sweep`.
    #[arg(long, global = true, default_value_t = SweepConfig::default().seed)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Upper dominating set of each input graph.
    Solve {
        /// graph6 file (one graph per line) or edge list; `-` for stdin.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = SolveMethod::Auto)]
        method: SolveMethod,
    },
    /// α, γ and Γ with witnesses, girth and maximum degree.
    Invariants { input: PathBuf },
    /// Build a graph and print it as graph6.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Check a reduction identity exhaustively and lift witnesses both ways.
    Certify {
        #[arg(value_enum)]
        reduction: Reduction,
        input: PathBuf,
    },
    /// Membership in a graph class, with a witness.
    Recognize {
        #[arg(value_enum)]
        class: ClassName,
        input: PathBuf,
        /// Index for `zk`.
        #[arg(long)]
        k: Option<usize>,
        /// How `H_n` is indexed (for `zk`).
        #[arg(long, value_enum, default_value_t = Convention::InternalVertices)]
        convention: Convention,
    },
    /// Complexity of upper domination on H-free graphs.
    Classify { input: PathBuf },
    /// Run the acceptance suites.
    Sweep {
        /// Largest vertex count for the exhaustive labeled sweeps.
        #[arg(long, default_value_t = SweepConfig::default().max_n)]
        max_n: usize,
        /// Run a single criterion (1 to 8).
        #[arg(long)]
        criterion: Option<u8>,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Replace each edge by two paths of length three.
    Gadget { input: PathBuf },
    /// Q(G): the subdivision with cliques on old and on new vertices.
    Q { input: PathBuf },
    /// S(G): subdivide every edge once.
    Subdivide { input: PathBuf },
    /// The spider S_{i,j,l}.
    Tripod { i: usize, j: usize, l: usize },
    /// H_n: two degree-3 hubs joined by a path.
    Hgraph {
        n: usize,
        #[arg(long, value_enum, default_value_t = Convention::InternalVertices)]
        convention: Convention,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMethod {
    /// The 2K2-free algorithm when it applies, exhaustive search otherwise.
    Auto,
    Brute,
    #[value(name = "2k2")]
    TwoK2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reduction {
    Q,
    Gadget,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassName {
    #[value(name = "2k2-free")]
    TwoK2Free,
    CoBipartite,
    Qstar,
    TripodForest,
    Zk,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    InternalVertices,
    PathEdges,
}

impl From<Convention> for HConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::InternalVertices => HConvention::InternalVertices,
            Convention::PathEdges => HConvention::PathEdges,
        }
    }
}

/// A failure with the exit code it maps to: 2 for refusals, 1 for breaches.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_refusal() { 2 } else { 1 }, message: e.to_string() }
    }
}

fn refuse(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("updom: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn oracle() -> Outcome<Oracle> {
    match std::env::var("UPDOM_MAX_N") {
        Ok(v) => {
            let cap: usize = v.trim().parse().map_err(|_| refuse(format!("UPDOM_MAX_N must be an integer, got {v:?}")))?;
            if cap > 64 {
                return Err(refuse(format!("UPDOM_MAX_N is {cap}; the exhaustive searches support at most 64 vertices")));
            }
            Ok(Oracle::with_cap(cap))
        }
        Err(_) => Ok(Oracle::with_cap(DEFAULT_CAP)),
    }
}

fn read_input(path: &Path) -> Outcome<Vec<Graph>> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map_err(|e| refuse(format!("cannot read stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| refuse(format!("cannot read {}: {e}", path.display())))?;
    }
    let graphs = read_graphs(&text)?;
    if graphs.is_empty() {
        return Err(refuse(format!("no graph found in {}", path.display())));
    }
    Ok(graphs)
}

fn emit<T: Serialize>(pretty: bool, value: &T) {
    let text = if pretty { serde_json::to_string_pretty(value) } else { serde_json::to_string(value) };
    println!("{}", text.expect("output types serialize"));
}

#[derive(Serialize)]
struct SolveOutput {
    size: usize,
    witness: VertexSet,
    method: &'static str,
    cap: Option<usize>,
}

#[derive(Serialize)]
struct InvariantsOutput {
    n: usize,
    m: usize,
    alpha: Witnessed,
    gamma: Witnessed,
    #[serde(rename = "Gamma")]
    upper_gamma: Witnessed,
    girth: Girth,
    max_degree: usize,
    cap: usize,
}

#[derive(Serialize)]
struct TwoK2Output {
    class: &'static str,
    member: bool,
    witness: Option<[(usize, usize); 2]>,
}

#[derive(Serialize)]
struct CoBipartiteOutput {
    class: &'static str,
    member: bool,
    cliques: Option<(VertexSet, VertexSet)>,
}

#[derive(Serialize)]
struct ForbiddenHit {
    name: &'static str,
    embedding: Vec<usize>,
}

#[derive(Serialize)]
struct QStarOutput {
    class: &'static str,
    member: bool,
    partition: Option<NicePartition>,
    forbidden: Option<ForbiddenHit>,
}

#[derive(Serialize)]
struct SweepOutput {
    max_n: usize,
    seed: u64,
    passed: bool,
    criteria: Vec<CriterionReport>,
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::IndependentSet => "independent-set",
        Method::Triangle => "triangle",
    }
}

fn solve(g: &Graph, method: SolveMethod) -> Outcome<SolveOutput> {
    let polynomial = match method {
        SolveMethod::TwoK2 => true,
        SolveMethod::Brute => false,
        SolveMethod::Auto => find_2k2(g).is_none(),
    };
    if polynomial {
        let s = upper_dominating_2k2(g)?;
        return Ok(SolveOutput { size: s.size, witness: s.witness, method: method_name(s.method), cap: None });
    }
    let o = oracle()?;
    let w = o.upper_gamma(g)?;
    Ok(SolveOutput { size: w.size, witness: w.witness, method: "brute", cap: Some(o.cap()) })
}

fn recognize(g: &Graph, class: ClassName, k: Option<usize>, convention: Convention, pretty: bool) -> Outcome<()> {
    match class {
        ClassName::TwoK2Free => {
            let hit = find_2k2(g);
            emit(pretty, &TwoK2Output { class: "2k2-free", member: hit.is_none(), witness: hit.map(|(a, b)| [a, b]) });
        }
        ClassName::CoBipartite => {
            let cliques = g.clique_bipartition();
            emit(pretty, &CoBipartiteOutput { class: "co-bipartite", member: cliques.is_some(), cliques });
        }
        ClassName::Qstar => {
            let partition = find_nice_partition(g)?;
            let forbidden = forbidden_set()
                .into_iter()
                .find_map(|(name, f)| contains_induced(g, &f).map(|embedding| ForbiddenHit { name, embedding }));
            if partition.is_some() == forbidden.is_some() {
                return Err(Failure {
                    code: 1,
                    message: "nice-partition and forbidden-subgraph tests disagree".into(),
                });
            }
            emit(pretty, &QStarOutput { class: "qstar", member: partition.is_some(), partition, forbidden });
        }
        ClassName::TripodForest => emit(pretty, &in_class_s(g)),
        ClassName::Zk => {
            let k = k.ok_or_else(|| refuse("recognize zk needs --k"))?;
            emit(pretty, &in_z_k(g, k, convention.into())?);
        }
    }
    Ok(())
}

fn execute(cli: &Cli) -> Outcome<()> {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Solve { input, method } => {
            for g in read_input(input)? {
                emit(pretty, &solve(&g, *method)?);
            }
        }
        Command::Invariants { input } => {
            let o = oracle()?;
            for g in read_input(input)? {
                let r = o.report(&g)?;
                emit(
                    pretty,
                    &InvariantsOutput {
                        n: g.n(),
                        m: g.m(),
                        alpha: r.alpha,
                        gamma: r.gamma,
                        upper_gamma: r.upper_gamma,
                        girth: g.girth(),
                        max_degree: g.max_degree(),
                        cap: o.cap(),
                    },
                );
            }
        }
        Command::Construct { what } => match what {
            Construct::Gadget { input } => {
                for g in read_input(input)? {
                    println!("{}", to_graph6(&gadget_construct(&g).graph));
                }
            }
            Construct::Q { input } => {
                for g in read_input(input)? {
                    println!("{}", to_graph6(&q_construct(&g).graph));
                }
            }
            Construct::Subdivide { input } => {
                for g in read_input(input)? {
                    println!("{}", to_graph6(&subdivide(&g).graph));
                }
            }
            Construct::Tripod { i, j, l } => println!("{}", to_graph6(&tripod(*i, *j, *l))),
            Construct::Hgraph { n, convention } => {
                if *n == 0 {
                    return Err(refuse("H_n is defined for n >= 1"));
                }
                println!("{}", to_graph6(&h_graph(*n, (*convention).into())));
            }
        },
        Command::Certify { reduction, input } => {
            let o = oracle()?;
            for g in read_input(input)? {
                match reduction {
                    Reduction::Q => emit(pretty, &certify_q(&g, &o)?),
                    Reduction::Gadget => emit(pretty, &certify_gadget(&g, &o)?),
                }
            }
        }
        Command::Recognize { class, input, k, convention } => {
            for g in read_input(input)? {
                recognize(&g, *class, *k, *convention, pretty)?;
            }
        }
        Command::Classify { input } => {
            for g in read_input(input)? {
                emit(pretty, &classify_monogenic(&g)?);
            }
        }
        Command::Sweep { max_n, criterion } => {
            if *max_n > 7 {
                return Err(refuse(format!("--max-n {max_n} is too large for an exhaustive labeled sweep (at most 7)")));
            }
            let config = SweepConfig { max_n: *max_n, seed: cli.seed };
            let criteria = match criterion {
                Some(id) => vec![run(*id, &config).ok_or_else(|| refuse(format!("no criterion {id}; use 1 to 8")))?],
                None => run_all(&config),
            };
            let passed = criteria.iter().all(|c| c.passed);
            emit(pretty, &SweepOutput { max_n: *max_n, seed: cli.seed, passed, criteria });
            if !passed {
                return Err(Failure { code: 1, message: "some acceptance criteria failed".into() });
            }
        }
    }
    Ok(())
}
