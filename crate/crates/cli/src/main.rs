//! `spexlab`: command-line access to the constructions, spectral routines,
//! packing search, procedures, formulas, small-n search and suites.
//!
//! Exit codes: 0 success or positive answer, 1 negative answer, 2 usage
//! error, 3 internal or numeric failure.

mod output;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use output::{Format, Output};
use spexlab_core::procedures::{
    grow_odd_cycle, peel_to_dense_core, replace_triangles_with_odd_cycles, verify_per_vertex_packing,
};
use spexlab_core::search::{
    certify_local_max, exhaustive_bounded_edges, exhaustive_ex, exhaustive_spex, hill_climb_spex, ClimbConfig,
    CycleSpec,
};
use spexlab_core::spectral::{implicit_family_perron, perron, DEFAULT_MAX_ITER};
use spexlab_core::suites::{suite_lemmas, suite_theorem11, suite_theorem15, LemmaGrid};
use spexlab_core::subgraphs::find_disjoint_cycles;
use spexlab_core::{graph6, FamilyParams, Graph, ProcedureError, SpectralError, VertexSet, CAPACITY};

#[derive(Parser, Debug)]
#[command(name = "spexlab", version, about = "Spectral extremal toolkit for vertex-disjoint cycles")]
struct Cli {
    /// Print the JSON output schema and exit.
    #[arg(long, global = true)]
    schema: bool,
    /// Worker threads for all parallel work (default: logical cores).
    #[arg(long, global = true, env = "SPEXLAB_THREADS")]
    threads: Option<usize>,
    /// Seed for every random choice; recorded in the output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Tolerance for numeric results (power-iteration residual).
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Shorthand for `--format csv`.
    #[arg(long, global = true)]
    csv: bool,
    /// Include wall-clock seconds in the JSON envelope.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph as a graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list file: one `u v` pair per line, `#` comments.
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Family string such as `s+:n=30,l=5`, `erdos-moon:n=20,t=2`,
    /// `turan:n=9,r=2`, `cycles:t=2,l=5` or `multipartite:parts=3/3/2`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph and print it.
    Construct {
        #[command(flatten)]
        input: Input,
    },
    /// Perron root and vector.
    Rho {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
        max_iter: usize,
    },
    /// Exit 0 when the graph has no `t` disjoint cycles of length `l`.
    FreeCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        t: usize,
        /// Cycle length.
        #[arg(long)]
        l: usize,
    },
    /// Find `t` disjoint cycles of length `l`.
    Pack {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        t: usize,
        /// Cycle length.
        #[arg(long)]
        l: usize,
    },
    /// Grow a triangle into a `(2l+1)`-cycle avoiding `--avoid`.
    Grow {
        #[command(flatten)]
        input: Input,
        /// Three vertices, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        triangle: Vec<usize>,
        #[arg(long)]
        l: usize,
        #[arg(long, value_delimiter = ',')]
        avoid: Vec<usize>,
        /// Only used to report arithmetic preconditions.
        #[arg(long)]
        t: Option<usize>,
    },
    /// Delete low-degree vertices down to a dense core.
    Peel {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
    },
    /// Replace `t` disjoint triangles by `t` disjoint `(2l+1)`-cycles.
    Replace {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        l: usize,
        /// Triangles as `a,b,c;d,e,f`.
        #[arg(long)]
        triangles: String,
    },
    /// Check that every vertex is avoided by `t-1` disjoint `2l`-cycles.
    Lemma53 {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        l: usize,
    },
    /// Evaluate a closed-form quantity.
    Formula {
        /// ex-tc3, chvatal-hanson, path-bound, even-cycle-bound,
        /// theorem11-threshold or erdos-moon-edges.
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        nu: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Small-n extremal search.
    Search {
        #[command(subcommand)]
        mode: SearchMode,
    },
    /// Run a verification suite; exit 1 when any check fails.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct Forbidden {
    #[arg(long)]
    t: usize,
    /// Cycle length is `2l+1` (odd) or `2l` (even).
    #[arg(long)]
    l: usize,
    #[arg(long, value_enum, default_value_t = ParityArg::Odd)]
    parity: ParityArg,
}

impl Forbidden {
    fn spec(&self) -> CycleSpec {
        match self.parity {
            ParityArg::Odd => CycleSpec::odd(self.t, self.l),
            ParityArg::Even => CycleSpec::even(self.t, self.l),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Edges,
    Rho,
}

#[derive(Subcommand, Debug)]
enum SearchMode {
    /// All labelled graphs on n vertices (n <= 8 for edges, n <= 7 for rho).
    Exhaustive {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        forbidden: Forbidden,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Edges)]
        objective: ObjectiveArg,
    },
    /// Maximum edges under a matching-number and maximum-degree bound.
    Bounded {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Hill climb on rho from the candidate construction and random starts.
    Climb {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        forbidden: Forbidden,
        #[arg(long, default_value_t = 8)]
        seeds: usize,
        /// Move evaluations per seed.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long, default_value_t = 32)]
        batch: usize,
    },
    /// Whether no single freeness-preserving edge move raises rho.
    Certify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        forbidden: Forbidden,
    },
}

#[derive(Subcommand, Debug)]
enum Suite {
    Theorem11 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        l: usize,
    },
    Theorem15 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        l: usize,
    },
    Lemmas {
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3])]
        ts: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [2, 3])]
        ls: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [20, 40, 80])]
        ns: Vec<usize>,
        /// Random graphs per order for the deletion inequality.
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

type Outcome = Result<Output, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure::Internal(e.to_string())
}

struct Loaded {
    graph: Graph,
    family: Option<FamilyParams>,
}

fn load(input: &Input) -> Result<Loaded, Failure> {
    if let Some(s) = &input.graph6 {
        return Ok(Loaded { graph: graph6::decode_str(s.trim()).map_err(usage)?, family: None });
    }
    if let Some(path) = &input.edges {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        return Ok(Loaded { graph: graph6::parse_edge_list(&text, 0).map_err(usage)?, family: None });
    }
    let s = input.family.as_deref().expect("clap enforces one input");
    let family: FamilyParams = s.parse().map_err(usage)?;
    Ok(Loaded { graph: family.build().map_err(usage)?, family: Some(family) })
}

fn parse_triangles(s: &str) -> Result<Vec<[usize; 3]>, Failure> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let v: Vec<usize> = p
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| usage(format!("bad vertex in triangle `{p}`"))))
                .collect::<Result<_, _>>()?;
            <[usize; 3]>::try_from(v).map_err(|_| usage(format!("triangle `{p}` needs three vertices")))
        })
        .collect()
}

fn procedure_failure(e: ProcedureError) -> Outcome {
    match e {
        ProcedureError::Graph(g) => Err(usage(g)),
        other => Ok(Output::new("procedure", json!({ "error": other.to_string() }), false)),
    }
}

fn spectral_failure(e: SpectralError) -> Failure {
    match e {
        SpectralError::NotConverged { .. } => internal(e),
        other => usage(other),
    }
}

fn run(cli: &Cli, cmd: &Command) -> Outcome {
    match cmd {
        Command::Construct { input } => {
            let l = load(input)?;
            let g6 = graph6::encode(&l.graph);
            let result = json!({
                "family": l.family.as_ref().map(|f| f.to_string()),
                "n": l.graph.n(),
                "edges": l.graph.edge_count(),
                "graph6": g6,
            });
            let csv = "u,v\n".to_string() + &graph6::to_edge_list(&l.graph).replace(' ', ",");
            Ok(Output::new("construct", result, true).csv(csv).graph6(g6))
        }
        Command::Rho { input, max_iter } => {
            let r = match input.family.as_deref().map(str::parse::<FamilyParams>) {
                Some(Ok(f)) if f.vertex_count() > CAPACITY => implicit_family_perron(&f).map_err(spectral_failure)?,
                _ => perron(&load(input)?.graph, cli.tol, *max_iter).map_err(spectral_failure)?,
            };
            let csv = "vertex,x\n".to_string()
                + &r.vector.iter().enumerate().map(|(i, x)| format!("{i},{x:.15}\n")).collect::<String>();
            Ok(Output::new("rho", &r, true).csv(csv))
        }
        Command::FreeCheck { input, t, l } => {
            let g = load(input)?.graph;
            let p = find_disjoint_cycles(&g, *t, *l);
            let free = !p.is_found();
            let result = json!({ "free": free, "t": t, "length": l, "witness": (!free).then_some(&p.cycles) });
            Ok(Output::new("free-check", result, free))
        }
        Command::Pack { input, t, l } => {
            let g = load(input)?.graph;
            let p = find_disjoint_cycles(&g, *t, *l);
            let mut csv = String::from("cycle,position,vertex\n");
            for (i, c) in p.cycles.iter().enumerate() {
                for (j, v) in c.iter().enumerate() {
                    csv.push_str(&format!("{i},{j},{v}\n"));
                }
            }
            Ok(Output::new("pack", &p, p.is_found()).csv(csv))
        }
        Command::Grow { input, triangle, l, avoid, t } => {
            let g = load(input)?.graph;
            let mut s = VertexSet::new();
            for &v in avoid {
                if v >= g.n() {
                    return Err(usage(format!("vertex {v} out of range")));
                }
                s.insert(v);
            }
            let tri = <[usize; 3]>::try_from(triangle.as_slice()).map_err(|_| usage("--triangle needs three vertices"))?;
            match grow_odd_cycle(&g, &s, tri, *l, *t) {
                Ok(trace) => Ok(Output::new("grow", &trace, true)),
                Err(e) => procedure_failure(e),
            }
        }
        Command::Peel { input, t, k } => {
            let g = load(input)?.graph;
            match peel_to_dense_core(&g, *t, *k) {
                Ok(Some(r)) => {
                    let g6 = graph6::encode(&r.core);
                    Ok(Output::new("peel", &r, true).graph6(g6))
                }
                Ok(None) => Ok(Output::new("peel", json!({ "core": null }), false)),
                Err(e) => procedure_failure(e),
            }
        }
        Command::Replace { input, t, l, triangles } => {
            let g = load(input)?.graph;
            match replace_triangles_with_odd_cycles(&g, *t, *l, &parse_triangles(triangles)?) {
                Ok(r) => Ok(Output::new("replace", &r, true)),
                Err(e) => procedure_failure(e),
            }
        }
        Command::Lemma53 { input, t, l } => {
            let g = load(input)?.graph;
            match verify_per_vertex_packing(&g, *t, *l) {
                Ok(r) => Ok(Output::new("lemma53", &r, r.all_hold)),
                Err(e) => procedure_failure(e),
            }
        }
        Command::Formula { name, n, t, l, nu, delta } => {
            let params: BTreeMap<String, usize> = [("n", n), ("t", t), ("l", l), ("nu", nu), ("delta", delta)]
                .into_iter()
                .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
                .collect();
            let f = spexlab_core::formulas::evaluate(name, &params).map_err(usage)?;
            let range = f.range.map(|r| serde_json::to_value(r).expect("flag").as_str().unwrap_or("").to_string());
            let csv = format!("name,value,range\n{},{},{}\n", f.name, f.value, range.unwrap_or_default());
            Ok(Output::new("formula", &f, true).csv(csv))
        }
        Command::Search { mode } => search(cli, mode),
        Command::Verify { suite } => {
            let r = match suite {
                Suite::Theorem11 { n, t, l } => suite_theorem11(*n, *t, *l),
                Suite::Theorem15 { n, t, l } => suite_theorem15(*n, *t, *l),
                Suite::Lemmas { ts, ls, ns, samples, p } => suite_lemmas(&LemmaGrid {
                    ts: ts.clone(),
                    ls: ls.clone(),
                    ns: ns.clone(),
                    random_graphs: *samples,
                    p: *p,
                    seed: cli.seed,
                }),
            };
            let csv = r.to_csv();
            Ok(Output::new("verify", &r, r.all_pass).csv(csv))
        }
    }
}

fn search(cli: &Cli, mode: &SearchMode) -> Outcome {
    let out = match mode {
        SearchMode::Exhaustive { n, forbidden, objective } => {
            let spec = forbidden.spec();
            let r = match objective {
                ObjectiveArg::Edges => exhaustive_ex(*n, spec),
                ObjectiveArg::Rho => exhaustive_spex(*n, spec),
            }
            .map_err(usage)?;
            let csv = "graph6\n".to_string() + &r.best_graphs.join("\n") + "\n";
            let g6 = r.best_graphs.first().cloned().unwrap_or_default();
            Output::new("search", &r, true).csv(csv).graph6(g6)
        }
        SearchMode::Bounded { n, nu, delta } => {
            let r = exhaustive_bounded_edges(*n, *nu, *delta).map_err(usage)?;
            let csv = "graph6\n".to_string() + &r.best_graphs.join("\n") + "\n";
            Output::new("search", &r, true).csv(csv)
        }
        SearchMode::Climb { n, forbidden, seeds, budget, batch } => {
            let cfg = ClimbConfig { seeds: *seeds, budget: *budget, seed: cli.seed, batch: *batch, tol: cli.tol };
            let r = hill_climb_spex(*n, forbidden.spec(), &cfg).map_err(usage)?;
            let g6 = r.best_graphs[0].clone();
            Output::new("search", &r, true).csv(r.trajectory_csv()).graph6(g6)
        }
        SearchMode::Certify { input, forbidden } => {
            let g = load(input)?.graph;
            let c = certify_local_max(&g, forbidden.spec()).map_err(|e| match e {
                spexlab_core::SearchError::Spectral(s) => spectral_failure(s),
                other => usage(other),
            })?;
            Output::new("certify", &c, c.is_local_max)
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    if cli.schema {
        println!("{}", serde_json::to_string_pretty(&output::schema()).expect("valid json"));
        return ExitCode::SUCCESS;
    }
    let Some(cmd) = &cli.command else {
        eprintln!("error: a subcommand is required (see --help)");
        return ExitCode::from(2);
    };
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        eprintln!("error: --tol must be positive, got {}", cli.tol);
        return ExitCode::from(2);
    }
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(3);
        }
    }
    let format = if cli.csv { Format::Csv } else { cli.format };
    let start = Instant::now();
    let outcome = run(&cli, cmd);
    let elapsed = cli.timing.then(|| start.elapsed().as_secs_f64());
    match outcome {
        Ok(out) => match out.render(format, cli.seed, cli.tol, elapsed) {
            Ok(text) => {
                print!("{text}");
                if out.positive {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
