//! densify: decompose a graph into its chain of locally-dense subgraphs.
//!
//! Exit codes: 0 on success, 1 on data errors (unreadable or malformed
//! input, undefined results), 2 on usage errors.

mod report;

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use densify_core::oracle::brute_locally_dense_chain;
use densify_core::{
    core_decomposition, exact_ld, greedy_ld, kendall_tau_b, load_edge_list, profile,
    profile_ratio, Chain, Error as CoreError, Graph,
};

use report::{
    profile_tsv, ChainSummary, CompareReport, DecompositionReport, GraphStats, PairReport,
    SCHEMA_VERSION,
};

#[derive(Parser)]
#[command(
    name = "densify",
    version,
    about = "Locally-dense graph decomposition toolkit",
    long_about = "Decomposes an undirected graph into a nested chain of subgraphs ordered by \
                  density: exactly via parametric minimum cuts, approximately in linear time \
                  via degree peeling, or with the classic k-core baseline."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Exact,
    Greedy,
    Core,
}

impl Algo {
    fn name(&self) -> &'static str {
        match self {
            Algo::Exact => "exact",
            Algo::Greedy => "greedy",
            Algo::Core => "core",
        }
    }

    fn run(&self, graph: &Graph) -> Chain {
        match self {
            Algo::Exact => exact_ld(graph),
            Algo::Greedy => greedy_ld(graph),
            Algo::Core => core_decomposition(graph).chain,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Run one decomposition and emit its chain as a report.
    Decompose {
        /// Which algorithm to run.
        #[arg(long, value_enum, required_unless_present = "oracle")]
        algo: Option<Algo>,
        /// Edge-list file ("u w" per line, '#' comments).
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        output: Format,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Use the exponential brute-force reference instead of an
        /// algorithm (exhaustive; refuses graphs beyond 14 vertices).
        #[arg(long, conflicts_with = "algo")]
        oracle: bool,
        /// Reserved for future randomized features; accepted and unused.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run several decompositions and report their agreement.
    Compare {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated list of algorithms to compare pairwise.
        #[arg(long, value_enum, value_delimiter = ',', default_value = "exact,greedy,core")]
        algos: Vec<Algo>,
        #[arg(long, value_enum, default_value = "json")]
        output: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Reserved for future randomized features; accepted and unused.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Emit the per-index profile function of one decomposition as TSV.
    Profile {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Reserved for future randomized features; accepted and unused.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => err.exit(), // clap exits 0 for --help/--version, 2 otherwise
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("densify: error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    let file =
        File::open(path).map_err(|e| format!("cannot open {}: {e}", path.display()))?;
    let (graph, stats) = load_edge_list(BufReader::new(file))
        .map_err(|e| format!("{}: {e}", path.display()))?;
    if stats.loops_dropped > 0 || stats.duplicates_collapsed > 0 {
        eprintln!(
            "densify: note: dropped {} self-loop(s), collapsed {} duplicate edge(s)",
            stats.loops_dropped, stats.duplicates_collapsed
        );
    }
    Ok(graph)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let mut file =
                File::create(path).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            file.write_all(text.as_bytes())
                .map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
    }
}

fn run(command: Command) -> Result<(), String> {
    match command {
        Command::Decompose {
            algo,
            input,
            output,
            out,
            oracle,
            seed: _,
        } => {
            let graph = read_graph(&input)?;
            let started = Instant::now();
            let (name, chain) = if oracle {
                let chain = brute_locally_dense_chain(&graph).map_err(|e| e.to_string())?;
                ("oracle", chain)
            } else {
                let algo = algo.expect("clap enforces algo unless --oracle");
                (algo.name(), algo.run(&graph))
            };
            let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
            let report = DecompositionReport::new(&graph, &chain, name, elapsed_ms);
            let text = match output {
                Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
                Format::Tsv => report.to_tsv(),
            };
            emit(&text, out.as_deref())
        }

        Command::Compare {
            input,
            algos,
            output,
            out,
            seed: _,
        } => {
            let graph = read_graph(&input)?;
            let report = compare(&graph, &algos)?;
            let text = match output {
                Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
                Format::Tsv => report.to_tsv(),
            };
            emit(&text, out.as_deref())
        }

        Command::Profile {
            input,
            algo,
            out,
            seed: _,
        } => {
            let graph = read_graph(&input)?;
            let chain = algo.run(&graph);
            let prof = profile(&chain, graph.vertex_count()).map_err(|e| e.to_string())?;
            emit(&profile_tsv(&prof), out.as_deref())
        }
    }
}

fn compare(graph: &Graph, algos: &[Algo]) -> Result<CompareReport, String> {
    if algos.is_empty() {
        return Err("no algorithms selected".to_string());
    }

    // the graph is immutable and shared; run the selected algorithms
    // concurrently and assemble the report afterwards
    let timed: Vec<(Algo, Chain, f64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = algos
            .iter()
            .map(|&algo| {
                scope.spawn(move || {
                    let started = Instant::now();
                    let chain = algo.run(graph);
                    (algo, chain, started.elapsed().as_secs_f64() * 1e3)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    let chains: Vec<ChainSummary> = timed
        .iter()
        .map(|(algo, chain, ms)| ChainSummary {
            algorithm: algo.name().to_string(),
            wall_clock_ms: *ms,
            total_chain_length: chain.total_len(),
            nonempty_set_count: chain.nonempty_len(),
            sizes: chain.sizes(),
            step_densities: chain.step_densities().iter().map(|&d| d.into()).collect(),
        })
        .collect();

    let mut pairs = Vec::new();
    for i in 0..timed.len() {
        for j in i + 1..timed.len() {
            // the exact chain, when present, is the reference side of the
            // ratio: r(approximation, exact)
            let (i, j) = if timed[i].0 == Algo::Exact && timed[j].0 != Algo::Exact {
                (j, i)
            } else {
                (i, j)
            };
            let (a, chain_a, _) = &timed[i];
            let (b, chain_b, _) = &timed[j];
            let tau = match kendall_tau_b(
                &chain_a.level_assignment(),
                &chain_b.level_assignment(),
            ) {
                Ok(t) => Some(t),
                Err(CoreError::DegenerateRanking(_)) => None,
                Err(e) => return Err(e.to_string()),
            };
            let ratio = profile_ratio(chain_a, chain_b).map_err(|e| e.to_string())?;
            pairs.push(PairReport {
                a: a.name().to_string(),
                b: b.name().to_string(),
                kendall_tau_b: tau,
                profile_ratio: ratio.into(),
            });
        }
    }
    if timed.len() == 1 {
        // a single algorithm still gets its self-comparison row
        let (a, chain, _) = &timed[0];
        let tau = kendall_tau_b(&chain.level_assignment(), &chain.level_assignment()).ok();
        pairs.push(PairReport {
            a: a.name().to_string(),
            b: a.name().to_string(),
            kendall_tau_b: tau,
            profile_ratio: profile_ratio(chain, chain).map_err(|e| e.to_string())?.into(),
        });
    }

    let mut profiles = std::collections::BTreeMap::new();
    for (algo, chain, _) in &timed {
        let prof = profile(chain, graph.vertex_count()).map_err(|e| e.to_string())?;
        profiles.insert(algo.name().to_string(), (&prof).into());
    }

    Ok(CompareReport {
        schema_version: SCHEMA_VERSION,
        graph: GraphStats::of(graph),
        algorithms: algos.iter().map(|a| a.name().to_string()).collect(),
        chains,
        pairs,
        profiles,
    })
}
