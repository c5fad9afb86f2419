use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use packing_bench::{emit_report, load_suite, run_suite, ReportFormat, Verdict};
use packing_core::exact::exact_packing_chromatic;
use packing_core::formulas::summary;
use packing_core::heuristics::{minimize_colors, solve_fixed_k, SolverConfig};
use packing_core::io::{parse_graph, write_graph_string};
use packing_core::{
    all_pairs_distances, decide_packing_k, Algorithm, Decision, Graph, GraphFormat, GraphSpec,
    SearchBudget,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "packchrom",
    version,
    about = "Packing colorings: generators, closed forms, exact search and heuristics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as an edge list or in DIMACS format.
    Generate {
        /// Generator spec, e.g. `unitary:45`, `cycle:15`, `circulant:12:1,3,9,11`, `ti`.
        spec: GraphSpec,
        #[arg(long, default_value = "edge-list")]
        format: GraphFormat,
        /// Output file (stdout if omitted).
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Closed-form values for the unitary Cayley graph of Z_n.
    Formula { n: u64 },
    /// Exact packing chromatic number, or a yes/no answer for one `k`.
    Exact {
        #[command(flatten)]
        input: GraphInput,
        /// Decide packing k-colorability instead of computing the minimum.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 100_000_000)]
        node_limit: u64,
        /// Seconds.
        #[arg(long, default_value_t = 300.0)]
        time_limit: f64,
    },
    /// Run a heuristic and print its result as JSON.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        algo: Algorithm,
        /// Color budget; with --minimize, the starting budget.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        maxit: Option<u64>,
        /// GA population size.
        #[arg(long)]
        pop: Option<usize>,
        /// Lower k while the solver keeps succeeding.
        #[arg(long)]
        minimize: bool,
    },
    /// Run a suite file and write a report.
    Bench {
        #[arg(long)]
        suite: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "csv")]
        format: ReportFormat,
        /// Worker threads (0 uses every core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Generator spec instead of a file.
    #[arg(long = "gen")]
    generator: Option<GraphSpec>,
    /// File format (defaults to the file extension).
    #[arg(long = "input-format")]
    input_format: Option<GraphFormat>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        match (&self.graph, &self.generator) {
            (Some(path), _) => {
                let format = self
                    .input_format
                    .unwrap_or_else(|| GraphFormat::from_path(path));
                parse_graph(path, format).with_context(|| format!("reading {}", path.display()))
            }
            (None, Some(spec)) => Ok(spec.build()?),
            (None, None) => bail!("give --graph FILE or --gen SPEC"),
        }
    }
}

fn print_json(value: &serde_json::Value) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Generate { spec, format, out } => {
            let text = write_graph_string(&spec.build()?, format);
            match out {
                Some(path) => std::fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => std::io::stdout().lock().write_all(text.as_bytes())?,
            }
        }
        Command::Formula { n } => print_json(&serde_json::to_value(summary(n)?)?)?,
        Command::Exact {
            input,
            k,
            node_limit,
            time_limit,
        } => {
            let g = input.load()?;
            let budget = SearchBudget::new(node_limit, Duration::from_secs_f64(time_limit))?;
            let value = match k {
                Some(k) => {
                    let (decision, stats) = decide_packing_k(&all_pairs_distances(&g), k, budget)?;
                    let (answer, certificate) = match decision {
                        Decision::Sat(c) => ("sat", Some(c.into_colors())),
                        Decision::Unsat => ("unsat", None),
                        Decision::BudgetExhausted => ("budget-exhausted", None),
                    };
                    json!({
                        "k": k,
                        "decision": answer,
                        "certificate": certificate,
                        "nodes": stats.nodes,
                        "time_ms": stats.elapsed.as_secs_f64() * 1e3,
                    })
                }
                None => {
                    let r = exact_packing_chromatic(&g, budget)?;
                    json!({
                        "value": r.value,
                        "certificate": r.certificate.colors(),
                        "nodes": r.stats.nodes,
                        "time_ms": r.stats.elapsed.as_secs_f64() * 1e3,
                    })
                }
            };
            print_json(&value)?;
        }
        Command::Solve {
            input,
            algo,
            k,
            seed,
            maxit,
            pop,
            minimize,
        } => {
            let g = input.load()?;
            let d = all_pairs_distances(&g);
            let budget = match (algo, k, minimize) {
                (Algorithm::Greedy, ..) | (_, _, true) => k.unwrap_or(g.n() as u32),
                (_, Some(k), false) => k,
                (_, None, false) => bail!("--k is required unless --minimize is given"),
            };
            let mut config = SolverConfig::default_for(algo, budget, seed);
            match &mut config {
                SolverConfig::Ls(c) => c.max_iterations = maxit.unwrap_or(c.max_iterations),
                SolverConfig::Ga(c) => {
                    c.max_iterations = maxit.unwrap_or(c.max_iterations);
                    c.population_size = pop.unwrap_or(c.population_size);
                }
                SolverConfig::Greedy { .. } => {}
            }
            let result = if minimize {
                minimize_colors(&d, &config, k)?
            } else {
                solve_fixed_k(&d, &config)?
            };
            print_json(&serde_json::to_value(&result)?)?;
        }
        Command::Bench {
            suite,
            out,
            format,
            jobs,
        } => {
            let cases = load_suite(&suite)?;
            let report = run_suite(&cases, jobs)?;
            emit_report(&report, format, &out)?;
            let mut failed = 0;
            for s in &report.summaries {
                let best = s.best.map_or("-".to_string(), |b| b.to_string());
                let expected = s.expected.map_or("-".to_string(), |e| e.value.to_string());
                eprintln!(
                    "{:<24} {:<7} best {:>4}  expected {:>4}  median {:>10.1} ms  {:?}",
                    s.case, s.algorithm, best, expected, s.median_time_ms, s.verdict
                );
                failed += usize::from(matches!(s.verdict, Verdict::Fail | Verdict::Error));
            }
            if failed > 0 {
                eprintln!(
                    "{failed} case(s) failed or errored; report written to {}",
                    out.display()
                );
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
