//! `diagdist`: exact and heuristic diagonal distance, witness verification,
//! analytic constants and bounds, and random-graph experiments.
//!
//! Exit codes: 0 success, 2 input error, 3 exact solve ended by budget
//! without a proven optimum.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use diagdist_core::analytic;
use diagdist_core::exact::{diagonal_distance_with, SolveOptions, DEFAULT_BUDGET_VISITS};
use diagdist_core::experiment::{
    exhaustive_fn, fhat_curve, records_to_csv, run_gnp_experiment, three_phase_shape,
    ExperimentConfig,
};
use diagdist_core::flip::verify_witness;
use diagdist_core::format::{parse_edge_list, parse_graph6};
use diagdist_core::heuristic::pair_search_with;
use diagdist_core::{Graph, VertexSet, Witness};

#[derive(Parser)]
#[command(
    name = "diagdist",
    about = "Diagonal distance of graphs: exact solver, flip-game verifier, analytic bounds, random-graph experiments",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Compute f(G) exactly (budget-capped branch and bound).
    Exact {
        /// Graph file (graph6 or edge list).
        #[arg(long)]
        graph: PathBuf,
        /// Input format; inferred from the extension when omitted.
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
        /// Enumeration budget in subsets visited.
        #[arg(long, default_value_t = DEFAULT_BUDGET_VISITS)]
        budget: u64,
        /// Worker threads (0 = all cores). Results do not depend on this.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Suppress timing output.
        #[arg(long)]
        no_timing: bool,
    },
    /// Search for a low-cost witness via near-pair sampling.
    Heuristic {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
        /// Size of the sampled sets.
        #[arg(long)]
        a: usize,
        /// Number of sampled sets.
        #[arg(long, default_value_t = 256)]
        samples: usize,
        /// Sampling seed.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Worker threads (0 = all cores). Results do not depend on this.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        no_timing: bool,
    },
    /// Verify a witness set: compile its plan, run the flip game, report cost.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        format: Option<GraphFormat>,
        /// Comma-separated vertex list, e.g. "1,3,7".
        #[arg(long)]
        set: String,
    },
    /// Print the analytic constants (λ₀, p₀, the minor root, α with H(α)=1/2).
    Constants {
        /// Root-finding tolerance.
        #[arg(long, default_value_t = 1e-13)]
        tol: f64,
    },
    /// Emit the predicted curve f̂(p) as CSV rows "p,fhat,regime".
    Fhat {
        /// Number of interior grid points.
        #[arg(long, default_value_t = 199)]
        grid: usize,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest lower bound on f(n) certified by the volume inequality.
    Gv {
        #[arg(long)]
        n: u64,
    },
    /// Evaluate the first-moment sum at (n, p, l).
    Firstmoment {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        l: u64,
        /// Smallest set size included in the sum.
        #[arg(long, default_value_t = 1)]
        a_lo: u64,
        /// Largest set size included in the sum (default n).
        #[arg(long)]
        a_hi: Option<u64>,
    },
    /// Monte Carlo sweep over G(n, p): exact solves, regime classification, CSV.
    Experiment {
        #[arg(long)]
        n: usize,
        /// Probability grid: "a:b:step" or a comma-separated list.
        #[arg(long)]
        p_grid: String,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// CSV output path.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET_VISITS)]
        budget: u64,
        /// Worker threads (0 = all cores). Results do not depend on this.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Drop the timing column so outputs compare bytewise.
        #[arg(long)]
        no_timing: bool,
    },
    /// Exhaustive f(n) over all labeled graphs of order n (n <= 7).
    #[command(name = "fn")]
    Fn {
        #[arg(long)]
        n: usize,
        /// Use the "at least one edge" reading of non-empty graphs.
        #[arg(long)]
        exclude_edgeless: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn infer_format(path: &Path, flag: Option<GraphFormat>) -> Result<GraphFormat, String> {
    if let Some(f) = flag {
        return Ok(f);
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") | Some("graph6") => Ok(GraphFormat::Graph6),
        Some("edges") | Some("edgelist") | Some("el") | Some("txt") => Ok(GraphFormat::Edges),
        other => Err(format!(
            "cannot infer graph format from extension {other:?}; pass --format graph6|edges"
        )),
    }
}

fn read_graph(path: &Path, flag: Option<GraphFormat>) -> Result<(Graph, GraphFormat), String> {
    let format = infer_format(path, flag)?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let graph = match format {
        GraphFormat::Graph6 => parse_graph6(&text),
        GraphFormat::Edges => parse_edge_list(&text),
    }
    .map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((graph, format))
}

fn format_name(f: GraphFormat) -> &'static str {
    match f {
        GraphFormat::Graph6 => "graph6",
        GraphFormat::Edges => "edges",
    }
}

fn resolve_threads(threads: usize) -> usize {
    if threads == 0 {
        std::thread::available_parallelism().map_or(1, |v| v.get())
    } else {
        threads
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Exact {
            graph,
            format,
            budget,
            threads,
            no_timing,
        } => {
            let (g, fmt) = read_graph(&graph, format)?;
            let threads = resolve_threads(threads);
            println!(
                "# config: exact graph={} format={} n={} budget={budget} threads={threads}",
                graph.display(),
                format_name(fmt),
                g.vertex_count()
            );
            let start = Instant::now();
            let result = diagonal_distance_with(
                &g,
                &SolveOptions {
                    budget_visits: budget,
                    threads,
                },
            );
            println!("f = {}{}", result.f, if result.proven_optimal { "" } else { " (upper bound only: budget exhausted)" });
            println!("witness: {}", result.witness);
            println!("nodes explored = {}", result.nodes_explored);
            println!("bound source = {}", result.bound_source);
            if !no_timing {
                println!("time: {} µs", start.elapsed().as_micros());
            }
            Ok(if result.proven_optimal {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Heuristic {
            graph,
            format,
            a,
            samples,
            seed,
            threads,
            no_timing,
        } => {
            let (g, fmt) = read_graph(&graph, format)?;
            let threads = resolve_threads(threads);
            println!(
                "# config: heuristic graph={} format={} n={} a={a} samples={samples} seed={seed} threads={threads}",
                graph.display(),
                format_name(fmt),
                g.vertex_count()
            );
            let start = Instant::now();
            let cand =
                pair_search_with(&g, a, samples, seed, threads).map_err(|e| e.to_string())?;
            let witness =
                Witness::from_a(&g, cand.candidate.clone()).map_err(|e| e.to_string())?;
            println!("image distance |B(A) xor B(A')| = {}", cand.hamming);
            println!("candidate: {witness}");
            if !no_timing {
                println!("time: {} µs", start.elapsed().as_micros());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { graph, format, set } => {
            let (g, fmt) = read_graph(&graph, format)?;
            let vertices: Vec<usize> = set
                .split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| format!("bad vertex {t:?} in --set"))
                })
                .collect::<Result<_, _>>()?;
            println!(
                "# config: verify graph={} format={} n={} set={:?}",
                graph.display(),
                format_name(fmt),
                g.vertex_count(),
                vertices
            );
            let a = VertexSet::from_indices(g.vertex_count(), &vertices)
                .map_err(|e| e.to_string())?;
            let witness = Witness::from_a(&g, a.clone()).map_err(|e| e.to_string())?;
            let (valid, cost) = verify_witness(&g, &a).map_err(|e| e.to_string())?;
            println!("{witness}");
            println!("valid = {valid}, cost = {cost}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Constants { tol } => {
            println!("# config: constants tol={tol}");
            let c = analytic::solve_constants(tol).map_err(|e| e.to_string())?;
            println!("lambda0    = {:.16}", c.lambda0);
            println!("p0         = {:.16}", c.p0);
            println!("p0_minor   = {:.16}", c.p0_minor);
            println!("alpha_half = {:.16}", c.alpha_half);
            println!("tolerance  = {:e}", c.tolerance);
            let (alpha, bound) = analytic::optimize_simple_bound();
            println!("simple covering optimum: alpha = {alpha:.16}, f(n) <= {bound:.5}n");
            Ok(ExitCode::SUCCESS)
        }
        Command::Fhat { grid, out } => {
            if grid == 0 {
                return Err("--grid must be positive".into());
            }
            let mut csv = String::from("p,fhat,regime\n");
            for i in 1..=grid {
                let p = i as f64 / (grid + 1) as f64;
                let pred = analytic::predicted_fhat(p).map_err(|e| e.to_string())?;
                let _ = writeln!(csv, "{p:.6},{:.6},{}", pred.value, pred.regime);
            }
            match out {
                Some(path) => {
                    std::fs::write(&path, &csv)
                        .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                    println!("# config: fhat grid={grid}");
                    println!("wrote {} rows to {}", grid, path.display());
                }
                None => {
                    println!("# config: fhat grid={grid}");
                    print!("{csv}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gv { n } => {
            println!("# config: gv n={n}");
            if n == 0 {
                return Err("--n must be positive".into());
            }
            let best = analytic::best_gv_bound(n);
            println!("largest certified l = {best} (f({n}) >= {best})");
            println!("l/n = {:.6}", best as f64 / n as f64);
            Ok(ExitCode::SUCCESS)
        }
        Command::Firstmoment { n, p, l, a_lo, a_hi } => {
            let a_hi = a_hi.unwrap_or(n);
            println!("# config: firstmoment n={n} p={p} l={l} a_lo={a_lo} a_hi={a_hi}");
            let fm =
                analytic::first_moment_sum(n, p, l, a_lo, a_hi).map_err(|e| e.to_string())?;
            println!("sum  = {:e}", fm.sum);
            println!("log2 = {}", fm.log2_sum);
            Ok(ExitCode::SUCCESS)
        }
        Command::Experiment {
            n,
            p_grid,
            trials,
            seed,
            out,
            budget,
            threads,
            no_timing,
        } => {
            let grid = parse_p_grid(&p_grid)?;
            let threads = resolve_threads(threads);
            println!(
                "# config: experiment n={n} p_grid={grid:?} trials={trials} seed={seed} budget={budget} threads={threads}"
            );
            let mut cfg =
                ExperimentConfig::new(n, grid, trials, seed).map_err(|e| e.to_string())?;
            cfg.budget_visits = budget;
            cfg.threads = threads;
            let start = Instant::now();
            let records = run_gnp_experiment(&cfg).map_err(|e| e.to_string())?;
            let csv = records_to_csv(&records, !no_timing);
            std::fs::write(&out, &csv)
                .map_err(|e| format!("cannot write {}: {e}", out.display()))?;
            println!("wrote {} records to {}", records.len(), out.display());
            let rows = fhat_curve(&cfg).map_err(|e| e.to_string())?;
            for row in &rows {
                println!(
                    "p = {:.4}: mean f/n = {:.4} (predicted {:.4}, {})",
                    row.p, row.mean_f_over_n, row.predicted, row.regime
                );
            }
            println!(
                "three-phase shape: {}",
                three_phase_shape(&rows, 0.02)
            );
            if !no_timing {
                println!("time: {} ms", start.elapsed().as_millis());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fn { n, exclude_edgeless } => {
            println!("# config: fn n={n} exclude_edgeless={exclude_edgeless}");
            let (f, g6) = exhaustive_fn(n, !exclude_edgeless).map_err(|e| e.to_string())?;
            println!("f({n}) = {f}");
            println!("attained by graph6 {g6}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Accepts "a:b:step" (inclusive endpoints) or "p1,p2,...".
fn parse_p_grid(text: &str) -> Result<Vec<f64>, String> {
    let parse = |t: &str| -> Result<f64, String> {
        t.trim()
            .parse::<f64>()
            .map_err(|_| format!("bad probability {t:?} in --p-grid"))
    };
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err("--p-grid range must look like a:b:step".into());
        }
        let (a, b, step) = (parse(parts[0])?, parse(parts[1])?, parse(parts[2])?);
        if step <= 0.0 {
            return Err("--p-grid step must be positive".into());
        }
        let mut grid = Vec::new();
        let mut i = 0usize;
        loop {
            let p = a + step * i as f64;
            if p > b + step * 1e-9 {
                break;
            }
            grid.push(p);
            i += 1;
        }
        if grid.is_empty() {
            return Err("--p-grid range is empty".into());
        }
        Ok(grid)
    } else {
        text.split(',').map(parse).collect()
    }
}
