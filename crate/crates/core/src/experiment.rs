//! Monte Carlo harness over `G(n, p)`: per-trial exact (or budget-capped)
//! solves, regime classification against the predicted curve, CSV output,
//! and the exhaustive computation of `f(n)` for tiny `n`.

use std::time::Instant;

use crate::analytic::{predicted_fhat, Regime};
use crate::error::{Error, Result};
use crate::exact::{diagonal_distance_with, upper_bound_pairs, SolveOptions};
use crate::format::serialize_graph6;
use crate::graph::Graph;
use crate::pool;
use crate::rng;

/// `f(n)` enumeration guard: all `2^C(n,2)` labeled graphs are visited.
pub const EXHAUSTIVE_FN_MAX: usize = 7;

/// CSV schema identifier written as the first column of every row.
pub const CSV_SCHEMA_ID: &str = "diagdist-exp-v1";

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub n: usize,
    pub p_grid: Vec<f64>,
    pub trials: usize,
    /// Master seed; trial seeds derive as
    /// `derive(derive(seed, p_index), trial_index)`.
    pub seed: u64,
    pub budget_visits: u64,
    pub threads: usize,
}

impl ExperimentConfig {
    pub fn new(n: usize, p_grid: Vec<f64>, trials: usize, seed: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(
                "experiments need graphs on at least two vertices".into(),
            ));
        }
        if trials == 0 {
            return Err(Error::InvalidInput("need at least one trial".into()));
        }
        if p_grid.is_empty() {
            return Err(Error::InvalidInput("empty probability grid".into()));
        }
        for &p in &p_grid {
            if !(p > 0.0 && p < 1.0) {
                return Err(Error::InvalidProbability { p });
            }
        }
        Ok(ExperimentConfig {
            n,
            p_grid,
            trials,
            seed,
            budget_visits: crate::exact::DEFAULT_BUDGET_VISITS,
            threads: 1,
        })
    }
}

/// One Monte Carlo trial. `regime_obs` classifies which upper bound was
/// tight, min-degree taking precedence when both are: `min-degree` iff
/// `f = mindeg_bound`, else `pair` iff `f = pair_bound`, else `plateau`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRecord {
    pub n: usize,
    pub p: f64,
    pub trial: usize,
    pub seed: u64,
    pub f: usize,
    pub proven_optimal: bool,
    pub mindeg_bound: usize,
    pub pair_bound: usize,
    pub fhat_pred: f64,
    pub regime_pred: Regime,
    pub regime_obs: Regime,
    pub micros: u64,
}

fn run_trial(n: usize, p: f64, trial: usize, seed: u64, budget: u64) -> ExperimentRecord {
    let start = Instant::now();
    let g = Graph::gnp(n, p, seed).expect("validated config");
    let result = diagonal_distance_with(
        &g,
        &SolveOptions {
            budget_visits: budget,
            threads: 1, // parallelism lives at the trial level
        },
    );
    let mindeg_bound = g.min_degree() + 1;
    let pair_bound = upper_bound_pairs(&g).expect("n >= 2").0;
    debug_assert!(result.f <= mindeg_bound.min(pair_bound));
    let pred = predicted_fhat(p).expect("p in (0,1)");
    let regime_obs = if result.f == mindeg_bound {
        Regime::MinDegree
    } else if result.f == pair_bound {
        Regime::Pair
    } else {
        Regime::Plateau
    };
    ExperimentRecord {
        n,
        p,
        trial,
        seed,
        f: result.f,
        proven_optimal: result.proven_optimal,
        mindeg_bound,
        pair_bound,
        fhat_pred: pred.value,
        regime_pred: pred.regime,
        regime_obs,
        micros: start.elapsed().as_micros() as u64,
    }
}

/// Runs every `(p, trial)` cell, in parallel over trials when configured.
/// Records come back sorted by `(p index, trial)` and are bit-identical for
/// any thread count (timing column aside).
pub fn run_gnp_experiment(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRecord>> {
    ExperimentConfig::new(cfg.n, cfg.p_grid.clone(), cfg.trials, cfg.seed)?;
    let units = cfg.p_grid.len() * cfg.trials;
    Ok(pool::map_indexed(units, cfg.threads, |u| {
        let pi = u / cfg.trials;
        let trial = u % cfg.trials;
        let seed = rng::derive(rng::derive(cfg.seed, pi as u64), trial as u64);
        run_trial(cfg.n, cfg.p_grid[pi], trial, seed, cfg.budget_visits)
    }))
}

/// Serializes records to CSV. The header names the schema; the timing column
/// is omitted when `include_timing` is false so outputs compare bytewise.
pub fn records_to_csv(records: &[ExperimentRecord], include_timing: bool) -> String {
    let mut out = String::from(
        "schema_id,n,p,trial,seed,f,proven_optimal,mindeg_bound,pair_bound,fhat_pred,regime_pred,regime_obs",
    );
    if include_timing {
        out.push_str(",micros");
    }
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{:.6},{},{},{},{},{},{},{:.6},{},{}",
            CSV_SCHEMA_ID,
            r.n,
            r.p,
            r.trial,
            r.seed,
            r.f,
            r.proven_optimal,
            r.mindeg_bound,
            r.pair_bound,
            r.fhat_pred,
            r.regime_pred,
            r.regime_obs
        ));
        if include_timing {
            out.push_str(&format!(",{}", r.micros));
        }
        out.push('\n');
    }
    out
}

/// One point of the empirical f̂ curve.
#[derive(Clone, Debug)]
pub struct FhatRow {
    pub p: f64,
    pub mean_f_over_n: f64,
    pub predicted: f64,
    pub regime: Regime,
}

/// Mean `f/n` per grid point next to the analytic prediction.
pub fn fhat_curve(cfg: &ExperimentConfig) -> Result<Vec<FhatRow>> {
    let records = run_gnp_experiment(cfg)?;
    Ok(cfg
        .p_grid
        .iter()
        .enumerate()
        .map(|(pi, &p)| {
            let slice = &records[pi * cfg.trials..(pi + 1) * cfg.trials];
            let mean =
                slice.iter().map(|r| r.f as f64).sum::<f64>() / (cfg.trials * cfg.n) as f64;
            let pred = predicted_fhat(p).expect("p validated");
            FhatRow {
                p,
                mean_f_over_n: mean,
                predicted: pred.value,
                regime: pred.regime,
            }
        })
        .collect())
}

/// Three-phase shape flag for an empirical curve: the peak sits strictly
/// inside the grid and both endpoints are below it by `margin`.
pub fn three_phase_shape(rows: &[FhatRow], margin: f64) -> bool {
    if rows.len() < 3 {
        return false;
    }
    let peak = rows
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.mean_f_over_n.total_cmp(&b.1.mean_f_over_n))
        .map(|(i, _)| i)
        .unwrap();
    if peak == 0 || peak == rows.len() - 1 {
        return false;
    }
    let top = rows[peak].mean_f_over_n;
    rows[0].mean_f_over_n < top - margin && rows[rows.len() - 1].mean_f_over_n < top - margin
}

/// Exact `f(n) = max f(G)` over all labeled graphs of order `n`, by direct
/// enumeration of all `2^C(n,2)` edge sets. `include_edgeless` selects the
/// reading of "non-empty": over all graphs on `n` vertices (true), or only
/// graphs with at least one edge (false). Returns `f(n)` and a graph6 string
/// of the first maximizer in edge-mask order.
pub fn exhaustive_fn(n: usize, include_edgeless: bool) -> Result<(usize, String)> {
    if n == 0 {
        return Err(Error::InvalidInput("f(n) needs n >= 1".into()));
    }
    if n > EXHAUSTIVE_FN_MAX {
        return Err(Error::TooLarge {
            what: "exhaustive f(n)",
            limit: EXHAUSTIVE_FN_MAX,
            got: n,
        });
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let mut best: Option<(usize, Graph)> = None;
    for mask in 0u32..1 << pairs.len() {
        if mask == 0 && !include_edgeless {
            continue;
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edge_list(n, &edges)?;
        let f = diagonal_distance_with(
            &g,
            &SolveOptions {
                budget_visits: u64::MAX,
                threads: 1,
            },
        )
        .f;
        if best.as_ref().is_none_or(|(bf, _)| f > *bf) {
            best = Some((f, g));
        }
    }
    match best {
        Some((f, g)) => Ok((f, serialize_graph6(&g))),
        None => Err(Error::InvalidInput(
            "no graphs to maximize over (n = 1 with edgeless graphs excluded)".into(),
        )),
    }
}
