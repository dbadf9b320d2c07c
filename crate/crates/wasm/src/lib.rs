//! WebAssembly bindings for the browser demo. Three operations, each
//! returning JSON for the page to render:
//!
//! * the analytic constants and the predicted curve f̂(p),
//! * an exact (budget-capped) solve of a random G(n, p) with its witness,
//! * the first-moment profile over l, locating the crossover.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use diagdist_core::analytic::{constants, first_moment_sum, predicted_fhat};
use diagdist_core::exact::{diagonal_distance_with, upper_bound_pairs, SolveOptions};
use diagdist_core::Graph;

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable payload")
}

fn error_json(message: impl std::fmt::Display) -> String {
    #[derive(Serialize)]
    struct Error {
        error: String,
    }
    to_json(&Error {
        error: message.to_string(),
    })
}

#[derive(Serialize)]
struct CurvePoint {
    p: f64,
    fhat: f64,
    regime: String,
}

#[derive(Serialize)]
struct CurvePayload {
    lambda0: f64,
    p0: f64,
    p0_minor: f64,
    alpha_half: f64,
    curve: Vec<CurvePoint>,
}

/// Analytic constants plus the predicted limit curve on `grid` interior
/// points.
#[wasm_bindgen]
pub fn curve_json(grid: u32) -> String {
    if grid == 0 {
        return error_json("grid must be positive");
    }
    let c = constants();
    let curve = (1..=grid)
        .map(|i| {
            let p = i as f64 / (grid + 1) as f64;
            let pred = predicted_fhat(p).expect("interior p");
            CurvePoint {
                p,
                fhat: pred.value,
                regime: pred.regime.to_string(),
            }
        })
        .collect();
    to_json(&CurvePayload {
        lambda0: c.lambda0,
        p0: c.p0,
        p0_minor: c.p0_minor,
        alpha_half: c.alpha_half,
        curve,
    })
}

#[derive(Serialize)]
struct SolvePayload {
    n: usize,
    p: f64,
    seed: u32,
    edges: usize,
    f: usize,
    f_over_n: f64,
    proven_optimal: bool,
    witness_a: Vec<usize>,
    witness_b: Vec<usize>,
    witness_line: String,
    mindeg_bound: usize,
    pair_bound: usize,
    bound_source: String,
    nodes_explored: u64,
    fhat_predicted: f64,
    regime_predicted: String,
    regime_observed: String,
}

/// Builds G(n, p) from the seed and solves it exactly (budget-capped).
#[wasm_bindgen]
pub fn solve_gnp_json(n: u32, p: f64, seed: u32, budget_millions: u32) -> String {
    if !(2..=64).contains(&n) {
        return error_json("demo solves graphs with 2 <= n <= 64");
    }
    if !(p > 0.0 && p < 1.0) {
        return error_json("p must lie strictly between 0 and 1");
    }
    let g = match Graph::gnp(n as usize, p, seed as u64) {
        Ok(g) => g,
        Err(e) => return error_json(e),
    };
    let budget = (budget_millions.max(1) as u64) * 1_000_000;
    let result = diagonal_distance_with(
        &g,
        &SolveOptions {
            budget_visits: budget,
            threads: 1,
        },
    );
    let mindeg_bound = g.min_degree() + 1;
    let pair_bound = upper_bound_pairs(&g).expect("n >= 2").0;
    let pred = predicted_fhat(p).expect("interior p");
    let regime_observed = if result.f == mindeg_bound {
        "min-degree"
    } else if result.f == pair_bound {
        "pair"
    } else {
        "plateau"
    };
    to_json(&SolvePayload {
        n: n as usize,
        p,
        seed,
        edges: g.edge_count(),
        f: result.f,
        f_over_n: result.f as f64 / n as f64,
        proven_optimal: result.proven_optimal,
        witness_a: result.witness.a_set.to_vec(),
        witness_b: result.witness.b_set.to_vec(),
        witness_line: result.witness.to_string(),
        mindeg_bound,
        pair_bound,
        bound_source: result.bound_source.to_string(),
        nodes_explored: result.nodes_explored,
        fhat_predicted: pred.value,
        regime_predicted: pred.regime.to_string(),
        regime_observed: regime_observed.to_string(),
    })
}

#[derive(Serialize)]
struct MomentRow {
    l: u64,
    lambda: f64,
    log2_sum: f64,
}

#[derive(Serialize)]
struct MomentPayload {
    n: u64,
    p: f64,
    crossover_l: Option<u64>,
    lambda0: f64,
    rows: Vec<MomentRow>,
}

/// First-moment sums for l = 1..=l_max; the crossover is the least l whose
/// sum reaches 1, the finite-n shadow of λ₀·n.
#[wasm_bindgen]
pub fn first_moment_profile_json(n: u32, p: f64, l_max: u32) -> String {
    if n == 0 || n > 2000 {
        return error_json("demo evaluates 1 <= n <= 2000");
    }
    let l_max = u64::from(l_max.max(1)).min(u64::from(n));
    let mut rows = Vec::with_capacity(l_max as usize);
    let mut crossover = None;
    for l in 1..=l_max {
        match first_moment_sum(u64::from(n), p, l, 1, u64::from(n)) {
            Ok(fm) => {
                if crossover.is_none() && fm.sum >= 1.0 {
                    crossover = Some(l);
                }
                rows.push(MomentRow {
                    l,
                    lambda: l as f64 / f64::from(n),
                    log2_sum: fm.log2_sum,
                });
            }
            Err(e) => return error_json(e),
        }
    }
    to_json(&MomentPayload {
        n: u64::from(n),
        p,
        crossover_l: crossover,
        lambda0: constants().lambda0,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_payload_is_well_formed() {
        let json = curve_json(19);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["curve"].as_array().unwrap().len(), 19);
        assert!((v["lambda0"].as_f64().unwrap() - 0.18929).abs() < 1e-4);
        assert!(curve_json(0).contains("error"));
    }

    #[test]
    fn solve_payload_matches_core() {
        let json = solve_gnp_json(16, 0.5, 7, 100);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let g = Graph::gnp(16, 0.5, 7).unwrap();
        let expect = diagdist_core::diagonal_distance(&g);
        assert_eq!(v["f"].as_u64().unwrap() as usize, expect.f);
        assert_eq!(v["witness_a"].as_array().unwrap().len(), expect.witness.a_set.len());
        assert!(v["proven_optimal"].as_bool().unwrap());
        assert!(solve_gnp_json(1, 0.5, 0, 1).contains("error"));
        assert!(solve_gnp_json(10, 0.0, 0, 1).contains("error"));
    }

    #[test]
    fn moment_profile_finds_crossover() {
        let json = first_moment_profile_json(200, 0.5, 60);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["crossover_l"].as_u64().unwrap(), 40);
        assert_eq!(v["rows"].as_array().unwrap().len(), 60);
    }
}
