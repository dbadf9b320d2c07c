// Solves a handful of random graphs across the density range and prints the
// empirical f/n next to the predicted curve. Run with --release.
use diagdist_core::analytic::constants;
use diagdist_core::experiment::{fhat_curve, ExperimentConfig};

fn main() {
    let c = constants();
    println!("lambda0 = {:.6}, p0 = {:.6}", c.lambda0, c.p0);

    let grid = vec![0.05, 0.15, 0.25, 0.35, 0.5, 0.65, 0.8, 0.9, 0.95];
    let mut cfg = ExperimentConfig::new(36, grid, 8, 2024).unwrap();
    cfg.threads = std::thread::available_parallelism().map_or(1, |v| v.get());

    println!("{:>6} {:>10} {:>10}  regime", "p", "mean f/n", "predicted");
    for row in fhat_curve(&cfg).unwrap() {
        println!(
            "{:>6.2} {:>10.4} {:>10.4}  {}",
            row.p, row.mean_f_over_n, row.predicted, row.regime
        );
    }
}
