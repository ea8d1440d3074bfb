//! Directional versus standard bat algorithm on the twenty classical
//! functions: 25 seeds each, d = 30, 30 bats, 500 iterations.
//!
//! cargo run --release --example ba_vs_dba [-- SEEDS]

use batopt::{benchmarks, derive_trial_seed, Algorithm, RngStream, StopCriterion};
use rayon::prelude::*;

fn mean_final(algo: &Algorithm, id: &str, seeds: u64) -> f64 {
    let problem = benchmarks::lookup(id).unwrap().problem(30).unwrap();
    let sum: f64 = (0..seeds)
        .into_par_iter()
        .map(|t| {
            let mut rng = RngStream::new(derive_trial_seed(1, algo.id(), id, t));
            algo.run(&problem, StopCriterion::iterations(500), &mut rng).unwrap().best_fitness
        })
        .sum();
    sum / seeds as f64
}

fn main() {
    let seeds: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(25);
    let dba = Algorithm::from_id("dba").unwrap();
    let ba = Algorithm::from_id("ba").unwrap();
    let mut wins = 0;
    println!("{:<4} {:>14} {:>14}", "", "dBA mean", "BA mean");
    for id in benchmarks::classical_ids() {
        let (d, b) = (mean_final(&dba, id, seeds), mean_final(&ba, id, seeds));
        wins += usize::from(d < b);
        println!("{id:<4} {d:>14.4e} {b:>14.4e}{}", if d < b { "  *" } else { "" });
    }
    println!("dBA wins {wins}/20");
}
