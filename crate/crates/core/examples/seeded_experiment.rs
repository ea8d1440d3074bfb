//! A small grid through the harness: run, write the output tree to a temp
//! directory, then feed its summary to the statistics report.
//!
//! cargo run --release --example seeded_experiment

use batopt::harness::{load_means, run_and_write, stats_pipeline, ExperimentConfig};

fn main() -> batopt::Result<()> {
    let out = std::env::temp_dir().join("batopt-seeded-experiment");
    let cfg = ExperimentConfig::from_ini_str(&format!(
        "[experiment]\n\
         algorithms = dba, ba, pso, de\n\
         problems = F01, F04, F06, F08, F10, F16\n\
         dimension = 10\n\
         iterations = 200\n\
         trials = 7\n\
         seed = 2024\n\
         output = {}\n",
        out.display()
    ))?;
    let results = run_and_write(&cfg)?;
    for row in &results.summary {
        println!("{:<4} {:<4} mean {:.3e}  median {:.3e}", row.algorithm, row.problem, row.mean, row.median);
    }
    let report = stats_pipeline(&load_means(&out.join("summary.csv"))?, "dba")?;
    let friedman = &report.ranks[0];
    for (a, r) in friedman.algorithms.iter().zip(&friedman.ranks) {
        println!("Friedman rank {a:<4} {r:.2}");
    }
    println!("outputs in {}", out.display());
    Ok(())
}
