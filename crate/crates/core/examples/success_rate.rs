//! Success-rate protocol on the sphere: 30 seeded runs of dBA at d = 30 and
//! a run counts when its final best is below 1e-10.
//!
//! cargo run --release --example success_rate [-- POP ITERS]

use batopt::harness::{run_experiment, ExperimentConfig};

fn main() -> batopt::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("integer argument"));
    let population = args.next().unwrap_or(50);
    let iterations = args.next().unwrap_or(2000);
    let cfg = ExperimentConfig {
        algorithms: vec!["dba".into()],
        problems: vec!["F01".into()],
        population,
        iterations,
        trials: 30,
        master_seed: 16,
        ..Default::default()
    };
    let results = run_experiment(&cfg)?;
    let row = &results.summary[0];
    println!("N = {population}, t_max = {iterations}");
    println!("mean {:.3e}  sd {:.3e}  worst {:.3e}", row.mean, row.sd, row.worst);
    println!("success rate {:.2}%", 100.0 * row.success_rate);
    Ok(())
}
