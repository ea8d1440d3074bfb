//! Every optimizer at the same evaluation budget (30 agents, 500
//! iterations, cuckoo search at half the iterations) on Rastrigin.
//!
//! cargo run --release --example baselines_budget

use batopt::{benchmarks, Algorithm, RngStream, StopCriterion, ALGORITHM_IDS};

fn main() -> batopt::Result<()> {
    let problem = benchmarks::lookup("F06")?.problem(30)?;
    for id in ALGORITHM_IDS {
        let algo = Algorithm::from_id(id)?;
        let stop = StopCriterion::iterations(algo.iterations_for_budget(500));
        let run = algo.run(&problem, stop, &mut RngStream::new(11))?;
        println!("{:<4} evaluations {:>6}  best {:.4e}", algo.display_name(), run.evaluations, run.best_fitness);
    }
    Ok(())
}
