//! Minimal run: dBA on the 10-D sphere, printing the convergence every 50
//! iterations.
//!
//! cargo run --release --example dba_sphere

use batopt::bat::{dba_run, DbaParams};
use batopt::{benchmarks, RngStream, StopCriterion};

fn main() -> batopt::Result<()> {
    let sphere = benchmarks::lookup("F01")?.problem(10)?;
    let params = DbaParams::default();
    let run = dba_run(&sphere, &params, StopCriterion::iterations(500), &mut RngStream::new(42))?;
    for p in run.trace.iter().filter(|p| p.iteration % 50 == 0) {
        println!("iter {:>4}  best {:.3e}", p.iteration, p.best_fitness);
    }
    println!("final {:.3e} after {} evaluations", run.best_fitness, run.evaluations);
    Ok(())
}
