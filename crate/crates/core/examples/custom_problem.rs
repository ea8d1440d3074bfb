//! Any closure over a box is a problem. Here: a shifted, weighted quadratic
//! in 4-D, stepped manually with `DbaRunner` to inspect the swarm.
//!
//! cargo run --release --example custom_problem

use batopt::bat::{DbaParams, DbaRunner};
use batopt::{Problem, RngStream, StopCriterion};

fn main() -> batopt::Result<()> {
    let target = [1.5, -2.0, 0.25, 3.0];
    let problem = Problem::uniform_box("shifted-quadratic", 4, -5.0, 5.0, move |x| {
        x.iter().zip(target).enumerate().map(|(i, (v, t))| (i + 1) as f64 * (v - t).powi(2)).sum()
    })?
    .with_known_optimum(0.0);

    let mut rng = RngStream::new(3);
    let mut runner = DbaRunner::new(
        &problem,
        DbaParams { population_size: 20, ..Default::default() },
        StopCriterion::iterations(300),
        &mut rng,
    )?;
    while runner.step(&mut rng) {
        if runner.iteration() % 100 == 0 {
            let loud: f64 = runner.bats().iter().map(|b| b.loudness).sum::<f64>() / runner.bats().len() as f64;
            println!("iter {:>3}  best {:.3e}  mean loudness {loud:.3}", runner.iteration(), runner.best_fitness());
        }
    }
    println!("rejected improvements: {}", runner.rejected_improvements());
    let run = runner.finish();
    println!("x* = {:.4?}", run.best_position);
    Ok(())
}
