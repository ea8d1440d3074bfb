//! Walk the registry: box, minimum dimension and reference optimum of each
//! function, evaluated at its reported minimizer.
//!
//! cargo run --example benchmark_registry

use batopt::benchmarks;

fn main() -> batopt::Result<()> {
    let d = 10;
    for spec in benchmarks::registry() {
        let (lo, hi) = spec.bounds.resolve(d);
        match spec.reference_optimum(d) {
            Some(opt) => {
                let f = spec.evaluate(&opt.location)?;
                let tag = if opt.closed_form { "" } else { " (numerical)" };
                println!("{:<12} {:<28} [{lo}, {hi}]  f(x*) = {f:.6e}{tag}", spec.id, spec.name);
            }
            None => println!("{:<12} {:<28} [{lo}, {hi}]  no reference minimizer", spec.id, spec.name),
        }
    }
    Ok(())
}
