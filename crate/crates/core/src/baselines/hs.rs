use crate::error::{Error, Result};
use crate::problem::{Bookkeeper, Problem, RunResult, StopCriterion};
use crate::rng::RngStream;

use super::{argmax, check_population, check_probability};

/// Harmony search. Each iteration improvises `population_size` harmonies in
/// sequence, every one replacing the worst memory slot when it is better.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HsParams {
    pub population_size: usize,
    pub hmcr: f64,
    pub par: f64,
    /// Absolute pitch-adjust bandwidth.
    pub bw: f64,
}

impl Default for HsParams {
    fn default() -> Self {
        Self { population_size: 30, hmcr: 0.95, par: 0.3, bw: 0.2 }
    }
}

impl HsParams {
    pub fn validate(&self) -> Result<()> {
        check_population(self.population_size, 1)?;
        check_probability("hmcr", self.hmcr)?;
        check_probability("par", self.par)?;
        if !(self.bw >= 0.0) {
            return Err(Error::param("bw", "must be non-negative"));
        }
        Ok(())
    }
}

pub fn hs_run(problem: &Problem, params: &HsParams, stop: StopCriterion, rng: &mut RngStream) -> Result<RunResult> {
    params.validate()?;
    stop.validate()?;
    let n = params.population_size;
    let d = problem.dimension();
    let (lower, upper) = (problem.lower(), problem.upper());
    let mut book = Bookkeeper::new(problem);

    let mut memory: Vec<Vec<f64>> = (0..n).map(|_| problem.random_point(rng)).collect();
    let mut fitness: Vec<f64> = memory.iter().map(|h| book.evaluate_initial(h)).collect();
    let mut worst = argmax(&fitness);
    let mut harmony = vec![0.0; d];

    let mut t = 0;
    while stop.allows(t, book.evaluations(), n) {
        t += 1;
        for _ in 0..n {
            for j in 0..d {
                harmony[j] = if rng.uniform() < params.hmcr {
                    let mut v = memory[rng.integer(n)][j];
                    if rng.uniform() < params.par {
                        v += params.bw * rng.uniform_signed();
                    }
                    v
                } else {
                    rng.uniform_in(lower[j], upper[j])
                };
            }
            problem.clamp_in_place(&mut harmony);
            let f = book.evaluate(&harmony);
            if f < fitness[worst] {
                memory[worst].copy_from_slice(&harmony);
                fitness[worst] = f;
                worst = argmax(&fitness);
            }
        }
        book.end_iteration(t);
    }
    Ok(book.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks;

    #[test]
    fn budget_is_batched() {
        let p = benchmarks::suite(Some(&["F06"]), 30).unwrap().remove(0);
        let r = hs_run(&p, &HsParams::default(), StopCriterion::iterations(500), &mut RngStream::new(1)).unwrap();
        assert_eq!(r.evaluations, 15_000);
    }

    #[test]
    fn makes_progress() {
        let p = benchmarks::suite(Some(&["F01"]), 5).unwrap().remove(0);
        let r = hs_run(&p, &HsParams::default(), StopCriterion::iterations(300), &mut RngStream::new(2)).unwrap();
        assert!(r.best_fitness < r.trace[0].best_fitness);
    }
}
