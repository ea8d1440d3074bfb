use crate::bat::schedule_unchecked;
use crate::error::{Error, Result};
use crate::problem::{Bookkeeper, Problem, RunResult, StopCriterion};
use crate::rng::RngStream;

use super::check_population;

/// Global-best PSO with linearly decreasing inertia.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsoParams {
    pub population_size: usize,
    pub c1: f64,
    pub c2: f64,
    pub w_start: f64,
    pub w_end: f64,
    /// Velocity limit as a fraction of the box width.
    pub v_max_fraction: f64,
}

impl Default for PsoParams {
    fn default() -> Self {
        Self { population_size: 30, c1: 1.5, c2: 1.2, w_start: 0.9, w_end: 0.4, v_max_fraction: 0.5 }
    }
}

impl PsoParams {
    pub fn validate(&self) -> Result<()> {
        check_population(self.population_size, 1)?;
        if !(self.c1 > 0.0 && self.c2 > 0.0) {
            return Err(Error::param("c1", "acceleration coefficients must be positive"));
        }
        if !(self.w_start >= self.w_end) {
            return Err(Error::param("w_start", "must be at least w_end"));
        }
        if !(self.v_max_fraction > 0.0) {
            return Err(Error::param("v_max_fraction", "must be positive"));
        }
        Ok(())
    }

    /// Inertia weight at iteration `t` of `t_max`.
    pub fn inertia(&self, t: usize, t_max: usize) -> f64 {
        schedule_unchecked(self.w_start, self.w_end, t, t_max)
    }
}

pub fn pso_run(problem: &Problem, params: &PsoParams, stop: StopCriterion, rng: &mut RngStream) -> Result<RunResult> {
    params.validate()?;
    stop.validate()?;
    let n = params.population_size;
    let d = problem.dimension();
    let v_max: Vec<f64> = problem.widths().iter().map(|w| w * params.v_max_fraction).collect();
    let mut book = Bookkeeper::new(problem);

    let mut x: Vec<Vec<f64>> = (0..n).map(|_| problem.random_point(rng)).collect();
    let mut v = vec![vec![0.0; d]; n];
    let mut pbest = x.clone();
    let mut pbest_f: Vec<f64> = x.iter().map(|xi| book.evaluate_initial(xi)).collect();

    let mut t = 0;
    while stop.allows(t, book.evaluations(), n) {
        t += 1;
        let w = params.inertia(t, stop.max_iterations);
        for i in 0..n {
            for j in 0..d {
                let g = book.best_position()[j];
                let r1 = rng.uniform();
                let r2 = rng.uniform();
                let vj = w * v[i][j] + params.c1 * r1 * (pbest[i][j] - x[i][j]) + params.c2 * r2 * (g - x[i][j]);
                v[i][j] = vj.clamp(-v_max[j], v_max[j]);
                x[i][j] += v[i][j];
            }
            problem.clamp_in_place(&mut x[i]);
            let f = book.evaluate(&x[i]);
            if f < pbest_f[i] {
                pbest_f[i] = f;
                pbest[i].clone_from(&x[i]);
            }
        }
        book.end_iteration(t);
    }
    Ok(book.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{bat::linear_schedule, benchmarks};

    #[test]
    fn inertia_uses_shared_schedule() {
        let p = PsoParams::default();
        for t in [1, 7, 250, 500] {
            assert_eq!(p.inertia(t, 500), linear_schedule(0.9, 0.4, t, 500).unwrap());
        }
    }

    #[test]
    fn toy_sphere_median() {
        let p = benchmarks::suite(Some(&["F01"]), 2).unwrap().remove(0);
        let params = PsoParams { population_size: 10, ..Default::default() };
        let mut finals: Vec<f64> = (0..20)
            .map(|s| pso_run(&p, &params, StopCriterion::iterations(200), &mut RngStream::new(s)).unwrap().best_fitness)
            .collect();
        finals.sort_by(f64::total_cmp);
        assert!(finals[10] < 1e-2, "{finals:?}");
    }

    #[test]
    fn budget() {
        let p = benchmarks::suite(Some(&["F03"]), 30).unwrap().remove(0);
        let r = pso_run(&p, &PsoParams::default(), StopCriterion::iterations(500), &mut RngStream::new(1)).unwrap();
        assert_eq!(r.evaluations, 15_000);
    }
}
