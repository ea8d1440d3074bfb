use crate::error::{Error, Result};
use crate::problem::{Bookkeeper, Problem, RunResult, StopCriterion};
use crate::rng::RngStream;

use super::{argmax, check_population, check_probability};

/// Real-coded generational GA: binary tournaments, BLX-alpha crossover,
/// per-gene Gaussian mutation and elitism.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaParams {
    pub population_size: usize,
    pub crossover_prob: f64,
    pub mutation_prob: f64,
    pub tournament_size: usize,
    pub blx_alpha: f64,
    /// Mutation standard deviation as a fraction of the box width.
    pub mutation_sigma_fraction: f64,
    /// Parents that survive into the next generation if they beat its worst.
    pub elitism: usize,
}

impl Default for GaParams {
    fn default() -> Self {
        Self {
            population_size: 30,
            crossover_prob: 0.95,
            mutation_prob: 0.05,
            tournament_size: 2,
            blx_alpha: 0.5,
            mutation_sigma_fraction: 0.1,
            elitism: 1,
        }
    }
}

impl GaParams {
    pub fn validate(&self) -> Result<()> {
        check_population(self.population_size, 2)?;
        check_probability("crossover_prob", self.crossover_prob)?;
        check_probability("mutation_prob", self.mutation_prob)?;
        if self.tournament_size == 0 {
            return Err(Error::param("tournament_size", "must be positive"));
        }
        if !(self.blx_alpha >= 0.0) {
            return Err(Error::param("blx_alpha", "must be non-negative"));
        }
        if self.elitism > self.population_size {
            return Err(Error::param("elitism", "cannot exceed the population"));
        }
        Ok(())
    }
}

fn tournament(fitness: &[f64], size: usize, rng: &mut RngStream) -> usize {
    let mut winner = rng.integer(fitness.len());
    for _ in 1..size {
        let c = rng.integer(fitness.len());
        if fitness[c] < fitness[winner] {
            winner = c;
        }
    }
    winner
}

pub fn ga_run(problem: &Problem, params: &GaParams, stop: StopCriterion, rng: &mut RngStream) -> Result<RunResult> {
    params.validate()?;
    stop.validate()?;
    let n = params.population_size;
    let d = problem.dimension();
    let sigma: Vec<f64> = problem.widths().iter().map(|w| w * params.mutation_sigma_fraction).collect();
    let mut book = Bookkeeper::new(problem);

    let mut pop: Vec<Vec<f64>> = (0..n).map(|_| problem.random_point(rng)).collect();
    let mut fitness: Vec<f64> = pop.iter().map(|x| book.evaluate_initial(x)).collect();

    let mut t = 0;
    while stop.allows(t, book.evaluations(), n) {
        t += 1;
        let mut children: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
        while children.len() < n {
            let a = &pop[tournament(&fitness, params.tournament_size, rng)];
            let b = &pop[tournament(&fitness, params.tournament_size, rng)];
            let (mut c1, mut c2) = (a.clone(), b.clone());
            if rng.uniform() < params.crossover_prob {
                for j in 0..d {
                    let (lo, hi) = (a[j].min(b[j]), a[j].max(b[j]));
                    let ext = params.blx_alpha * (hi - lo);
                    c1[j] = rng.uniform_in(lo - ext, hi + ext);
                    c2[j] = rng.uniform_in(lo - ext, hi + ext);
                }
            }
            children.push(c1);
            children.push(c2);
        }
        children.truncate(n);

        let mut child_fitness = Vec::with_capacity(n);
        for c in &mut children {
            for j in 0..d {
                if rng.uniform() < params.mutation_prob {
                    c[j] += sigma[j] * rng.normal();
                }
            }
            problem.clamp_in_place(c);
            child_fitness.push(book.evaluate(c));
        }

        // Elites (best parents first) displace the worst children they beat.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| fitness[i].total_cmp(&fitness[j]));
        for &e in order.iter().take(params.elitism) {
            let worst = argmax(&child_fitness);
            if fitness[e] < child_fitness[worst] {
                children[worst].clone_from(&pop[e]);
                child_fitness[worst] = fitness[e];
            }
        }
        pop = children;
        fitness = child_fitness;
        book.end_iteration(t);
    }
    Ok(book.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks;

    #[test]
    fn no_variation_keeps_initial_best() {
        let p = benchmarks::suite(Some(&["F06"]), 6).unwrap().remove(0);
        let params = GaParams { crossover_prob: 0.0, mutation_prob: 0.0, ..Default::default() };
        let mut rng = RngStream::new(5);
        let initial_best = {
            let mut probe = rng.clone();
            (0..params.population_size).map(|_| p.evaluate(&p.random_point(&mut probe))).fold(f64::INFINITY, f64::min)
        };
        let r = ga_run(&p, &params, StopCriterion::iterations(50), &mut rng).unwrap();
        assert_eq!(r.best_fitness, initial_best);
    }

    #[test]
    fn budget() {
        let p = benchmarks::suite(Some(&["F01"]), 30).unwrap().remove(0);
        let r = ga_run(&p, &GaParams::default(), StopCriterion::iterations(500), &mut RngStream::new(1)).unwrap();
        assert_eq!(r.evaluations, 15_000);
    }

    #[test]
    fn odd_population_budget() {
        let p = benchmarks::suite(Some(&["F01"]), 3).unwrap().remove(0);
        let params = GaParams { population_size: 7, ..Default::default() };
        let r = ga_run(&p, &params, StopCriterion::iterations(10), &mut RngStream::new(1)).unwrap();
        assert_eq!(r.evaluations, 70);
    }
}
