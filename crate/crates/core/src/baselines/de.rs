use crate::error::{Error, Result};
use crate::problem::{Bookkeeper, Problem, RunResult, StopCriterion};
use crate::rng::RngStream;

use super::check_population;

/// DE/rand/1/bin with F and CR resampled per individual per generation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeParams {
    pub population_size: usize,
    pub f_range: (f64, f64),
    pub cr_range: (f64, f64),
}

impl Default for DeParams {
    fn default() -> Self {
        Self { population_size: 30, f_range: (0.4, 1.0), cr_range: (0.2, 0.9) }
    }
}

impl DeParams {
    pub fn validate(&self) -> Result<()> {
        check_population(self.population_size, 4)?;
        for (name, (lo, hi)) in [("f_range", self.f_range), ("cr_range", self.cr_range)] {
            if !(0.0 <= lo && lo <= hi && hi <= 2.0) {
                return Err(Error::param(name, "need 0 <= low <= high <= 2"));
            }
        }
        Ok(())
    }
}

/// Binomial crossover with an explicit forced index.
pub fn de_trial_vector_with(target: &[f64], mutant: &[f64], cr: f64, j_rand: usize, rng: &mut RngStream) -> Vec<f64> {
    debug_assert_eq!(target.len(), mutant.len());
    (0..target.len()).map(|j| if rng.uniform() < cr || j == j_rand { mutant[j] } else { target[j] }).collect()
}

/// Binomial crossover; at least one component always comes from the mutant.
pub fn de_trial_vector(target: &[f64], mutant: &[f64], cr: f64, rng: &mut RngStream) -> Result<Vec<f64>> {
    if target.len() != mutant.len() {
        return Err(Error::Dimension { expected: target.len(), got: mutant.len() });
    }
    let j_rand = rng.integer(target.len());
    Ok(de_trial_vector_with(target, mutant, cr, j_rand, rng))
}

fn three_distinct(n: usize, exclude: usize, rng: &mut RngStream) -> [usize; 3] {
    let r1 = rng.index_excluding(n, exclude);
    let mut r2 = rng.integer(n);
    while r2 == exclude || r2 == r1 {
        r2 = rng.integer(n);
    }
    let mut r3 = rng.integer(n);
    while r3 == exclude || r3 == r1 || r3 == r2 {
        r3 = rng.integer(n);
    }
    [r1, r2, r3]
}

pub fn de_run(problem: &Problem, params: &DeParams, stop: StopCriterion, rng: &mut RngStream) -> Result<RunResult> {
    params.validate()?;
    stop.validate()?;
    let n = params.population_size;
    let d = problem.dimension();
    let mut book = Bookkeeper::new(problem);

    let mut pop: Vec<Vec<f64>> = (0..n).map(|_| problem.random_point(rng)).collect();
    let mut fitness: Vec<f64> = pop.iter().map(|x| book.evaluate_initial(x)).collect();
    let mut mutant = vec![0.0; d];

    let mut t = 0;
    while stop.allows(t, book.evaluations(), n) {
        t += 1;
        let mut next = pop.clone();
        let mut next_fitness = fitness.clone();
        for i in 0..n {
            let f = rng.uniform_in(params.f_range.0, params.f_range.1);
            let cr = rng.uniform_in(params.cr_range.0, params.cr_range.1);
            let [r1, r2, r3] = three_distinct(n, i, rng);
            for j in 0..d {
                mutant[j] = pop[r1][j] + f * (pop[r2][j] - pop[r3][j]);
            }
            let j_rand = rng.integer(d);
            let mut trial = de_trial_vector_with(&pop[i], &mutant, cr, j_rand, rng);
            problem.clamp_in_place(&mut trial);
            let ft = book.evaluate(&trial);
            if ft <= fitness[i] {
                next[i] = trial;
                next_fitness[i] = ft;
            }
        }
        pop = next;
        fitness = next_fitness;
        book.end_iteration(t);
    }
    Ok(book.finish())
}
