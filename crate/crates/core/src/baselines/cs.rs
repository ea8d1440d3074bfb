use std::f64::consts::PI;

use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::problem::{Bookkeeper, Problem, RunResult, StopCriterion};
use crate::rng::RngStream;

use super::{check_population, check_probability};

/// Cuckoo search with Mantegna Lévy flights. Each iteration costs two
/// evaluations per nest: one Lévy pass and one discovery pass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CsParams {
    pub population_size: usize,
    pub pa: f64,
    pub levy_beta: f64,
    pub levy_scale: f64,
}

impl Default for CsParams {
    fn default() -> Self {
        Self { population_size: 30, pa: 0.25, levy_beta: 1.5, levy_scale: 0.01 }
    }
}

impl CsParams {
    pub fn validate(&self) -> Result<()> {
        check_population(self.population_size, 1)?;
        check_probability("pa", self.pa)?;
        if !(self.levy_beta > 0.0 && self.levy_beta <= 2.0) {
            return Err(Error::param("levy_beta", "must lie in (0, 2]"));
        }
        Ok(())
    }
}

/// Scale of the numerator normal in Mantegna's algorithm.
pub fn mantegna_sigma(beta: f64) -> f64 {
    let num = gamma(1.0 + beta) * (PI * beta / 2.0).sin();
    let den = gamma((1.0 + beta) / 2.0) * beta * 2f64.powf((beta - 1.0) / 2.0);
    (num / den).powf(1.0 / beta)
}

pub fn cs_run(problem: &Problem, params: &CsParams, stop: StopCriterion, rng: &mut RngStream) -> Result<RunResult> {
    params.validate()?;
    stop.validate()?;
    let n = params.population_size;
    let d = problem.dimension();
    let beta = params.levy_beta;
    let sigma = mantegna_sigma(beta);
    let mut book = Bookkeeper::new(problem);

    let mut nests: Vec<Vec<f64>> = (0..n).map(|_| problem.random_point(rng)).collect();
    let mut fitness: Vec<f64> = nests.iter().map(|x| book.evaluate_initial(x)).collect();
    let mut trial = vec![0.0; d];

    let mut t = 0;
    while stop.allows(t, book.evaluations(), 2 * n) {
        t += 1;

        // Lévy pass, scaled by the distance to the best nest.
        let best = book.best_position().to_vec();
        for i in 0..n {
            for j in 0..d {
                let u = rng.normal() * sigma;
                let v = rng.normal();
                let step = u / v.abs().powf(1.0 / beta);
                let size = params.levy_scale * step * (nests[i][j] - best[j]);
                trial[j] = nests[i][j] + size * rng.normal();
            }
            problem.clamp_in_place(&mut trial);
            let f = book.evaluate(&trial);
            if f < fitness[i] {
                nests[i].copy_from_slice(&trial);
                fitness[i] = f;
            }
        }

        // Discovery pass: a fraction pa of components is rebuilt from the
        // difference of two randomly paired nests.
        let p1 = rng.permutation(n);
        let p2 = rng.permutation(n);
        let scale = rng.uniform();
        let snapshot = nests.clone();
        for i in 0..n {
            for j in 0..d {
                let keep = rng.uniform() > params.pa;
                trial[j] = snapshot[i][j];
                if keep {
                    trial[j] += scale * (snapshot[p1[i]][j] - snapshot[p2[i]][j]);
                }
            }
            problem.clamp_in_place(&mut trial);
            let f = book.evaluate(&trial);
            if f < fitness[i] {
                nests[i].copy_from_slice(&trial);
                fitness[i] = f;
            }
        }
        book.end_iteration(t);
    }
    Ok(book.finish())
}
