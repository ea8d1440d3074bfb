use super::{mean_loudness, BatState};
use crate::error::{Error, Result};
use crate::problem::{Bookkeeper, Problem, RunResult, StopCriterion};
use crate::rng::RngStream;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandardBatParams {
    pub population_size: usize,
    pub f_min: f64,
    pub f_max: f64,
    /// Initial pulse rate, also the asymptote of the pulse-rate curve.
    pub r0: f64,
    pub a0: f64,
    pub alpha: f64,
    pub gamma: f64,
}

impl Default for StandardBatParams {
    fn default() -> Self {
        Self { population_size: 30, f_min: 0.0, f_max: 2.0, r0: 0.1, a0: 0.9, alpha: 0.9, gamma: 0.9 }
    }
}

impl StandardBatParams {
    pub fn validate(&self) -> Result<()> {
        if self.population_size == 0 {
            return Err(Error::param("population_size", "must be positive"));
        }
        if !(self.f_min <= self.f_max) {
            return Err(Error::param("f_max", "must be at least f_min"));
        }
        if !(0.0..=1.0).contains(&self.r0) {
            return Err(Error::param("r0", "must lie in [0, 1]"));
        }
        if !(self.a0 >= 0.0) {
            return Err(Error::param("a0", "must be non-negative"));
        }
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::param("alpha", "must lie in (0, 1)"));
        }
        if !(self.gamma > 0.0) {
            return Err(Error::param("gamma", "must be positive"));
        }
        Ok(())
    }
}

/// The original bat algorithm.
///
/// Each bat draws one scalar frequency per iteration. Its velocity is pulled
/// toward the current best and persists, while its position only moves when
/// the candidate is accepted. With probability `1 - r_i` the candidate is
/// replaced by a random walk around the best, scaled by the mean loudness. A
/// candidate is accepted when `rand < A_i` and it beats the current best. On
/// acceptance loudness decays geometrically and the pulse rate follows
/// `r0 (1 - exp(-gamma * accepted_count))`.
pub fn standard_ba_run(
    problem: &Problem,
    params: &StandardBatParams,
    stop: StopCriterion,
    rng: &mut RngStream,
) -> Result<RunResult> {
    params.validate()?;
    stop.validate()?;
    let n = params.population_size;
    let d = problem.dimension();
    let mut book = Bookkeeper::new(problem);

    let mut bats: Vec<BatState> = (0..n)
        .map(|_| {
            let position = problem.random_point(rng);
            let fitness = book.evaluate_initial(&position);
            BatState {
                position,
                velocity: vec![0.0; d],
                fitness,
                pulse_rate: params.r0,
                loudness: params.a0,
                local_width: Vec::new(),
            }
        })
        .collect();
    let mut accepted = vec![0u32; n];
    let mut best = book.best_position().to_vec();
    let mut best_fitness = book.best_fitness();
    let mut candidate = vec![0.0; d];

    let mut t = 0;
    while stop.allows(t, book.evaluations(), n) {
        t += 1;
        let mean_a = mean_loudness(&bats);
        for (i, bat) in bats.iter_mut().enumerate() {
            let f = params.f_min + (params.f_max - params.f_min) * rng.uniform();
            for j in 0..d {
                bat.velocity[j] += (best[j] - bat.position[j]) * f;
                candidate[j] = bat.position[j] + bat.velocity[j];
            }
            if rng.uniform() > bat.pulse_rate {
                for j in 0..d {
                    candidate[j] = best[j] + rng.uniform_signed() * mean_a;
                }
            }
            problem.clamp_in_place(&mut candidate);
            // Only accepted moves may become the best, so the result is
            // offered explicitly rather than on every evaluation.
            let f_new = book.evaluate_silently(&candidate);
            if rng.uniform() < bat.loudness && f_new < best_fitness {
                bat.position.copy_from_slice(&candidate);
                bat.fitness = f_new;
                bat.loudness *= params.alpha;
                accepted[i] += 1;
                bat.pulse_rate = params.r0 * (1.0 - (-params.gamma * f64::from(accepted[i])).exp());
                best.copy_from_slice(&candidate);
                best_fitness = f_new;
                book.offer(&candidate, f_new);
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
    fn budget_is_population_times_iterations() {
        let p = benchmarks::suite(Some(&["F01"]), 30).unwrap().remove(0);
        let r =
            standard_ba_run(&p, &StandardBatParams::default(), StopCriterion::iterations(500), &mut RngStream::new(1))
                .unwrap();
        assert_eq!(r.evaluations, 15_000);
        assert_eq!(r.trace.len(), 500);
    }

    #[test]
    fn single_iteration() {
        let p = benchmarks::suite(Some(&["F06"]), 5).unwrap().remove(0);
        let params = StandardBatParams { population_size: 7, ..Default::default() };
        let r = standard_ba_run(&p, &params, StopCriterion::iterations(1), &mut RngStream::new(2)).unwrap();
        assert_eq!(r.trace.len(), 1);
        assert_eq!(r.evaluations, 7);
    }

    #[test]
    fn toy_sphere_converges() {
        let p = benchmarks::suite(Some(&["F01"]), 2).unwrap().remove(0);
        let params = StandardBatParams { population_size: 10, ..Default::default() };
        let finals: Vec<f64> = (0..20)
            .map(|s| {
                standard_ba_run(&p, &params, StopCriterion::iterations(200), &mut RngStream::new(s))
                    .unwrap()
                    .best_fitness
            })
            .collect();
        assert!(finals[0] < 1e-2);
        // an occasional run stalls early
        assert!(finals.iter().filter(|&&f| f < 1e-2).count() >= 18, "{finals:?}");
    }

    #[test]
    fn best_is_consistent_with_position() {
        let p = benchmarks::suite(Some(&["F08"]), 4).unwrap().remove(0);
        let r =
            standard_ba_run(&p, &StandardBatParams::default(), StopCriterion::iterations(50), &mut RngStream::new(3))
                .unwrap();
        assert_eq!(p.evaluate(&r.best_position), r.best_fitness);
        assert_eq!(r.trace.last().unwrap().best_fitness, r.best_fitness);
        assert!(r.trace.windows(2).all(|w| w[1].best_fitness <= w[0].best_fitness));
    }

    #[test]
    fn invalid_params_rejected() {
        let p = benchmarks::suite(Some(&["F01"]), 2).unwrap().remove(0);
        let bad = StandardBatParams { alpha: 1.0, ..Default::default() };
        assert!(standard_ba_run(&p, &bad, StopCriterion::iterations(5), &mut RngStream::new(0)).is_err());
    }
}
