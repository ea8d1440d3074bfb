use super::{mean_loudness, schedule_unchecked, BatState};
use crate::error::{Error, Result};
use crate::problem::{Bookkeeper, Problem, RunResult, StopCriterion};
use crate::rng::RngStream;

/// When the per-bat pulse rate, loudness and local width follow the schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScheduleMode {
    /// Reassigned to the schedule value at the current iteration only when the
    /// bat's update line fires: `w_i` after a local walk, `r_i` and `A_i`
    /// after an accepted move.
    #[default]
    Lazy,
    /// Every bat takes the schedule value at the start of each iteration.
    Global,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DbaParams {
    pub population_size: usize,
    pub f_min: f64,
    pub f_max: f64,
    pub r0: f64,
    pub r_inf: f64,
    pub a0: f64,
    pub a_inf: f64,
    /// Initial local width as a fraction of the box width.
    pub w0_fraction: f64,
    /// Final local width is the initial width divided by this.
    pub w_inf_divisor: f64,
    pub schedule: ScheduleMode,
}

impl Default for DbaParams {
    fn default() -> Self {
        Self {
            population_size: 30,
            f_min: 0.0,
            f_max: 2.0,
            r0: 0.1,
            r_inf: 0.7,
            a0: 0.9,
            a_inf: 0.6,
            w0_fraction: 0.25,
            w_inf_divisor: 100.0,
            schedule: ScheduleMode::Lazy,
        }
    }
}

impl DbaParams {
    pub fn validate(&self) -> Result<()> {
        if self.population_size < 2 {
            return Err(Error::param("population_size", "needs at least two bats"));
        }
        if !(self.f_min <= self.f_max) {
            return Err(Error::param("f_max", "must be at least f_min"));
        }
        if !(0.0 <= self.r0 && self.r0 <= self.r_inf && self.r_inf <= 1.0) {
            return Err(Error::param("r0", "need 0 <= r0 <= r_inf <= 1"));
        }
        if !(self.a0 >= self.a_inf && self.a_inf >= 0.0) {
            return Err(Error::param("a0", "need a0 >= a_inf >= 0"));
        }
        if !(self.w0_fraction >= 0.0) {
            return Err(Error::param("w0_fraction", "must be non-negative"));
        }
        if !(self.w_inf_divisor > 0.0) {
            return Err(Error::param("w_inf_divisor", "must be positive"));
        }
        Ok(())
    }
}

fn check_len(expected: usize, xs: &[&[f64]]) -> Result<()> {
    match xs.iter().find(|x| x.len() != expected) {
        Some(x) => Err(Error::Dimension { expected, got: x.len() }),
        None => Ok(()),
    }
}

/// Move toward the best bat, and also toward bat `k` when it is fitter.
///
/// `f1` and `f2` are per-dimension frequency vectors; `f2` is ignored when
/// `k_is_better` is false.
pub fn directional_move_with(
    x_i: &[f64],
    x_star: &[f64],
    x_k: &[f64],
    k_is_better: bool,
    f1: &[f64],
    f2: &[f64],
) -> Result<Vec<f64>> {
    check_len(x_i.len(), &[x_star, x_k, f1])?;
    if k_is_better {
        check_len(x_i.len(), &[f2])?;
    }
    Ok((0..x_i.len())
        .map(|j| {
            let mut v = x_i[j] + (x_star[j] - x_i[j]) * f1[j];
            if k_is_better {
                v += (x_k[j] - x_i[j]) * f2[j];
            }
            v
        })
        .collect())
}

/// The two-pulse move with freshly drawn frequency vectors. Not clamped.
pub fn directional_move(
    x_i: &[f64],
    fit_i: f64,
    x_star: &[f64],
    x_k: &[f64],
    fit_k: f64,
    params: &DbaParams,
    rng: &mut RngStream,
) -> Result<Vec<f64>> {
    check_len(x_i.len(), &[x_star, x_k])?;
    let mut out = vec![0.0; x_i.len()];
    directional_into(&mut out, x_i, x_star, x_k, fit_k < fit_i, params, rng);
    Ok(out)
}

#[inline]
fn directional_into(
    out: &mut [f64],
    x_i: &[f64],
    x_star: &[f64],
    x_k: &[f64],
    k_is_better: bool,
    params: &DbaParams,
    rng: &mut RngStream,
) {
    let span = params.f_max - params.f_min;
    for j in 0..out.len() {
        let f1 = params.f_min + span * rng.uniform();
        let mut v = x_i[j] + (x_star[j] - x_i[j]) * f1;
        if k_is_better {
            let f2 = params.f_min + span * rng.uniform();
            v += (x_k[j] - x_i[j]) * f2;
        }
        out[j] = v;
    }
}

/// `x_i + mean_loudness * eps * w_i` for a given `eps` vector.
pub fn local_search_with(x_i: &[f64], mean_loudness: f64, w_i: &[f64], eps: &[f64]) -> Result<Vec<f64>> {
    check_len(x_i.len(), &[w_i, eps])?;
    Ok(x_i.iter().zip(w_i).zip(eps).map(|((x, w), e)| x + mean_loudness * e * w).collect())
}

/// Local walk from the bat's own position, `eps` uniform on `[-1, 1]` per
/// dimension. Not clamped.
pub fn local_search_step(x_i: &[f64], mean_loudness: f64, w_i: &[f64], rng: &mut RngStream) -> Result<Vec<f64>> {
    check_len(x_i.len(), &[w_i])?;
    Ok(x_i.iter().zip(w_i).map(|(x, w)| x + mean_loudness * rng.uniform_signed() * w).collect())
}

/// Step-by-step directional bat run, exposing the population between
/// iterations.
#[derive(Debug)]
pub struct DbaRunner<'a> {
    problem: &'a Problem,
    params: DbaParams,
    stop: StopCriterion,
    book: Bookkeeper<'a>,
    bats: Vec<BatState>,
    w0: Vec<f64>,
    w_inf: Vec<f64>,
    t: usize,
    rejected_improvements: usize,
    candidate: Vec<f64>,
}

impl<'a> DbaRunner<'a> {
    /// Initialize the population uniformly in the box and evaluate it.
    pub fn new(problem: &'a Problem, params: DbaParams, stop: StopCriterion, rng: &mut RngStream) -> Result<Self> {
        params.validate()?;
        stop.validate()?;
        let w0: Vec<f64> = problem.widths().iter().map(|w| w * params.w0_fraction).collect();
        let w_inf: Vec<f64> = w0.iter().map(|w| w / params.w_inf_divisor).collect();
        let mut book = Bookkeeper::new(problem);
        let bats = (0..params.population_size)
            .map(|_| {
                let position = problem.random_point(rng);
                let fitness = book.evaluate_initial(&position);
                BatState {
                    position,
                    velocity: Vec::new(),
                    fitness,
                    pulse_rate: params.r0,
                    loudness: params.a0,
                    local_width: w0.clone(),
                }
            })
            .collect();
        Ok(Self {
            problem,
            params,
            stop,
            book,
            bats,
            w0,
            w_inf,
            t: 0,
            rejected_improvements: 0,
            candidate: vec![0.0; problem.dimension()],
        })
    }

    pub fn bats(&self) -> &[BatState] {
        &self.bats
    }

    /// Iterations completed so far.
    pub fn iteration(&self) -> usize {
        self.t
    }

    pub fn evaluations(&self) -> usize {
        self.book.evaluations()
    }

    pub fn best_fitness(&self) -> f64 {
        self.book.best_fitness()
    }

    pub fn best_position(&self) -> &[f64] {
        self.book.best_position()
    }

    /// Candidates that improved the global best although the bat itself
    /// rejected the move.
    pub fn rejected_improvements(&self) -> usize {
        self.rejected_improvements
    }

    pub fn is_finished(&self) -> bool {
        !self.stop.allows(self.t, self.book.evaluations(), self.params.population_size)
    }

    /// Run one iteration. Returns false without doing anything once the
    /// budget is exhausted.
    pub fn step(&mut self, rng: &mut RngStream) -> bool {
        if self.is_finished() {
            return false;
        }
        self.t += 1;
        let (t, t_max) = (self.t, self.stop.max_iterations);
        let p = self.params;
        let lazy = p.schedule == ScheduleMode::Lazy;
        let sched_w = |w0: &[f64], w_inf: &[f64], out: &mut Vec<f64>| {
            out.clear();
            out.extend(w0.iter().zip(w_inf).map(|(&a, &b)| schedule_unchecked(a, b, t, t_max)));
        };

        if !lazy {
            let r = schedule_unchecked(p.r0, p.r_inf, t, t_max);
            let a = schedule_unchecked(p.a0, p.a_inf, t, t_max);
            for bat in &mut self.bats {
                bat.pulse_rate = r;
                bat.loudness = a;
                sched_w(&self.w0, &self.w_inf, &mut bat.local_width);
            }
        }
        let mean_a = mean_loudness(&self.bats);
        let n = self.bats.len();

        for i in 0..n {
            let k = rng.index_excluding(n, i);
            let k_is_better = self.bats[k].fitness < self.bats[i].fitness;
            {
                let (bi, bk) = (&self.bats[i], &self.bats[k]);
                directional_into(
                    &mut self.candidate,
                    &bi.position,
                    self.book.best_position(),
                    &bk.position,
                    k_is_better,
                    &p,
                    rng,
                );
            }
            let bat = &mut self.bats[i];
            if rng.uniform() > bat.pulse_rate {
                for ((c, x), w) in self.candidate.iter_mut().zip(&bat.position).zip(&bat.local_width) {
                    *c = x + mean_a * rng.uniform_signed() * w;
                }
                if lazy {
                    sched_w(&self.w0, &self.w_inf, &mut bat.local_width);
                }
            }
            self.problem.clamp_in_place(&mut self.candidate);

            let previous_best = self.book.best_fitness();
            let f_new = self.book.evaluate(&self.candidate);
            if rng.uniform() < bat.loudness && f_new < bat.fitness {
                bat.position.copy_from_slice(&self.candidate);
                bat.fitness = f_new;
                if lazy {
                    bat.pulse_rate = schedule_unchecked(p.r0, p.r_inf, t, t_max);
                    bat.loudness = schedule_unchecked(p.a0, p.a_inf, t, t_max);
                }
            } else if f_new < previous_best {
                self.rejected_improvements += 1;
            }
        }
        self.book.end_iteration(t);
        true
    }

    pub fn run(mut self, rng: &mut RngStream) -> RunResult {
        while self.step(rng) {}
        self.finish()
    }

    pub fn finish(self) -> RunResult {
        self.book.finish()
    }
}

/// The directional bat algorithm.
///
/// Each bat emits two pulses: one toward the global best and one toward a
/// random other bat, followed only if that bat is fitter. With probability
/// `1 - r_i` a local walk of width `w_i` replaces the move. A move is kept
/// when `rand < A_i` and it improves the bat's own fitness, but any candidate
/// beating the global best updates it regardless. One evaluation per bat per
/// iteration.
pub fn dba_run(problem: &Problem, params: &DbaParams, stop: StopCriterion, rng: &mut RngStream) -> Result<RunResult> {
    Ok(DbaRunner::new(problem, *params, stop, rng)?.run(rng))
}
