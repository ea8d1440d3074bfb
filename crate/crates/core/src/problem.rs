//! Problem definition, box bounds and run bookkeeping shared by every optimizer.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

type Objective = dyn Fn(&[f64]) -> f64 + Send + Sync;

/// A box-bounded minimization problem.
#[derive(Clone)]
pub struct Problem {
    id: String,
    lower: Vec<f64>,
    upper: Vec<f64>,
    objective: Arc<Objective>,
    known_optimum: Option<f64>,
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("id", &self.id)
            .field("dimension", &self.dimension())
            .field("known_optimum", &self.known_optimum)
            .finish_non_exhaustive()
    }
}

impl Problem {
    pub fn new<F>(id: impl Into<String>, lower: Vec<f64>, upper: Vec<f64>, objective: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        if lower.is_empty() {
            return Err(Error::param("dimension", "must be at least 1"));
        }
        if lower.len() != upper.len() {
            return Err(Error::Dimension { expected: lower.len(), got: upper.len() });
        }
        for (index, (&lo, &hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo < hi) {
                return Err(Error::InvalidBounds { index, lower: lo, upper: hi });
            }
        }
        Ok(Self { id: id.into(), lower, upper, objective: Arc::new(objective), known_optimum: None })
    }

    /// Same bounds `[lower, upper]` in every coordinate.
    pub fn uniform_box<F>(id: impl Into<String>, dimension: usize, lower: f64, upper: f64, objective: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self::new(id, vec![lower; dimension], vec![upper; dimension], objective)
    }

    pub fn with_known_optimum(mut self, value: f64) -> Self {
        self.known_optimum = Some(value);
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn known_optimum(&self) -> Option<f64> {
        self.known_optimum
    }

    /// Per-coordinate box width `Ub - Lb`.
    pub fn widths(&self) -> Vec<f64> {
        self.lower.iter().zip(&self.upper).map(|(lo, hi)| hi - lo).collect()
    }

    /// Evaluate the objective. Panics on a length mismatch; use
    /// [`Problem::try_evaluate`] for checked evaluation.
    #[inline]
    pub fn evaluate(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.dimension(), "point has wrong dimension for {}", self.id);
        (self.objective)(x)
    }

    pub fn try_evaluate(&self, x: &[f64]) -> Result<f64> {
        self.check_dimension(x)?;
        Ok((self.objective)(x))
    }

    pub fn check_dimension(&self, x: &[f64]) -> Result<()> {
        if x.len() == self.dimension() {
            Ok(())
        } else {
            Err(Error::Dimension { expected: self.dimension(), got: x.len() })
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter().zip(&self.lower).zip(&self.upper).all(|((v, lo), hi)| lo <= v && v <= hi)
    }

    /// Saturate `x` in place onto the box.
    #[inline]
    pub fn clamp_in_place(&self, x: &mut [f64]) {
        for ((v, &lo), &hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.max(lo).min(hi);
        }
    }

    /// Uniform random point inside the box.
    pub fn random_point(&self, rng: &mut crate::RngStream) -> Vec<f64> {
        self.lower.iter().zip(&self.upper).map(|(&lo, &hi)| rng.uniform_in(lo, hi)).collect()
    }
}

/// Component-wise saturation of `x` onto the problem's box.
pub fn clamp_to_bounds(x: &[f64], problem: &Problem) -> Result<Vec<f64>> {
    problem.check_dimension(x)?;
    let mut y = x.to_vec();
    problem.clamp_in_place(&mut y);
    Ok(y)
}

/// Iteration budget, optionally capped by an evaluation budget.
///
/// Linear parameter schedules are always expressed against `max_iterations`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StopCriterion {
    pub max_iterations: usize,
    pub max_evaluations: Option<usize>,
}

impl StopCriterion {
    pub fn iterations(max_iterations: usize) -> Self {
        Self { max_iterations, max_evaluations: None }
    }

    pub fn with_max_evaluations(mut self, max_evaluations: usize) -> Self {
        self.max_evaluations = Some(max_evaluations);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(Error::param("max_iterations", "must be positive"));
        }
        if self.max_evaluations == Some(0) {
            return Err(Error::param("max_evaluations", "must be positive"));
        }
        Ok(())
    }

    /// Whether another iteration costing `cost` evaluations still fits.
    pub(crate) fn allows(&self, iterations_done: usize, evaluations_done: usize, cost: usize) -> bool {
        iterations_done < self.max_iterations && self.max_evaluations.is_none_or(|cap| evaluations_done + cost <= cap)
    }
}

/// One sample of the best-so-far curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    pub iteration: usize,
    pub best_fitness: f64,
}

/// Outcome of a single optimization run.
///
/// `evaluations` counts objective calls made by the iterations only; the
/// evaluation of the initial population is not charged to the budget.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    pub trace: Vec<TracePoint>,
    pub evaluations: usize,
}

impl RunResult {
    pub fn iterations(&self) -> usize {
        self.trace.len()
    }
}

/// Best-ever tracker plus evaluation counter; every optimizer funnels its
/// objective calls through one of these.
#[derive(Debug)]
pub(crate) struct Bookkeeper<'a> {
    problem: &'a Problem,
    best_position: Vec<f64>,
    best_fitness: f64,
    trace: Vec<TracePoint>,
    evaluations: usize,
}

impl<'a> Bookkeeper<'a> {
    pub fn new(problem: &'a Problem) -> Self {
        Self { problem, best_position: Vec::new(), best_fitness: f64::INFINITY, trace: Vec::new(), evaluations: 0 }
    }

    /// Evaluate a member of the initial population (not counted).
    pub fn evaluate_initial(&mut self, x: &[f64]) -> f64 {
        let f = self.problem.evaluate(x);
        self.offer(x, f);
        f
    }

    /// Evaluate a point produced during an iteration (counted).
    pub fn evaluate(&mut self, x: &[f64]) -> f64 {
        self.evaluations += 1;
        let f = self.problem.evaluate(x);
        self.offer(x, f);
        f
    }

    /// Counted evaluation that leaves the best-ever record untouched; the
    /// caller decides whether to [`offer`](Self::offer) the point.
    pub fn evaluate_silently(&mut self, x: &[f64]) -> f64 {
        self.evaluations += 1;
        self.problem.evaluate(x)
    }

    /// Returns true when `f` improved the best-ever value.
    pub fn offer(&mut self, x: &[f64], f: f64) -> bool {
        if f < self.best_fitness || self.best_position.is_empty() {
            self.best_fitness = f;
            self.best_position.clear();
            self.best_position.extend_from_slice(x);
            true
        } else {
            false
        }
    }

    pub fn end_iteration(&mut self, iteration: usize) {
        self.trace.push(TracePoint { iteration, best_fitness: self.best_fitness });
    }

    pub fn evaluations(&self) -> usize {
        self.evaluations
    }

    pub fn best_fitness(&self) -> f64 {
        self.best_fitness
    }

    pub fn best_position(&self) -> &[f64] {
        &self.best_position
    }

    pub fn finish(self) -> RunResult {
        RunResult {
            best_position: self.best_position,
            best_fitness: self.best_fitness,
            trace: self.trace,
            evaluations: self.evaluations,
        }
    }
}
