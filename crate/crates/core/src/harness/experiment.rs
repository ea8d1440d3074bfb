use rayon::prelude::*;

use super::config::ExperimentConfig;
use crate::algorithm::Algorithm;
use crate::benchmarks;
use crate::error::{Error, Result};
use crate::problem::{Problem, StopCriterion};
use crate::rng::{derive_trial_seed, RngStream};

/// Outcome of one seeded trial.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub trial: usize,
    pub seed: u64,
    pub final_best: f64,
    pub evaluations: usize,
    /// Best-so-far after each iteration.
    pub trace: Vec<f64>,
}

/// All trials of one (algorithm, problem) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    pub algorithm_id: String,
    pub algorithm: String,
    pub problem: String,
    pub trials: Vec<TrialOutcome>,
}

impl Cell {
    pub fn finals(&self) -> Vec<f64> {
        self.trials.iter().map(|t| t.final_best).collect()
    }
}

/// Distribution of final values of one cell.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub algorithm: String,
    pub problem: String,
    pub best: f64,
    pub median: f64,
    pub worst: f64,
    pub mean: f64,
    /// Sample standard deviation; zero for a single trial.
    pub sd: f64,
    /// Fraction of trials whose final value is strictly below the threshold.
    pub success_rate: f64,
}

/// Summary statistics over the final values of one cell.
pub fn summarize(algorithm: &str, problem: &str, finals: &[f64], success_threshold: f64) -> Result<SummaryRow> {
    if finals.is_empty() {
        return Err(Error::Degenerate("no trials to summarize"));
    }
    let mut sorted = finals.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    let median = if n % 2 == 1 { sorted[n / 2] } else { 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]) };
    let mean = finals.iter().sum::<f64>() / n as f64;
    let sd = if n > 1 { (finals.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt() } else { 0.0 };
    let successes = finals.iter().filter(|&&v| v < success_threshold).count();
    Ok(SummaryRow {
        algorithm: algorithm.to_string(),
        problem: problem.to_string(),
        best: sorted[0],
        median,
        worst: sorted[n - 1],
        mean,
        sd,
        success_rate: successes as f64 / n as f64,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResults {
    /// Ordered by algorithm, then problem, as listed in the config.
    pub cells: Vec<Cell>,
    pub summary: Vec<SummaryRow>,
}

/// Run every trial of the grid on the rayon pool.
///
/// Each trial seeds its own stream from the master seed and its identity, so
/// results do not depend on scheduling.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResults> {
    config.validate()?;
    let algorithms = config.algorithms()?;
    let problems: Vec<Problem> =
        config.problems.iter().map(|id| benchmarks::lookup(id)?.problem(config.dimension)).collect::<Result<_>>()?;

    let jobs: Vec<(usize, usize, usize)> = (0..algorithms.len())
        .flat_map(|a| (0..problems.len()).flat_map(move |p| (0..config.trials).map(move |t| (a, p, t))))
        .collect();

    let outcomes: Vec<TrialOutcome> =
        jobs.par_iter().map(|&(a, p, t)| run_trial(&algorithms[a], &problems[p], config, t)).collect::<Result<_>>()?;

    let mut cells = Vec::with_capacity(algorithms.len() * problems.len());
    let mut it = outcomes.into_iter();
    for algo in &algorithms {
        for problem in &problems {
            cells.push(Cell {
                algorithm_id: algo.id().to_string(),
                algorithm: algo.display_name().to_string(),
                problem: problem.id().to_string(),
                trials: it.by_ref().take(config.trials).collect(),
            });
        }
    }
    let summary = cells
        .iter()
        .map(|c| summarize(&c.algorithm, &c.problem, &c.finals(), config.success_threshold))
        .collect::<Result<_>>()?;
    Ok(ExperimentResults { cells, summary })
}

fn run_trial(algo: &Algorithm, problem: &Problem, config: &ExperimentConfig, trial: usize) -> Result<TrialOutcome> {
    let seed = derive_trial_seed(config.master_seed, algo.id(), problem.id(), trial as u64);
    let iterations =
        if config.match_budget { algo.iterations_for_budget(config.iterations) } else { config.iterations };
    let run = algo.run(problem, StopCriterion::iterations(iterations), &mut RngStream::new(seed))?;
    Ok(TrialOutcome {
        trial,
        seed,
        final_best: run.best_fitness,
        evaluations: run.evaluations,
        trace: run.trace.iter().map(|p| p.best_fitness).collect(),
    })
}
