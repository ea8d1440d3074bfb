//! Experiment orchestration: config parsing, seeded parallel trials, CSV
//! output and the statistics report.

mod config;
mod experiment;
mod output;
mod report;

use std::path::Path;

pub use config::{split_list, ExperimentConfig};
pub use experiment::{run_experiment, summarize, Cell, ExperimentResults, SummaryRow, TrialOutcome};
pub use output::{fmt_f64, read_summary, trace_rows, write_results, FINALS_HEADER, SUMMARY_HEADER, TRACE_HEADER};
pub use report::{load_means, matrix_from_summary, parse_means, stats_pipeline, StatsReport};

/// Run the grid and write its output tree to `config.output_dir`.
pub fn run_and_write(config: &ExperimentConfig) -> crate::Result<ExperimentResults> {
    let results = run_experiment(config)?;
    write_results(Path::new(&config.output_dir), &results)?;
    Ok(results)
}
