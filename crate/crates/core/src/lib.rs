//! Directional bat algorithm, the standard bat algorithm and five classical
//! baselines, a benchmark suite, a seeded experiment harness and a
//! nonparametric comparison engine for algorithms × problems result tables.
//!
//! ```
//! use batopt::{bat, benchmarks, RngStream, StopCriterion};
//!
//! let sphere = benchmarks::lookup("F01")?.problem(10)?;
//! let run = bat::dba_run(&sphere, &Default::default(), StopCriterion::iterations(200), &mut RngStream::new(7))?;
//! assert_eq!(run.evaluations, 30 * 200);
//! # Ok::<(), batopt::Error>(())
//! ```

// `!(x >= 0.0)` forms are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algorithm;
pub mod baselines;
pub mod bat;
pub mod benchmarks;
mod error;
pub mod harness;
mod problem;
mod rng;
pub mod stats;

pub use algorithm::{Algorithm, ALGORITHM_IDS};
pub use error::{Error, Result};
pub use problem::{clamp_to_bounds, Problem, RunResult, StopCriterion, TracePoint};
pub use rng::{derive_trial_seed, RngStream};
