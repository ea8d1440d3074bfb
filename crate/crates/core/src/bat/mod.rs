//! Standard and directional bat algorithms.

mod directional;
mod probe;
mod schedule;
mod standard;

pub use directional::{
    dba_run, directional_move, directional_move_with, local_search_step, local_search_with, DbaParams, DbaRunner,
    ScheduleMode,
};
pub use probe::oob_fraction_probe;
pub use schedule::linear_schedule;
pub(crate) use schedule::schedule_unchecked;
pub use standard::{standard_ba_run, StandardBatParams};

/// One agent of a bat population.
///
/// `velocity` is only used by the standard algorithm and `local_width` only by
/// the directional one; the unused field stays empty.
#[derive(Debug, Clone, PartialEq)]
pub struct BatState {
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
    pub fitness: f64,
    pub pulse_rate: f64,
    pub loudness: f64,
    pub local_width: Vec<f64>,
}

pub(crate) fn mean_loudness(bats: &[BatState]) -> f64 {
    bats.iter().map(|b| b.loudness).sum::<f64>() / bats.len() as f64
}
