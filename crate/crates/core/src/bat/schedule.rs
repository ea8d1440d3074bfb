use crate::error::{Error, Result};

/// Linear interpolation from `v_start` at `t = 1` to `v_end` at `t = t_max`.
///
/// A single-iteration schedule (`t_max = 1`) stays at `v_start`.
pub fn linear_schedule(v_start: f64, v_end: f64, t: usize, t_max: usize) -> Result<f64> {
    if t == 0 || t > t_max {
        return Err(Error::ScheduleRange { t, t_max });
    }
    Ok(schedule_unchecked(v_start, v_end, t, t_max))
}

#[inline]
pub(crate) fn schedule_unchecked(v_start: f64, v_end: f64, t: usize, t_max: usize) -> f64 {
    // the closed form is exact at t_max but not at t = 1
    if t == 1 {
        return v_start;
    }
    let (t, t_max) = (t as f64, t_max as f64);
    (v_start - v_end) / (1.0 - t_max) * (t - t_max) + v_end
}
