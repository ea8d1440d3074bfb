use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::rng::RngStream;

/// Monte Carlo estimate of how often a first-iteration local walk leaves the box.
///
/// Each sample starts uniformly in the box, takes one step
/// `mean_loudness * eps * (w0_fraction * width)` and counts as out when any
/// coordinate falls outside. In one dimension the exact value is
/// `mean_loudness * w0_fraction / 2` whenever the step never exceeds the width.
pub fn oob_fraction_probe(
    problem: &Problem,
    w0_fraction: f64,
    mean_loudness: f64,
    samples: usize,
    rng: &mut RngStream,
) -> Result<f64> {
    if samples == 0 {
        return Err(Error::param("samples", "must be positive"));
    }
    if !(w0_fraction >= 0.0) || !(mean_loudness >= 0.0) {
        return Err(Error::param("w0_fraction", "fraction and loudness must be non-negative"));
    }
    let (lower, upper) = (problem.lower(), problem.upper());
    let widths = problem.widths();
    let mut out = 0usize;
    for _ in 0..samples {
        let mut outside = false;
        for j in 0..problem.dimension() {
            let x = rng.uniform_in(lower[j], upper[j]);
            let y = x + mean_loudness * rng.uniform_signed() * w0_fraction * widths[j];
            outside |= y < lower[j] || y > upper[j];
        }
        out += usize::from(outside);
    }
    Ok(out as f64 / samples as f64)
}
