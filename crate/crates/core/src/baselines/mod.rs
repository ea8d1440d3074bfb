//! Classical comparison algorithms: PSO, harmony search, cuckoo search, a
//! real-coded GA and DE/rand/1/bin.

mod cs;
mod de;
mod ga;
mod hs;
mod pso;

pub use cs::{cs_run, mantegna_sigma, CsParams};
pub use de::{de_run, de_trial_vector, de_trial_vector_with, DeParams};
pub use ga::{ga_run, GaParams};
pub use hs::{hs_run, HsParams};
pub use pso::{pso_run, PsoParams};

use crate::error::{Error, Result};

pub(crate) fn check_probability(name: &'static str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::param(name, "must lie in [0, 1]"))
    }
}

pub(crate) fn check_population(n: usize, min: usize) -> Result<()> {
    if n >= min {
        Ok(())
    } else {
        Err(Error::param("population_size", format!("needs at least {min}")))
    }
}

/// Index of the largest value; first wins on ties.
pub(crate) fn argmax(values: &[f64]) -> usize {
    let mut worst = 0;
    for (i, v) in values.iter().enumerate() {
        if *v > values[worst] {
            worst = i;
        }
    }
    worst
}
