//! Uniform access to every optimizer by id, as used by the harness.

use crate::baselines::{cs_run, de_run, ga_run, hs_run, pso_run, CsParams, DeParams, GaParams, HsParams, PsoParams};
use crate::bat::{dba_run, standard_ba_run, DbaParams, ScheduleMode, StandardBatParams};
use crate::error::{Error, Result};
use crate::problem::{Problem, RunResult, StopCriterion};
use crate::rng::RngStream;

/// An optimizer together with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Algorithm {
    Dba(DbaParams),
    Ba(StandardBatParams),
    Pso(PsoParams),
    Hs(HsParams),
    Cs(CsParams),
    Ga(GaParams),
    De(DeParams),
}

/// Ids in the canonical reporting order.
pub const ALGORITHM_IDS: [&str; 7] = ["dba", "ba", "pso", "hs", "cs", "ga", "de"];

impl Algorithm {
    /// Default parameters for an id (case-insensitive).
    pub fn from_id(id: &str) -> Result<Self> {
        Ok(match id.to_ascii_lowercase().as_str() {
            "dba" => Algorithm::Dba(DbaParams::default()),
            "ba" => Algorithm::Ba(StandardBatParams::default()),
            "pso" => Algorithm::Pso(PsoParams::default()),
            "hs" => Algorithm::Hs(HsParams::default()),
            "cs" => Algorithm::Cs(CsParams::default()),
            "ga" => Algorithm::Ga(GaParams::default()),
            "de" => Algorithm::De(DeParams::default()),
            _ => return Err(Error::UnknownAlgorithm(id.to_string())),
        })
    }

    pub fn id(&self) -> &'static str {
        match self {
            Algorithm::Dba(_) => "dba",
            Algorithm::Ba(_) => "ba",
            Algorithm::Pso(_) => "pso",
            Algorithm::Hs(_) => "hs",
            Algorithm::Cs(_) => "cs",
            Algorithm::Ga(_) => "ga",
            Algorithm::De(_) => "de",
        }
    }

    /// Name used in report tables.
    pub fn display_name(&self) -> &'static str {
        match self {
            Algorithm::Dba(_) => "dBA",
            Algorithm::Ba(_) => "BA",
            Algorithm::Pso(_) => "PSO",
            Algorithm::Hs(_) => "HS",
            Algorithm::Cs(_) => "CS",
            Algorithm::Ga(_) => "GA",
            Algorithm::De(_) => "DE",
        }
    }

    pub fn population_size(&self) -> usize {
        match self {
            Algorithm::Dba(p) => p.population_size,
            Algorithm::Ba(p) => p.population_size,
            Algorithm::Pso(p) => p.population_size,
            Algorithm::Hs(p) => p.population_size,
            Algorithm::Cs(p) => p.population_size,
            Algorithm::Ga(p) => p.population_size,
            Algorithm::De(p) => p.population_size,
        }
    }

    pub fn set_population_size(&mut self, n: usize) {
        match self {
            Algorithm::Dba(p) => p.population_size = n,
            Algorithm::Ba(p) => p.population_size = n,
            Algorithm::Pso(p) => p.population_size = n,
            Algorithm::Hs(p) => p.population_size = n,
            Algorithm::Cs(p) => p.population_size = n,
            Algorithm::Ga(p) => p.population_size = n,
            Algorithm::De(p) => p.population_size = n,
        }
    }

    /// Objective evaluations spent per iteration.
    pub fn evaluations_per_iteration(&self) -> usize {
        match self {
            Algorithm::Cs(p) => 2 * p.population_size,
            _ => self.population_size(),
        }
    }

    /// Iteration count giving the same evaluation budget as `iterations`
    /// iterations of a one-evaluation-per-agent method.
    pub fn iterations_for_budget(&self, iterations: usize) -> usize {
        match self {
            Algorithm::Cs(_) => (iterations / 2).max(1),
            _ => iterations,
        }
    }

    /// Override one named parameter. Integers and the dBA schedule mode are
    /// passed as numbers (`schedule` 0 = lazy, 1 = global).
    pub fn set_param(&mut self, name: &str, value: f64) -> Result<()> {
        let id = self.id();
        let unknown = || Error::Config(format!("unknown parameter `{name}` for algorithm `{id}`"));
        let count = |v: f64| -> Result<usize> {
            if v >= 0.0 && v.fract() == 0.0 {
                Ok(v as usize)
            } else {
                Err(Error::Config(format!("parameter `{name}` must be a non-negative integer")))
            }
        };
        if name == "population_size" || name == "n" {
            self.set_population_size(count(value)?);
            return Ok(());
        }
        let slot: &mut f64 = match (&mut *self, name) {
            (Algorithm::Dba(p), "schedule") => {
                p.schedule = match value as i64 {
                    0 => ScheduleMode::Lazy,
                    1 => ScheduleMode::Global,
                    _ => return Err(Error::Config("schedule must be 0 (lazy) or 1 (global)".into())),
                };
                return Ok(());
            }
            (Algorithm::Dba(p), "f_min") => &mut p.f_min,
            (Algorithm::Dba(p), "f_max") => &mut p.f_max,
            (Algorithm::Dba(p), "r0") => &mut p.r0,
            (Algorithm::Dba(p), "r_inf") => &mut p.r_inf,
            (Algorithm::Dba(p), "a0") => &mut p.a0,
            (Algorithm::Dba(p), "a_inf") => &mut p.a_inf,
            (Algorithm::Dba(p), "w0_fraction") => &mut p.w0_fraction,
            (Algorithm::Dba(p), "w_inf_divisor") => &mut p.w_inf_divisor,
            (Algorithm::Ba(p), "f_min") => &mut p.f_min,
            (Algorithm::Ba(p), "f_max") => &mut p.f_max,
            (Algorithm::Ba(p), "r0") => &mut p.r0,
            (Algorithm::Ba(p), "a0") => &mut p.a0,
            (Algorithm::Ba(p), "alpha") => &mut p.alpha,
            (Algorithm::Ba(p), "gamma") => &mut p.gamma,
            (Algorithm::Pso(p), "c1") => &mut p.c1,
            (Algorithm::Pso(p), "c2") => &mut p.c2,
            (Algorithm::Pso(p), "w_start") => &mut p.w_start,
            (Algorithm::Pso(p), "w_end") => &mut p.w_end,
            (Algorithm::Pso(p), "v_max_fraction") => &mut p.v_max_fraction,
            (Algorithm::Hs(p), "hmcr") => &mut p.hmcr,
            (Algorithm::Hs(p), "par") => &mut p.par,
            (Algorithm::Hs(p), "bw") => &mut p.bw,
            (Algorithm::Cs(p), "pa") => &mut p.pa,
            (Algorithm::Cs(p), "levy_beta") => &mut p.levy_beta,
            (Algorithm::Cs(p), "levy_scale") => &mut p.levy_scale,
            (Algorithm::Ga(p), "crossover_prob") => &mut p.crossover_prob,
            (Algorithm::Ga(p), "mutation_prob") => &mut p.mutation_prob,
            (Algorithm::Ga(p), "blx_alpha") => &mut p.blx_alpha,
            (Algorithm::Ga(p), "mutation_sigma_fraction") => &mut p.mutation_sigma_fraction,
            (Algorithm::Ga(p), "tournament_size") => {
                p.tournament_size = count(value)?;
                return Ok(());
            }
            (Algorithm::Ga(p), "elitism") => {
                p.elitism = count(value)?;
                return Ok(());
            }
            (Algorithm::De(p), "f_low") => &mut p.f_range.0,
            (Algorithm::De(p), "f_high") => &mut p.f_range.1,
            (Algorithm::De(p), "cr_low") => &mut p.cr_range.0,
            (Algorithm::De(p), "cr_high") => &mut p.cr_range.1,
            _ => return Err(unknown()),
        };
        *slot = value;
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Algorithm::Dba(p) => p.validate(),
            Algorithm::Ba(p) => p.validate(),
            Algorithm::Pso(p) => p.validate(),
            Algorithm::Hs(p) => p.validate(),
            Algorithm::Cs(p) => p.validate(),
            Algorithm::Ga(p) => p.validate(),
            Algorithm::De(p) => p.validate(),
        }
    }

    pub fn run(&self, problem: &Problem, stop: StopCriterion, rng: &mut RngStream) -> Result<RunResult> {
        match self {
            Algorithm::Dba(p) => dba_run(problem, p, stop, rng),
            Algorithm::Ba(p) => standard_ba_run(problem, p, stop, rng),
            Algorithm::Pso(p) => pso_run(problem, p, stop, rng),
            Algorithm::Hs(p) => hs_run(problem, p, stop, rng),
            Algorithm::Cs(p) => cs_run(problem, p, stop, rng),
            Algorithm::Ga(p) => ga_run(problem, p, stop, rng),
            Algorithm::De(p) => de_run(problem, p, stop, rng),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in ALGORITHM_IDS {
            assert_eq!(Algorithm::from_id(id).unwrap().id(), id);
        }
        assert_eq!(Algorithm::from_id("DBA").unwrap().id(), "dba");
        assert!(Algorithm::from_id("sa").is_err());
    }

    #[test]
    fn overrides() {
        let mut a = Algorithm::from_id("pso").unwrap();
        a.set_param("c1", 2.0).unwrap();
        a.set_param("n", 12.0).unwrap();
        assert_eq!(a, Algorithm::Pso(PsoParams { c1: 2.0, population_size: 12, ..Default::default() }));
        assert!(a.set_param("hmcr", 0.5).is_err());
        assert!(a.set_param("n", 1.5).is_err());
        let mut d = Algorithm::from_id("dba").unwrap();
        d.set_param("schedule", 1.0).unwrap();
        assert!(matches!(d, Algorithm::Dba(DbaParams { schedule: ScheduleMode::Global, .. })));
    }

    #[test]
    fn cuckoo_budget_halves_iterations() {
        let cs = Algorithm::from_id("cs").unwrap();
        assert_eq!(cs.iterations_for_budget(500), 250);
        assert_eq!(cs.evaluations_per_iteration() * 250, 15_000);
    }
}
