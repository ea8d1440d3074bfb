use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::algorithm::{Algorithm, ALGORITHM_IDS};
use crate::benchmarks;
use crate::error::{Error, Result};

/// Full description of one experiment grid.
///
/// Text form is INI-like:
///
/// ```text
/// [experiment]
/// algorithms = dba, ba, pso
/// problems = F01, F04
/// dimension = 30
/// population = 30
/// iterations = 500
/// trials = 51
/// seed = 7
/// output = results
///
/// [dba]
/// w0_fraction = 0.25
/// ```
///
/// Any section other than `[experiment]` names an algorithm id and holds
/// numeric parameter overrides. `#` and `;` start comments.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub algorithms: Vec<String>,
    pub problems: Vec<String>,
    pub dimension: usize,
    pub population: usize,
    pub iterations: usize,
    pub trials: usize,
    pub master_seed: u64,
    pub output_dir: PathBuf,
    pub success_threshold: f64,
    /// Halve iterations for methods that spend two evaluations per agent, so
    /// every algorithm gets the same evaluation budget.
    pub match_budget: bool,
    pub overrides: BTreeMap<String, Vec<(String, f64)>>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            algorithms: ALGORITHM_IDS.iter().map(|s| s.to_string()).collect(),
            problems: benchmarks::classical_ids().map(str::to_string).collect(),
            dimension: 30,
            population: 30,
            iterations: 500,
            trials: 51,
            master_seed: 0,
            output_dir: PathBuf::from("results"),
            success_threshold: 1e-10,
            match_budget: true,
            overrides: BTreeMap::new(),
        }
    }
}

fn config_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Config(format!("line {line}: {msg}"))
}

fn parse_num<T: std::str::FromStr>(line: usize, key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| config_err(line, format!("`{key}` expects a number, got `{v}`")))
}

/// Split a comma list, dropping blanks.
pub fn split_list(v: &str) -> Vec<String> {
    v.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::to_string).collect()
}

impl ExperimentConfig {
    pub fn from_ini_str(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        let mut section: Option<String> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split(['#', ';']).next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[') {
                let name = name
                    .strip_suffix(']')
                    .ok_or_else(|| config_err(line_no, "unterminated section header"))?
                    .trim()
                    .to_ascii_lowercase();
                if name != "experiment" {
                    Algorithm::from_id(&name).map_err(|e| config_err(line_no, e))?;
                }
                section = Some(name);
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim().to_ascii_lowercase(), v.trim()))
                .ok_or_else(|| config_err(line_no, "expected `key = value`"))?;
            match section.as_deref() {
                None => return Err(config_err(line_no, "key outside of any section")),
                Some("experiment") => cfg.set_experiment_key(line_no, &key, value)?,
                Some(algo) => {
                    let v: f64 = parse_num(line_no, &key, value)?;
                    cfg.overrides.entry(algo.to_string()).or_default().push((key, v));
                }
            }
        }
        Ok(cfg)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_ini_str(&text)
    }

    fn set_experiment_key(&mut self, line: usize, key: &str, value: &str) -> Result<()> {
        match key {
            "algorithms" => self.algorithms = split_list(value),
            "problems" => self.problems = split_list(value),
            "dimension" => self.dimension = parse_num(line, key, value)?,
            "population" => self.population = parse_num(line, key, value)?,
            "iterations" => self.iterations = parse_num(line, key, value)?,
            "trials" => self.trials = parse_num(line, key, value)?,
            "seed" => self.master_seed = parse_num(line, key, value)?,
            "output" => self.output_dir = PathBuf::from(value),
            "success_threshold" => self.success_threshold = parse_num(line, key, value)?,
            "match_budget" => {
                self.match_budget = match value.to_ascii_lowercase().as_str() {
                    "true" | "yes" | "1" => true,
                    "false" | "no" | "0" => false,
                    _ => return Err(config_err(line, format!("`match_budget` expects a boolean, got `{value}`"))),
                }
            }
            _ => return Err(config_err(line, format!("unknown key `{key}` in [experiment]"))),
        }
        Ok(())
    }

    /// Force one population size on every algorithm, discarding any
    /// per-algorithm override of it.
    pub fn override_population(&mut self, n: usize) {
        self.population = n;
        for list in self.overrides.values_mut() {
            list.retain(|(k, _)| k != "population_size" && k != "n");
        }
    }

    /// Instantiate the configured algorithms with population and overrides applied.
    pub fn algorithms(&self) -> Result<Vec<Algorithm>> {
        self.algorithms
            .iter()
            .map(|id| {
                let mut a = Algorithm::from_id(id)?;
                a.set_population_size(self.population);
                for (k, v) in self.overrides.get(&id.to_ascii_lowercase()).into_iter().flatten() {
                    a.set_param(k, *v)?;
                }
                a.validate()?;
                Ok(a)
            })
            .collect()
    }

    /// Check everything that can be checked without running.
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.iterations == 0 {
            return Err(Error::Config("iterations must be at least 1".into()));
        }
        if self.algorithms.is_empty() || self.problems.is_empty() {
            return Err(Error::Config("need at least one algorithm and one problem".into()));
        }
        if !(self.success_threshold.is_finite()) {
            return Err(Error::Config("success_threshold must be finite".into()));
        }
        let algos = self.algorithms()?;
        let mut seen = std::collections::HashSet::new();
        for a in &algos {
            if !seen.insert(a.id()) {
                return Err(Error::Config(format!("algorithm `{}` listed twice", a.id())));
            }
        }
        let mut seen = std::collections::HashSet::new();
        for p in &self.problems {
            benchmarks::lookup(p)?.check_dimension(self.dimension)?;
            if !seen.insert(p.to_ascii_lowercase()) {
                return Err(Error::Config(format!("problem `{p}` listed twice")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sections_and_comments() {
        let cfg = ExperimentConfig::from_ini_str(
            "# grid\n[experiment]\nalgorithms = dba, pso\nproblems=F01,F04 ; two\ntrials = 3\nseed = 9\n\n[DBA]\nw0_fraction = 0.5\n",
        )
        .unwrap();
        assert_eq!(cfg.algorithms, ["dba", "pso"]);
        assert_eq!(cfg.problems, ["F01", "F04"]);
        assert_eq!((cfg.trials, cfg.master_seed, cfg.dimension), (3, 9, 30));
        let algos = cfg.algorithms().unwrap();
        match &algos[0] {
            Algorithm::Dba(p) => assert_eq!(p.w0_fraction, 0.5),
            other => panic!("{other:?}"),
        }
        cfg.validate().unwrap();
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            "x = 1",
            "[experiment]\nbogus = 1",
            "[experiment]\ntrials = many",
            "[nope]\nx = 1",
            "[experiment\n",
            "[pso]\nc9 = 1\n",
        ] {
            let r = ExperimentConfig::from_ini_str(bad).and_then(|c| c.validate());
            assert!(matches!(r, Err(Error::Config(_)) | Err(Error::UnknownAlgorithm(_))), "{bad}: {r:?}");
        }
        let r = ExperimentConfig::from_ini_str("[experiment]\nproblems = F99").unwrap().validate();
        assert!(matches!(r, Err(Error::UnknownBenchmark(_))));
        let r = ExperimentConfig::from_ini_str("[experiment]\ntrials = 0").unwrap().validate();
        assert!(r.is_err());
    }

    #[test]
    fn population_override_wins_over_sections() {
        let mut cfg = ExperimentConfig::from_ini_str("[ga]\npopulation_size = 12\n").unwrap();
        cfg.algorithms = vec!["ga".into()];
        assert_eq!(cfg.algorithms().unwrap()[0].population_size(), 12);
        cfg.override_population(40);
        assert_eq!(cfg.algorithms().unwrap()[0].population_size(), 40);
    }
}
