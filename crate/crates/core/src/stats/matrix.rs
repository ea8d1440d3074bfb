use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};

/// Problems × algorithms table of performance values, lower is better.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultsMatrix {
    algorithms: Vec<String>,
    problems: Vec<String>,
    /// Row-major, one row per problem.
    values: Vec<Vec<f64>>,
}

impl ResultsMatrix {
    pub fn new(algorithms: Vec<String>, problems: Vec<String>, values: Vec<Vec<f64>>) -> Result<Self> {
        let k = algorithms.len();
        if k < 2 {
            return Err(Error::Matrix("need at least two algorithms".into()));
        }
        if problems.is_empty() {
            return Err(Error::Matrix("need at least one problem".into()));
        }
        if values.len() != problems.len() {
            return Err(Error::Matrix(format!("{} problem names but {} rows", problems.len(), values.len())));
        }
        for (name, row) in problems.iter().zip(&values) {
            if row.len() != k {
                return Err(Error::Matrix(format!("row {name} has {} values, expected {k}", row.len())));
            }
            if let Some(v) = row.iter().find(|v| !v.is_finite()) {
                return Err(Error::Matrix(format!("row {name} holds non-finite value {v}")));
            }
        }
        for (i, a) in algorithms.iter().enumerate() {
            if algorithms[..i].iter().any(|b| b.eq_ignore_ascii_case(a)) {
                return Err(Error::Matrix(format!("duplicate algorithm `{a}`")));
            }
        }
        Ok(Self { algorithms, problems, values })
    }

    /// Parse a CSV whose header holds algorithm names after a first label
    /// column, and whose rows start with the problem name.
    pub fn from_csv_reader(reader: impl Read) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(reader);
        let algorithms: Vec<String> = rdr.headers()?.iter().skip(1).map(str::to_string).collect();
        let mut problems = Vec::new();
        let mut values = Vec::new();
        for record in rdr.records() {
            let record = record?;
            let mut fields = record.iter();
            let name = fields.next().unwrap_or_default().to_string();
            let row = fields
                .map(|f| f.parse::<f64>().map_err(|_| Error::Matrix(format!("row {name}: cannot parse `{f}`"))))
                .collect::<Result<Vec<_>>>()?;
            problems.push(name);
            values.push(row);
        }
        Self::new(algorithms, problems, values)
    }

    pub fn from_csv_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        Self::from_csv_reader(file)
    }

    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("problem");
        for a in &self.algorithms {
            out.push(',');
            out.push_str(a);
        }
        out.push('\n');
        for (p, row) in self.problems.iter().zip(&self.values) {
            out.push_str(p);
            for v in row {
                out.push_str(&format!(",{v:e}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn algorithms(&self) -> &[String] {
        &self.algorithms
    }

    pub fn problems(&self) -> &[String] {
        &self.problems
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.values
    }

    /// Number of algorithms `k`.
    pub fn k(&self) -> usize {
        self.algorithms.len()
    }

    /// Number of problems `n`.
    pub fn n(&self) -> usize {
        self.problems.len()
    }

    pub fn value(&self, problem: usize, algorithm: usize) -> f64 {
        self.values[problem][algorithm]
    }

    pub fn column(&self, algorithm: usize) -> Vec<f64> {
        self.values.iter().map(|r| r[algorithm]).collect()
    }

    /// Case-insensitive lookup of an algorithm column.
    pub fn index_of(&self, algorithm: &str) -> Option<usize> {
        self.algorithms.iter().position(|a| a.eq_ignore_ascii_case(algorithm))
    }

    pub(crate) fn control_index(&self, control: &str) -> Result<usize> {
        self.index_of(control).ok_or_else(|| Error::UnknownControl(control.to_string()))
    }

    /// Reorder or subset columns.
    pub fn select(&self, columns: &[usize]) -> Result<Self> {
        let algorithms = columns.iter().map(|&c| self.algorithms[c].clone()).collect();
        let values = self.values.iter().map(|r| columns.iter().map(|&c| r[c]).collect()).collect();
        Self::new(algorithms, self.problems.clone(), values)
    }
}
