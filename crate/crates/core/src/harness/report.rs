use std::fmt::Write as _;
use std::path::Path;

use super::experiment::SummaryRow;
use super::output::{create_dir, fmt_f64, read_summary_from, write_csv};
use crate::error::{Error, Result};
use crate::stats::{
    aligned_friedman, contrast_estimation, friedman, pairwise_against, posthoc, quade, PairwiseRow, PosthocReport,
    RankReport, ResultsMatrix, TiePolicy,
};

/// Mean-value matrix from summary rows, keeping first-appearance order of
/// algorithms and problems.
pub fn matrix_from_summary(rows: &[SummaryRow]) -> Result<ResultsMatrix> {
    let mut algorithms: Vec<String> = Vec::new();
    let mut problems: Vec<String> = Vec::new();
    for r in rows {
        if !algorithms.contains(&r.algorithm) {
            algorithms.push(r.algorithm.clone());
        }
        if !problems.contains(&r.problem) {
            problems.push(r.problem.clone());
        }
    }
    let mut values = vec![vec![f64::NAN; algorithms.len()]; problems.len()];
    for r in rows {
        let a = algorithms.iter().position(|x| x == &r.algorithm).unwrap_or_default();
        let p = problems.iter().position(|x| x == &r.problem).unwrap_or_default();
        if !values[p][a].is_nan() {
            return Err(Error::Matrix(format!("duplicate summary row for {} on {}", r.algorithm, r.problem)));
        }
        values[p][a] = r.mean;
    }
    for (p, row) in problems.iter().zip(&values) {
        if let Some(a) = row.iter().position(|v| v.is_nan()) {
            return Err(Error::Matrix(format!("missing mean for {} on {p}", algorithms[a])));
        }
    }
    ResultsMatrix::new(algorithms, problems, values)
}

/// Load a means table: either a wide matrix (`problem,<algo>,<algo>,...`) or
/// a long `summary.csv` as written by the harness.
pub fn load_means(path: &Path) -> Result<ResultsMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_means(&text)
}

pub fn parse_means(text: &str) -> Result<ResultsMatrix> {
    let header = text.lines().next().unwrap_or("");
    let is_long = header.split(',').any(|h| h.trim().eq_ignore_ascii_case("mean"))
        && header.split(',').any(|h| h.trim().eq_ignore_ascii_case("algorithm"));
    if is_long {
        matrix_from_summary(&read_summary_from(text.as_bytes())?)
    } else {
        ResultsMatrix::from_csv_reader(text.as_bytes())
    }
}

/// Every comparison of the control against the rest.
#[derive(Debug, Clone, PartialEq)]
pub struct StatsReport {
    pub control: String,
    pub algorithms: Vec<String>,
    pub pairwise: Vec<PairwiseRow>,
    /// Friedman, aligned Friedman and, unless degenerate, Quade.
    pub ranks: Vec<RankReport>,
    pub posthoc: Vec<PosthocReport>,
    pub contrast: Vec<Vec<f64>>,
}

pub fn stats_pipeline(matrix: &ResultsMatrix, control: &str) -> Result<StatsReport> {
    let c = matrix.index_of(control).ok_or_else(|| Error::UnknownControl(control.to_string()))?;
    let control = matrix.algorithms()[c].clone();
    let pairwise = pairwise_against(matrix, &control, TiePolicy::Drop)?;
    let mut ranks = vec![friedman(matrix), aligned_friedman(matrix)];
    match quade(matrix) {
        Ok(q) => ranks.push(q),
        Err(Error::Degenerate(_)) => {}
        Err(e) => return Err(e),
    }
    let posthoc = ranks.iter().map(|r| posthoc(r, &control)).collect::<Result<_>>()?;
    Ok(StatsReport {
        control,
        algorithms: matrix.algorithms().to_vec(),
        pairwise,
        ranks,
        posthoc,
        contrast: contrast_estimation(matrix),
    })
}

fn opt(v: Option<f64>) -> String {
    v.map(fmt_f64).unwrap_or_default()
}

impl StatsReport {
    /// `pairwise.csv`, `ranks.csv`, `posthoc.csv`, `contrast.csv` and `report.txt`.
    pub fn write(&self, dir: &Path) -> Result<()> {
        create_dir(dir)?;
        write_csv(
            &dir.join("pairwise.csv"),
            &["algorithm", "wins", "ties", "losses", "sign_p", "wilcoxon_p"],
            self.pairwise.iter().map(|r| {
                vec![
                    r.algorithm.clone(),
                    r.wins.to_string(),
                    r.ties.to_string(),
                    r.losses.to_string(),
                    fmt_f64(r.sign_p),
                    opt(r.wilcoxon_p),
                ]
            }),
        )?;

        let mut header = vec!["algorithm"];
        header.extend(self.ranks.iter().map(|r| r.family.id()));
        let mut rows: Vec<Vec<String>> = self
            .algorithms
            .iter()
            .enumerate()
            .map(|(j, a)| std::iter::once(a.clone()).chain(self.ranks.iter().map(|r| fmt_f64(r.ranks[j]))).collect())
            .collect();
        rows.push(std::iter::once("statistic".into()).chain(self.ranks.iter().map(|r| fmt_f64(r.statistic))).collect());
        rows.push(std::iter::once("p_value".into()).chain(self.ranks.iter().map(|r| fmt_f64(r.p_value))).collect());
        write_csv(&dir.join("ranks.csv"), &header, rows)?;

        write_csv(
            &dir.join("posthoc.csv"),
            &["family", "i", "algorithm", "z", "p", "holland", "rom", "finner", "li"],
            self.posthoc.iter().flat_map(|ph| {
                ph.rows.iter().enumerate().map(move |(i, r)| {
                    vec![
                        ph.family.id().to_string(),
                        (i + 1).to_string(),
                        r.algorithm.clone(),
                        fmt_f64(r.z),
                        fmt_f64(r.p_unadjusted),
                        fmt_f64(r.p_holland),
                        fmt_f64(r.p_rom),
                        fmt_f64(r.p_finner),
                        fmt_f64(r.p_li),
                    ]
                })
            }),
        )?;

        let mut header = vec![""];
        header.extend(self.algorithms.iter().map(String::as_str));
        write_csv(
            &dir.join("contrast.csv"),
            &header,
            self.algorithms
                .iter()
                .zip(&self.contrast)
                .map(|(a, row)| std::iter::once(a.clone()).chain(row.iter().map(|v| fmt_f64(*v))).collect()),
        )?;

        let path = dir.join("report.txt");
        std::fs::write(&path, self.render_text()).map_err(|e| Error::io(&path, e))
    }

    /// Aligned plain-text tables, one block per section.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let w = self.algorithms.iter().map(String::len).max().unwrap_or(4).max(9);

        let _ = writeln!(s, "Pairwise comparisons ({} vs)", self.control);
        let _ = writeln!(
            s,
            "{:<w$}  {:>5} {:>5} {:>6}  {:>11}  {:>11}",
            "", "wins", "ties", "losses", "sign p", "wilcoxon p"
        );
        for r in &self.pairwise {
            let wp = r.wilcoxon_p.map(|p| format!("{p:.3E}")).unwrap_or_else(|| "-".into());
            let _ = writeln!(
                s,
                "{:<w$}  {:>5} {:>5} {:>6}  {:>11.3E}  {:>11}",
                r.algorithm, r.wins, r.ties, r.losses, r.sign_p, wp
            );
        }

        let _ = writeln!(s, "\nAverage ranks");
        let _ = write!(s, "{:<w$}", "");
        for r in &self.ranks {
            let _ = write!(s, "  {:>16}", r.family.label());
        }
        s.push('\n');
        for (j, a) in self.algorithms.iter().enumerate() {
            let _ = write!(s, "{a:<w$}");
            for r in &self.ranks {
                let _ = write!(s, "  {:>16.2}", r.ranks[j]);
            }
            s.push('\n');
        }
        let _ = write!(s, "{:<w$}", "statistic");
        for r in &self.ranks {
            let _ = write!(s, "  {:>16.2}", r.statistic);
        }
        let _ = write!(s, "\n{:<w$}", "p-value");
        for r in &self.ranks {
            let _ = write!(s, "  {:>16.3E}", r.p_value);
        }
        s.push('\n');

        let _ = writeln!(s, "\nPost-hoc procedures, control {}", self.control);
        for ph in &self.posthoc {
            let _ = writeln!(s, "{}", ph.family.label());
            let _ = writeln!(
                s,
                "  {:>2}  {:<w$}  {:>9}  {:>9}  {:>9}  {:>9}  {:>9}  {:>9}",
                "i", "algorithm", "z", "p", "Holland", "Rom", "Finner", "Li"
            );
            for (i, r) in ph.rows.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "  {:>2}  {:<w$}  {:>9.6}  {:>9.3E}  {:>9.3E}  {:>9.3E}  {:>9.3E}  {:>9.3E}",
                    i + 1,
                    r.algorithm,
                    r.z,
                    r.p_unadjusted,
                    r.p_holland,
                    r.p_rom,
                    r.p_finner,
                    r.p_li
                );
            }
        }

        let _ = writeln!(s, "\nContrast estimation");
        let _ = write!(s, "{:<w$}", "");
        for a in &self.algorithms {
            let _ = write!(s, "  {a:>w$}");
        }
        s.push('\n');
        for (a, row) in self.algorithms.iter().zip(&self.contrast) {
            let _ = write!(s, "{a:<w$}");
            for v in row {
                let _ = write!(s, "  {:>w$}", format!("{v:.4}"));
            }
            s.push('\n');
        }
        s
    }
}
