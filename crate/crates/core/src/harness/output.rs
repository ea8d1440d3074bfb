use std::fs;
use std::path::Path;

use super::experiment::{Cell, ExperimentResults, SummaryRow};
use crate::error::{Error, Result};

/// Shortest round-trip text form, so values parse back bit-exactly.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:e}")
}

pub(crate) fn write_csv(path: &Path, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(|e| csv_io(path, e))?;
    w.write_record(header).map_err(|e| csv_io(path, e))?;
    for row in rows {
        w.write_record(&row).map_err(|e| csv_io(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

fn csv_io(path: &Path, e: csv::Error) -> Error {
    if e.is_io_error() {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => Error::io(path, io),
            other => Error::Config(format!("{other:?}")),
        }
    } else {
        Error::Csv(e)
    }
}

pub(crate) fn create_dir(path: &Path) -> Result<()> {
    fs::create_dir_all(path).map_err(|e| Error::io(path, e))
}

pub const SUMMARY_HEADER: [&str; 8] = ["algorithm", "problem", "best", "median", "worst", "mean", "sd", "success_rate"];
pub const FINALS_HEADER: [&str; 4] = ["trial", "seed", "final_best", "evaluations"];
pub const TRACE_HEADER: [&str; 4] = ["iteration", "mean_best", "min_best", "max_best"];

pub fn write_summary(path: &Path, rows: &[SummaryRow]) -> Result<()> {
    write_csv(
        path,
        &SUMMARY_HEADER,
        rows.iter().map(|r| {
            vec![
                r.algorithm.clone(),
                r.problem.clone(),
                fmt_f64(r.best),
                fmt_f64(r.median),
                fmt_f64(r.worst),
                fmt_f64(r.mean),
                fmt_f64(r.sd),
                fmt_f64(r.success_rate),
            ]
        }),
    )
}

pub fn write_finals(path: &Path, cell: &Cell) -> Result<()> {
    write_csv(
        path,
        &FINALS_HEADER,
        cell.trials
            .iter()
            .map(|t| vec![t.trial.to_string(), t.seed.to_string(), fmt_f64(t.final_best), t.evaluations.to_string()]),
    )
}

/// Per-iteration mean, min and max of the best-so-far value across trials.
pub fn trace_rows(cell: &Cell) -> Vec<(usize, f64, f64, f64)> {
    let len = cell.trials.iter().map(|t| t.trace.len()).min().unwrap_or(0);
    let n = cell.trials.len() as f64;
    (0..len)
        .map(|i| {
            let vals = cell.trials.iter().map(|t| t.trace[i]);
            let (mut lo, mut hi, mut sum) = (f64::INFINITY, f64::NEG_INFINITY, 0.0);
            for v in vals {
                lo = lo.min(v);
                hi = hi.max(v);
                sum += v;
            }
            (i + 1, sum / n, lo, hi)
        })
        .collect()
}

pub fn write_trace(path: &Path, cell: &Cell) -> Result<()> {
    write_csv(
        path,
        &TRACE_HEADER,
        trace_rows(cell)
            .into_iter()
            .map(|(i, mean, lo, hi)| vec![i.to_string(), fmt_f64(mean), fmt_f64(lo), fmt_f64(hi)]),
    )
}

/// Write `summary.csv`, `finals/<algo>_<problem>.csv` and
/// `traces/<algo>_<problem>.csv` under `dir`.
pub fn write_results(dir: &Path, results: &ExperimentResults) -> Result<()> {
    let finals = dir.join("finals");
    let traces = dir.join("traces");
    create_dir(&finals)?;
    create_dir(&traces)?;
    write_summary(&dir.join("summary.csv"), &results.summary)?;
    for cell in &results.cells {
        let name = format!("{}_{}.csv", cell.algorithm_id, cell.problem);
        write_finals(&finals.join(&name), cell)?;
        write_trace(&traces.join(&name), cell)?;
    }
    Ok(())
}

/// Read a `summary.csv` back.
pub fn read_summary(path: &Path) -> Result<Vec<SummaryRow>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_summary_from(file)
}

pub(crate) fn read_summary_from(reader: impl std::io::Read) -> Result<Vec<SummaryRow>> {
    let mut r = csv::Reader::from_reader(reader);
    let header = r.headers()?.clone();
    let col = |name: &str| {
        header
            .iter()
            .position(|h| h.trim().eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::Matrix(format!("summary is missing column `{name}`")))
    };
    let idx: Vec<usize> = SUMMARY_HEADER.iter().map(|h| col(h)).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let num = |i: usize| -> Result<f64> {
            let s = rec.get(idx[i]).unwrap_or("").trim();
            s.parse().map_err(|_| Error::Matrix(format!("bad number `{s}` in column `{}`", SUMMARY_HEADER[i])))
        };
        rows.push(SummaryRow {
            algorithm: rec.get(idx[0]).unwrap_or("").trim().to_string(),
            problem: rec.get(idx[1]).unwrap_or("").trim().to_string(),
            best: num(2)?,
            median: num(3)?,
            worst: num(4)?,
            mean: num(5)?,
            sd: num(6)?,
            success_rate: num(7)?,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::experiment::TrialOutcome;

    #[test]
    fn float_text_round_trips() {
        for v in [0.0, 2.256e-1, 1.0 / 3.0, -5.27e-3, 1e300, f64::MIN_POSITIVE] {
            assert_eq!(fmt_f64(v).parse::<f64>().unwrap().to_bits(), v.to_bits());
        }
    }

    #[test]
    fn trace_envelope() {
        let t = |trace: Vec<f64>| TrialOutcome { trial: 0, seed: 0, final_best: 0.0, evaluations: 0, trace };
        let cell = Cell {
            algorithm_id: "x".into(),
            algorithm: "X".into(),
            problem: "P".into(),
            trials: vec![t(vec![4.0, 2.0, 1.0]), t(vec![6.0, 6.0, 3.0])],
        };
        assert_eq!(trace_rows(&cell), vec![(1, 5.0, 4.0, 6.0), (2, 4.0, 2.0, 6.0), (3, 2.0, 1.0, 3.0)]);
    }

    #[test]
    fn summary_round_trip() {
        let rows = vec![SummaryRow {
            algorithm: "dBA".into(),
            problem: "F01".into(),
            best: 1e-3,
            median: 0.1,
            worst: 2.0,
            mean: 0.7,
            sd: 0.3,
            success_rate: 0.0,
        }];
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("s.csv");
        write_summary(&p, &rows).unwrap();
        assert_eq!(read_summary(&p).unwrap(), rows);
    }
}
