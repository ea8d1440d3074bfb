use super::distributions::{chi_squared_sf, f_sf};
use super::matrix::ResultsMatrix;
use crate::error::{Error, Result};

/// Ranks `1..=len` in ascending value order, ties sharing their average rank.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        // positions start..end hold ranks start+1..=end
        let r = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = r;
        }
        start = end;
    }
    ranks
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankFamily {
    Friedman,
    AlignedFriedman,
    Quade,
}

impl RankFamily {
    pub fn label(self) -> &'static str {
        match self {
            RankFamily::Friedman => "Friedman",
            RankFamily::AlignedFriedman => "Aligned Friedman",
            RankFamily::Quade => "Quade",
        }
    }

    /// Snake-case key used in CSV headers.
    pub fn id(self) -> &'static str {
        match self {
            RankFamily::Friedman => "friedman",
            RankFamily::AlignedFriedman => "aligned_friedman",
            RankFamily::Quade => "quade",
        }
    }
}

/// Average ranks per algorithm plus the omnibus test.
#[derive(Debug, Clone, PartialEq)]
pub struct RankReport {
    pub family: RankFamily,
    pub algorithms: Vec<String>,
    pub ranks: Vec<f64>,
    pub statistic: f64,
    /// Chi-square tests carry one value; Quade's F carries two.
    pub df: (f64, Option<f64>),
    pub p_value: f64,
    pub n_problems: usize,
}

impl RankReport {
    pub fn rank_of(&self, algorithm: &str) -> Option<f64> {
        self.algorithms.iter().position(|a| a.eq_ignore_ascii_case(algorithm)).map(|i| self.ranks[i])
    }
}

fn column_means(rows: &[Vec<f64>], k: usize) -> Vec<f64> {
    let mut sums = vec![0.0; k];
    for r in rows {
        for (s, v) in sums.iter_mut().zip(r) {
            *s += v;
        }
    }
    sums.iter().map(|s| s / rows.len() as f64).collect()
}

/// Friedman test: within-problem ranks averaged per algorithm,
/// `chi2 = 12n / (k(k+1)) * (sum R_j^2 - k(k+1)^2 / 4)` on `k - 1` df.
pub fn friedman(matrix: &ResultsMatrix) -> RankReport {
    let (n, k) = (matrix.n() as f64, matrix.k());
    let rows: Vec<Vec<f64>> = matrix.rows().iter().map(|r| average_ranks(r)).collect();
    let ranks = column_means(&rows, k);
    let kf = k as f64;
    let sum_sq: f64 = ranks.iter().map(|r| r * r).sum();
    let statistic = (12.0 * n / (kf * (kf + 1.0)) * (sum_sq - kf * (kf + 1.0).powi(2) / 4.0)).max(0.0);
    RankReport {
        family: RankFamily::Friedman,
        algorithms: matrix.algorithms().to_vec(),
        ranks,
        statistic,
        df: (kf - 1.0, None),
        p_value: chi_squared_sf(statistic, kf - 1.0),
        n_problems: matrix.n(),
    }
}

/// Aligned Friedman test: subtract each problem's mean, rank all `n k`
/// aligned values jointly, and report mean aligned rank per algorithm.
pub fn aligned_friedman(matrix: &ResultsMatrix) -> RankReport {
    let (n, k) = (matrix.n(), matrix.k());
    let aligned: Vec<f64> = matrix
        .rows()
        .iter()
        .flat_map(|r| {
            let mean = r.iter().sum::<f64>() / k as f64;
            r.iter().map(move |v| v - mean)
        })
        .collect();
    let flat = average_ranks(&aligned);
    let rows: Vec<Vec<f64>> = flat.chunks(k).map(<[f64]>::to_vec).collect();

    let (nf, kf) = (n as f64, k as f64);
    let big_n = nf * kf;
    let col_totals: Vec<f64> = (0..k).map(|j| rows.iter().map(|r| r[j]).sum()).collect();
    let row_totals: Vec<f64> = rows.iter().map(|r| r.iter().sum()).collect();
    let num =
        (kf - 1.0) * (col_totals.iter().map(|r| r * r).sum::<f64>() - (kf * nf * nf / 4.0) * (big_n + 1.0).powi(2));
    let den = big_n * (big_n + 1.0) * (2.0 * big_n + 1.0) / 6.0 - row_totals.iter().map(|r| r * r).sum::<f64>() / kf;
    let statistic = if den > 0.0 { (num / den).max(0.0) } else { 0.0 };
    RankReport {
        family: RankFamily::AlignedFriedman,
        algorithms: matrix.algorithms().to_vec(),
        ranks: column_means(&rows, k),
        statistic,
        df: (kf - 1.0, None),
        p_value: chi_squared_sf(statistic, kf - 1.0),
        n_problems: n,
    }
}

/// Quade test: problems are weighted by the rank `Q_i` of their range.
///
/// Reported ranks are `T_j = sum_i Q_i r_ij / (n(n+1)/2)`; the statistic is
/// `F = (n-1) B / (A - B)` on `(k-1, (n-1)(k-1))` df with
/// `S_ij = Q_i (r_ij - (k+1)/2)`, `A = sum S_ij^2`, `B = sum_j (sum_i S_ij)^2 / n`.
pub fn quade(matrix: &ResultsMatrix) -> Result<RankReport> {
    let (n, k) = (matrix.n(), matrix.k());
    if n < 2 {
        return Err(Error::Degenerate("Quade test needs at least two problems"));
    }
    let ranges: Vec<f64> = matrix
        .rows()
        .iter()
        .map(|r| r.iter().copied().fold(f64::NEG_INFINITY, f64::max) - r.iter().copied().fold(f64::INFINITY, f64::min))
        .collect();
    if ranges.iter().all(|&r| r == 0.0) {
        return Err(Error::Degenerate("every problem has zero range"));
    }
    let q = average_ranks(&ranges);
    let within: Vec<Vec<f64>> = matrix.rows().iter().map(|r| average_ranks(r)).collect();

    let (nf, kf) = (n as f64, k as f64);
    let centre = (kf + 1.0) / 2.0;
    let mut weighted = vec![0.0; k];
    let mut s_cols = vec![0.0; k];
    let mut a = 0.0;
    for (qi, r) in q.iter().zip(&within) {
        for j in 0..k {
            weighted[j] += qi * r[j];
            let s = qi * (r[j] - centre);
            s_cols[j] += s;
            a += s * s;
        }
    }
    let b = s_cols.iter().map(|s| s * s).sum::<f64>() / nf;
    let (df1, df2) = (kf - 1.0, (nf - 1.0) * (kf - 1.0));
    let (statistic, p_value) = if a > b {
        let f = (nf - 1.0) * b / (a - b);
        (f, f_sf(f, df1, df2))
    } else {
        (f64::INFINITY, 0.0)
    };
    let scale = nf * (nf + 1.0) / 2.0;
    Ok(RankReport {
        family: RankFamily::Quade,
        algorithms: matrix.algorithms().to_vec(),
        ranks: weighted.iter().map(|w| w / scale).collect(),
        statistic,
        df: (df1, Some(df2)),
        p_value,
        n_problems: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: &[&[f64]]) -> ResultsMatrix {
        let k = rows[0].len();
        ResultsMatrix::new(
            (0..k).map(|j| format!("a{j}")).collect(),
            (0..rows.len()).map(|i| format!("p{i}")).collect(),
            rows.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn average_ranks_ties() {
        assert_eq!(average_ranks(&[3.0, 1.0, 3.0, 2.0]), vec![3.5, 1.0, 3.5, 2.0]);
        assert_eq!(average_ranks(&[5.0; 4]), vec![2.5; 4]);
    }

    #[test]
    fn constant_matrix() {
        let m = matrix(&[&[1.0, 1.0, 1.0], &[2.0, 2.0, 2.0]]);
        let f = friedman(&m);
        assert_eq!(f.ranks, vec![2.0; 3]);
        assert_eq!(f.statistic, 0.0);
        assert_eq!(f.p_value, 1.0);
        assert!(matches!(quade(&m), Err(Error::Degenerate(_))));
    }

    #[test]
    fn friedman_ranks_sum() {
        let m = matrix(&[&[1.0, 2.0, 3.0, 0.5], &[4.0, 1.0, 1.0, 9.0], &[0.1, 0.3, 0.2, 0.0]]);
        let f = friedman(&m);
        assert!((f.ranks.iter().sum::<f64>() - 10.0).abs() < 1e-12);
    }

    #[test]
    fn aligned_single_problem() {
        let m = matrix(&[&[3.0, 1.0, 2.0]]);
        let a = aligned_friedman(&m);
        assert_eq!(a.ranks, vec![3.0, 1.0, 2.0]);
    }

    #[test]
    fn duplicate_columns_share_quade_rank() {
        let m = matrix(&[&[1.0, 5.0, 5.0], &[2.0, 0.5, 0.5], &[9.0, 3.0, 3.0], &[1.0, 1.1, 1.1]]);
        let q = quade(&m).unwrap();
        assert_eq!(q.ranks[1], q.ranks[2]);
    }

    #[test]
    fn two_algorithms() {
        let m = matrix(&[&[1.0, 2.0], &[1.0, 3.0], &[4.0, 3.0]]);
        let f = friedman(&m);
        assert!((f.ranks[0] - 4.0 / 3.0).abs() < 1e-12);
        assert_eq!(f.df.0, 1.0);
    }
}
