use statrs::function::factorial::ln_binomial;

use super::distributions::normal_cdf;
use super::matrix::ResultsMatrix;
use super::ranks::average_ranks;
use crate::error::{Error, Result};

/// Two-sided exact sign test: `2 P(X >= max(wins, losses))` with
/// `X ~ Binomial(wins + losses, 1/2)`, capped at 1.
pub fn sign_test(wins: u64, losses: u64) -> Result<f64> {
    let n = wins + losses;
    if n == 0 {
        return Err(Error::Degenerate("sign test needs at least one decided comparison"));
    }
    let top = wins.max(losses);
    let p = if n <= 120 {
        // exact rational tail; every intermediate fits in u128 and the final
        // division by a power of two is exact in binary floating point
        let mut c: u128 = 1;
        let mut tail: u128 = 0;
        for i in 0..=n {
            if i >= top {
                tail += c;
            }
            c = c * u128::from(n - i) / u128::from(i + 1);
        }
        2.0 * (tail as f64) / 2f64.powi(n as i32)
    } else {
        let ln_half_n = n as f64 * std::f64::consts::LN_2;
        2.0 * (top..=n).map(|i| (ln_binomial(n, i) - ln_half_n).exp()).sum::<f64>()
    };
    Ok(p.min(1.0))
}

/// How tied problems enter the sign test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TiePolicy {
    /// Ignore ties entirely.
    #[default]
    Drop,
    /// Give half the ties to each side, ignoring one if their number is odd.
    Split,
}

pub fn sign_test_with_ties(wins: u64, ties: u64, losses: u64, policy: TiePolicy) -> Result<f64> {
    match policy {
        TiePolicy::Drop => sign_test(wins, losses),
        TiePolicy::Split => sign_test(wins + ties / 2, losses + ties / 2),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WilcoxonResult {
    /// Non-zero differences used.
    pub n: usize,
    /// Rank sum of positive differences.
    pub w_plus: f64,
    pub w_minus: f64,
    pub t: f64,
    pub z: f64,
    pub p_value: f64,
}

/// Wilcoxon signed-rank test with the normal approximation.
///
/// Zero differences are dropped, absolute values are ranked with average
/// ties, `T = min(W+, W-)` and the two-sided p-value is `2 Phi(z)`.
pub fn wilcoxon_signed_rank(differences: &[f64]) -> Result<WilcoxonResult> {
    if differences.len() < 5 {
        return Err(Error::param("differences", "need at least five paired differences"));
    }
    let nz: Vec<f64> = differences.iter().copied().filter(|d| *d != 0.0).collect();
    if nz.is_empty() {
        return Err(Error::Degenerate("all differences are zero"));
    }
    let abs: Vec<f64> = nz.iter().map(|d| d.abs()).collect();
    let ranks = average_ranks(&abs);
    let w_plus: f64 = nz.iter().zip(&ranks).filter(|(d, _)| **d > 0.0).map(|(_, r)| r).sum();
    let w_minus: f64 = nz.iter().zip(&ranks).filter(|(d, _)| **d < 0.0).map(|(_, r)| r).sum();
    let n = nz.len() as f64;
    let t = w_plus.min(w_minus);
    let z = (t - n * (n + 1.0) / 4.0) / (n * (n + 1.0) * (2.0 * n + 1.0) / 24.0).sqrt();
    let p_value = (2.0 * normal_cdf(z)).min(1.0);
    Ok(WilcoxonResult { n: nz.len(), w_plus, w_minus, t, z, p_value })
}

/// Control-vs-other comparison over all problems.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseRow {
    pub algorithm: String,
    /// Problems where the control has the strictly lower value.
    pub wins: u64,
    pub ties: u64,
    pub losses: u64,
    pub sign_p: f64,
    /// `None` when every difference is zero.
    pub wilcoxon_p: Option<f64>,
}

pub fn pairwise_against(matrix: &ResultsMatrix, control: &str, ties: TiePolicy) -> Result<Vec<PairwiseRow>> {
    let c = matrix.control_index(control)?;
    let base = matrix.column(c);
    let mut rows = Vec::new();
    for (j, name) in matrix.algorithms().iter().enumerate() {
        if j == c {
            continue;
        }
        let other = matrix.column(j);
        let diffs: Vec<f64> = base.iter().zip(&other).map(|(a, b)| a - b).collect();
        let wins = diffs.iter().filter(|d| **d < 0.0).count() as u64;
        let losses = diffs.iter().filter(|d| **d > 0.0).count() as u64;
        let tie_count = diffs.len() as u64 - wins - losses;
        let sign_p = match sign_test_with_ties(wins, tie_count, losses, ties) {
            Ok(p) => p,
            Err(Error::Degenerate(_)) => 1.0,
            Err(e) => return Err(e),
        };
        let wilcoxon_p = match wilcoxon_signed_rank(&diffs) {
            Ok(w) => Some(w.p_value),
            Err(Error::Degenerate(_)) | Err(Error::InvalidParameter { .. }) => None,
            Err(e) => return Err(e),
        };
        rows.push(PairwiseRow { algorithm: name.clone(), wins, ties: tie_count, losses, sign_p, wilcoxon_p });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: sum binomial coefficients from Pascal's triangle.
    fn pascal_tail(n: u64, top: u64) -> f64 {
        let mut row = vec![1u128];
        for _ in 0..n {
            let mut next = vec![1u128; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        let tail: u128 = row[top as usize..].iter().sum();
        (2.0 * tail as f64 / 2f64.powi(n as i32)).min(1.0)
    }

    #[test]
    fn exact_values() {
        assert_eq!(sign_test(18, 2).unwrap(), 422.0 / 1_048_576.0);
        assert_eq!(sign_test(19, 1).unwrap(), 42.0 / 1_048_576.0);
        assert_eq!(sign_test(10, 10).unwrap(), 1.0);
        assert_eq!(sign_test(2, 18).unwrap(), sign_test(18, 2).unwrap());
    }

    #[test]
    fn matches_pascal_oracle() {
        for n in 1..=60u64 {
            for w in 0..=n {
                assert_eq!(sign_test(w, n - w).unwrap(), pascal_tail(n, w.max(n - w)), "{w}/{}", n - w);
            }
        }
    }

    #[test]
    fn large_n_uses_log_space() {
        let exact = sign_test(70, 50).unwrap();
        let big = sign_test(140, 100).unwrap();
        assert!(big < exact);
        let bal = sign_test(100, 100).unwrap();
        assert_eq!(bal, 1.0);
        // continuity with the exact branch
        let a = sign_test(61, 59).unwrap();
        let b = sign_test(62, 59).unwrap();
        assert!(b < a && b > 0.5 * a);
    }

    #[test]
    fn log_space_agrees_with_pascal() {
        for n in 121..=127u64 {
            for w in [n / 2, n / 2 + 5, n - 20] {
                let p = sign_test(w, n - w).unwrap();
                let o = pascal_tail(n, w.max(n - w));
                assert!(((p - o) / o).abs() < 1e-10, "{n} {w}: {p} vs {o}");
            }
        }
    }

    #[test]
    fn ties() {
        assert_eq!(sign_test_with_ties(17, 2, 6, TiePolicy::Drop).unwrap(), sign_test(17, 6).unwrap());
        assert_eq!(sign_test_with_ties(16, 3, 8, TiePolicy::Split).unwrap(), sign_test(17, 9).unwrap());
        assert!(sign_test(0, 0).is_err());
    }

    #[test]
    fn wilcoxon_all_negative() {
        let d: Vec<f64> = (1..=20).map(|i| -(i as f64)).collect();
        let w = wilcoxon_signed_rank(&d).unwrap();
        assert_eq!(w.t, 0.0);
        assert!((w.p_value - 8.857_457_687_863_547e-5).abs() < 1e-13, "{}", w.p_value);
    }

    #[test]
    fn wilcoxon_symmetric() {
        let d = [1.0, -1.0, 2.0, -2.0, 3.0, -3.0];
        let w = wilcoxon_signed_rank(&d).unwrap();
        assert_eq!(w.w_plus, w.w_minus);
        assert!((w.p_value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn wilcoxon_degenerate() {
        assert!(matches!(wilcoxon_signed_rank(&[0.0; 6]), Err(Error::Degenerate(_))));
        assert!(wilcoxon_signed_rank(&[1.0, 2.0]).is_err());
    }
}
