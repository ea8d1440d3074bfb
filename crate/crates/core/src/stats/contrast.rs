use super::matrix::ResultsMatrix;

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Median-based contrast estimate between every pair of algorithms.
///
/// With `D_uv` the median over problems of `x_u - x_v` and `m_u` the mean of
/// row `u` of `D`, entry `[i][j]` is `m_j - m_i`: positive when the row
/// algorithm achieves lower values than the column algorithm.
pub fn contrast_estimation(matrix: &ResultsMatrix) -> Vec<Vec<f64>> {
    let k = matrix.k();
    let mut d = vec![vec![0.0; k]; k];
    for u in 0..k {
        for v in (u + 1)..k {
            let m = median(matrix.rows().iter().map(|r| r[u] - r[v]).collect());
            d[u][v] = m;
            d[v][u] = -m;
        }
    }
    let means: Vec<f64> = d.iter().map(|row| row.iter().sum::<f64>() / k as f64).collect();
    (0..k).map(|i| (0..k).map(|j| means[j] - means[i]).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_even_and_odd() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn identical_columns_have_zero_contrast() {
        let m = ResultsMatrix::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec!["p".into(), "q".into(), "r".into()],
            vec![vec![1.0, 1.0, 3.0], vec![2.0, 2.0, 0.5], vec![7.0, 7.0, 9.0]],
        )
        .unwrap();
        let c = contrast_estimation(&m);
        assert_eq!(c[0][1], 0.0);
        for (i, row) in c.iter().enumerate() {
            assert_eq!(row[i], 0.0);
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, -c[j][i]);
            }
        }
        // a is better than c on two of three problems
        assert!(c[0][2] > 0.0);
    }
}
