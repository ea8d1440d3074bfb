use super::distributions::normal_sf;
use super::ranks::{RankFamily, RankReport};
use crate::error::{Error, Result};

/// Standard error of a rank difference for the given family.
fn standard_error(family: RankFamily, n: f64, k: f64) -> f64 {
    match family {
        RankFamily::Friedman => (k * (k + 1.0) / (6.0 * n)).sqrt(),
        RankFamily::AlignedFriedman => (k * (k * n + 1.0) / 6.0).sqrt(),
        RankFamily::Quade => (k * (k + 1.0) * (2.0 * n + 1.0) * (k - 1.0) / (18.0 * n * (n + 1.0))).sqrt(),
    }
}

/// One control-vs-algorithm z-test.
#[derive(Debug, Clone, PartialEq)]
pub struct ZRow {
    pub algorithm: String,
    /// Positive when the algorithm ranks worse than the control.
    pub z: f64,
    /// Two-sided normal p-value.
    pub p: f64,
}

fn two_sided(z: f64) -> f64 {
    (2.0 * normal_sf(z.abs())).min(1.0)
}

/// z-test between two named algorithms of a rank report.
pub fn pair_z(report: &RankReport, control: &str, other: &str) -> Result<(f64, f64)> {
    let rc = report.rank_of(control).ok_or_else(|| Error::UnknownControl(control.to_string()))?;
    let ro = report.rank_of(other).ok_or_else(|| Error::UnknownControl(other.to_string()))?;
    let se = standard_error(report.family, report.n_problems as f64, report.algorithms.len() as f64);
    let z = (ro - rc) / se;
    Ok((z, two_sided(z)))
}

/// z-tests of every other algorithm against `control`, sorted by
/// ascending p-value (ties keep column order).
pub fn posthoc_z(report: &RankReport, control: &str) -> Result<Vec<ZRow>> {
    let c = report
        .algorithms
        .iter()
        .position(|a| a.eq_ignore_ascii_case(control))
        .ok_or_else(|| Error::UnknownControl(control.to_string()))?;
    let se = standard_error(report.family, report.n_problems as f64, report.algorithms.len() as f64);
    let mut rows: Vec<ZRow> = report
        .algorithms
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != c)
        .map(|(j, a)| {
            let z = (report.ranks[j] - report.ranks[c]) / se;
            ZRow { algorithm: a.clone(), z, p: two_sided(z) }
        })
        .collect();
    rows.sort_by(|a, b| a.p.total_cmp(&b.p));
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adjustment {
    Holland,
    Rom,
    Finner,
    Li,
}

impl Adjustment {
    pub const ALL: [Adjustment; 4] = [Adjustment::Holland, Adjustment::Rom, Adjustment::Finner, Adjustment::Li];

    pub fn label(self) -> &'static str {
        match self {
            Adjustment::Holland => "Holland",
            Adjustment::Rom => "Rom",
            Adjustment::Finner => "Finner",
            Adjustment::Li => "Li",
        }
    }
}

fn binomial(n: usize, r: usize) -> f64 {
    (0..r).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Critical values `c_1..c_m` of Rom's step-up procedure at level `alpha`.
///
/// `c_1 = alpha`, `c_2 = alpha / 2`, and for `i >= 3`
/// `c_i = (sum_{j=1}^{i-2} alpha^j - sum_{j=1}^{i-3} C(i, j) c_{j+1}^{i-j}) / i`.
pub fn rom_coefficients(m: usize, alpha: f64) -> Vec<f64> {
    let mut c: Vec<f64> = Vec::with_capacity(m);
    for i in 1..=m {
        let v = match i {
            1 => alpha,
            2 => alpha / 2.0,
            _ => {
                let powers: f64 = (1..=i - 2).map(|j| alpha.powi(j as i32)).sum();
                let correction: f64 =
                    (1..=i.saturating_sub(3)).map(|j| binomial(i, j) * c[j].powi((i - j) as i32)).sum();
                (powers - correction) / i as f64
            }
        };
        c.push(v);
    }
    c
}

/// Adjusted p-values for `m` ascending unadjusted p-values, capped at 1.
pub fn adjust_pvalues(p_sorted: &[f64], method: Adjustment) -> Result<Vec<f64>> {
    if p_sorted.iter().any(|p| !(0.0..=1.0).contains(p)) || p_sorted.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::UnsortedPValues);
    }
    let m = p_sorted.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let mf = m as f64;
    let step_down = |f: &dyn Fn(usize, f64) -> f64| {
        let mut running: f64 = 0.0;
        p_sorted
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                running = running.max(f(i + 1, p));
                running.min(1.0)
            })
            .collect::<Vec<_>>()
    };
    Ok(match method {
        Adjustment::Holland => step_down(&|j, p| 1.0 - (1.0 - p).powf(mf - j as f64 + 1.0)),
        Adjustment::Finner => step_down(&|j, p| 1.0 - (1.0 - p).powf(mf / j as f64)),
        Adjustment::Li => {
            let last = p_sorted[m - 1];
            p_sorted.iter().map(|&p| if p == 0.0 { 0.0 } else { (p / (p + 1.0 - last)).min(1.0) }).collect()
        }
        Adjustment::Rom => {
            let alpha = 0.05;
            let c = rom_coefficients(m, alpha);
            // p_j (1-based, ascending) is tested against c_{m-j+1}
            let raw: Vec<f64> = (1..=m).map(|j| (alpha / c[m - j] * p_sorted[j - 1]).min(1.0)).collect();
            let mut out = raw.clone();
            for i in (0..m.saturating_sub(1)).rev() {
                out[i] = out[i].min(out[i + 1]);
            }
            out
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct PosthocRow {
    pub algorithm: String,
    pub z: f64,
    pub p_unadjusted: f64,
    pub p_holland: f64,
    pub p_rom: f64,
    pub p_finner: f64,
    pub p_li: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PosthocReport {
    pub family: RankFamily,
    pub control: String,
    pub rows: Vec<PosthocRow>,
}

/// Full control-vs-all grid for one rank family.
pub fn posthoc(report: &RankReport, control: &str) -> Result<PosthocReport> {
    let z = posthoc_z(report, control)?;
    let p: Vec<f64> = z.iter().map(|r| r.p).collect();
    let [h, r, f, l] = Adjustment::ALL.map(|m| adjust_pvalues(&p, m));
    let (h, r, f, l) = (h?, r?, f?, l?);
    let rows = z
        .into_iter()
        .enumerate()
        .map(|(i, zr)| PosthocRow {
            algorithm: zr.algorithm,
            z: zr.z,
            p_unadjusted: zr.p,
            p_holland: h[i],
            p_rom: r[i],
            p_finner: f[i],
            p_li: l[i],
        })
        .collect();
    let control = report
        .algorithms
        .iter()
        .find(|a| a.eq_ignore_ascii_case(control))
        .cloned()
        .unwrap_or_else(|| control.to_string());
    Ok(PosthocReport { family: report.family, control, rows })
}
