//! Classical benchmark functions F01..F20, plus the literal Salomon variant.
//!
//! All functions are minimized. Bounds are the same in every coordinate;
//! Trid's box depends on the dimension.

use std::f64::consts::{E, PI};

use crate::error::{Error, Result};
use crate::problem::Problem;

/// How the box of a benchmark is derived from its dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundsRule {
    Fixed(f64, f64),
    /// `[-d^2, d^2]` in every coordinate.
    SquaredDimension,
}

impl BoundsRule {
    pub fn resolve(&self, d: usize) -> (f64, f64) {
        match *self {
            BoundsRule::Fixed(lo, hi) => (lo, hi),
            BoundsRule::SquaredDimension => {
                let b = (d * d) as f64;
                (-b, b)
            }
        }
    }
}

/// A known minimizer, either closed-form or numerically located.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceOptimum {
    pub location: Vec<f64>,
    pub value: f64,
    /// False when the location is a rounded numerical minimizer, so the
    /// value only holds to a few decimals.
    pub closed_form: bool,
}

/// Registry entry for one benchmark.
#[derive(Debug, Clone, Copy)]
pub struct BenchmarkSpec {
    pub id: &'static str,
    pub name: &'static str,
    pub bounds: BoundsRule,
    pub min_dimension: usize,
    objective: fn(&[f64]) -> f64,
    optimum: Option<fn(usize) -> ReferenceOptimum>,
}

impl BenchmarkSpec {
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        self.check_dimension(x.len())?;
        Ok((self.objective)(x))
    }

    pub fn reference_optimum(&self, d: usize) -> Option<ReferenceOptimum> {
        self.optimum.map(|f| f(d))
    }

    pub fn check_dimension(&self, d: usize) -> Result<()> {
        if d >= self.min_dimension {
            Ok(())
        } else {
            Err(Error::UnsupportedDimension {
                id: self.id.to_string(),
                dim: d,
                reason: match self.min_dimension {
                    4 => "needs at least one group of four variables",
                    2 => "needs at least one adjacent pair",
                    _ => "dimension must be positive",
                },
            })
        }
    }

    /// Instantiate the benchmark as a [`Problem`] of dimension `d`.
    pub fn problem(&self, d: usize) -> Result<Problem> {
        self.check_dimension(d)?;
        let (lo, hi) = self.bounds.resolve(d);
        let f = self.objective;
        let p = Problem::uniform_box(self.id, d, lo, hi, f)?;
        Ok(match self.reference_optimum(d) {
            Some(opt) => p.with_known_optimum(opt.value),
            None => p,
        })
    }
}

macro_rules! spec {
    ($id:literal, $name:literal, $bounds:expr, $min_d:literal, $f:expr, $opt:expr) => {
        BenchmarkSpec { id: $id, name: $name, bounds: $bounds, min_dimension: $min_d, objective: $f, optimum: $opt }
    };
}

use BoundsRule::{Fixed, SquaredDimension};

static REGISTRY: [BenchmarkSpec; 21] = [
    spec!("F01", "Sphere", Fixed(-100.0, 100.0), 1, sphere, Some(origin_zero)),
    spec!("F02", "Sum of different powers", Fixed(-100.0, 100.0), 1, sum_of_powers, Some(origin_zero)),
    spec!("F03", "Rotated hyper-ellipsoid", Fixed(-65.0, 65.0), 1, rotated_hyper_ellipsoid, Some(origin_zero)),
    spec!("F04", "Griewank", Fixed(-600.0, 600.0), 1, griewank, Some(origin_zero)),
    spec!("F05", "Trid", SquaredDimension, 1, trid, Some(trid_optimum)),
    spec!("F06", "Rastrigin", Fixed(-5.12, 5.12), 1, rastrigin, Some(origin_zero)),
    spec!("F07", "Levy", Fixed(-5.12, 5.12), 1, levy, Some(ones_zero)),
    spec!("F08", "Ackley", Fixed(-32.0, 32.0), 1, ackley, Some(origin_zero)),
    spec!("F09", "Schwefel", Fixed(-500.0, 500.0), 1, schwefel, Some(schwefel_optimum)),
    spec!("F10", "Rosenbrock", Fixed(-10.0, 10.0), 1, rosenbrock, Some(ones_zero)),
    spec!("F11", "Zakharov", Fixed(-5.0, 10.0), 1, zakharov, Some(origin_zero)),
    spec!("F12", "Dixon-Price", Fixed(-10.0, 10.0), 1, dixon_price, Some(dixon_price_optimum)),
    spec!("F13", "Michalewicz", Fixed(0.0, PI), 1, michalewicz, None),
    spec!("F14", "Powell", Fixed(-10.0, 10.0), 4, powell, Some(origin_zero)),
    spec!("F15", "Bent cigar", Fixed(-10.0, 10.0), 1, bent_cigar, Some(origin_zero)),
    spec!("F16", "Alpine", Fixed(-10.0, 10.0), 1, alpine, Some(origin_zero)),
    spec!("F17", "Weierstrass", Fixed(-0.9, 0.9), 1, weierstrass, Some(origin_zero)),
    spec!("F18", "Styblinski-Tang", Fixed(-10.0, 10.0), 1, styblinski_tang, Some(styblinski_tang_optimum)),
    spec!("F19", "Salomon", Fixed(-100.0, 100.0), 1, salomon, Some(origin_zero)),
    spec!("F20", "Schaffer F7", Fixed(-100.0, 100.0), 2, schaffer_f7, Some(origin_zero)),
    spec!("F19_literal", "Salomon (norm-free form)", Fixed(-100.0, 100.0), 1, salomon_literal, Some(origin_zero)),
];

/// Every registered benchmark, F01..F20 first, then alternate keys.
pub fn registry() -> &'static [BenchmarkSpec] {
    &REGISTRY
}

/// The twenty classical ids in order.
pub fn classical_ids() -> impl Iterator<Item = &'static str> {
    REGISTRY[..20].iter().map(|s| s.id)
}

pub fn lookup(id: &str) -> Result<&'static BenchmarkSpec> {
    REGISTRY.iter().find(|s| s.id.eq_ignore_ascii_case(id)).ok_or_else(|| Error::UnknownBenchmark(id.to_string()))
}

pub fn evaluate(id: &str, x: &[f64]) -> Result<f64> {
    lookup(id)?.evaluate(x)
}

/// Instantiate benchmarks at dimension `d`; `None` means F01..F20.
pub fn suite(ids: Option<&[&str]>, d: usize) -> Result<Vec<Problem>> {
    match ids {
        Some(ids) => ids.iter().map(|id| lookup(id)?.problem(d)).collect(),
        None => REGISTRY[..20].iter().map(|s| s.problem(d)).collect(),
    }
}

// ---- reference optima ----

fn origin_zero(d: usize) -> ReferenceOptimum {
    ReferenceOptimum { location: vec![0.0; d], value: 0.0, closed_form: true }
}

fn ones_zero(d: usize) -> ReferenceOptimum {
    ReferenceOptimum { location: vec![1.0; d], value: 0.0, closed_form: true }
}

fn trid_optimum(d: usize) -> ReferenceOptimum {
    let df = d as f64;
    ReferenceOptimum {
        location: (1..=d).map(|i| (i * (d + 1 - i)) as f64).collect(),
        value: -df * (df + 4.0) * (df - 1.0) / 6.0,
        closed_form: true,
    }
}

fn dixon_price_optimum(d: usize) -> ReferenceOptimum {
    let location = (1..=d)
        .map(|i| {
            let p = 2f64.powi(i as i32);
            2f64.powf(-(p - 2.0) / p)
        })
        .collect();
    ReferenceOptimum { location, value: 0.0, closed_form: true }
}

const SCHWEFEL_ARGMIN: f64 = 420.968_746_359_982;
const STYBLINSKI_ARGMIN: f64 = -2.903_534_031_400_779;
const STYBLINSKI_OFFSET: f64 = 39.165_99;

fn schwefel_optimum(d: usize) -> ReferenceOptimum {
    ReferenceOptimum { location: vec![SCHWEFEL_ARGMIN; d], value: 0.0, closed_form: false }
}

fn styblinski_tang_optimum(d: usize) -> ReferenceOptimum {
    // The printed offset is rounded, so the minimum sits slightly below zero.
    let x = STYBLINSKI_ARGMIN;
    let per_dim = 0.5 * (x.powi(4) - 16.0 * x * x + 5.0 * x) + STYBLINSKI_OFFSET;
    ReferenceOptimum { location: vec![x; d], value: per_dim * d as f64, closed_form: false }
}

// ---- objectives ----

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn sum_of_powers(x: &[f64]) -> f64 {
    x.iter().enumerate().map(|(i, v)| v.abs().powi(i as i32 + 2)).sum()
}

pub fn rotated_hyper_ellipsoid(x: &[f64]) -> f64 {
    let mut prefix = 0.0;
    let mut total = 0.0;
    for v in x {
        prefix += v * v;
        total += prefix;
    }
    total
}

pub fn griewank(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v * v / 4000.0).sum();
    let prod: f64 = x.iter().enumerate().map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos()).product();
    sum - prod + 1.0
}

pub fn trid(x: &[f64]) -> f64 {
    let a: f64 = x.iter().map(|v| (v - 1.0).powi(2)).sum();
    let b: f64 = x.windows(2).map(|w| w[0] * w[1]).sum();
    a - b
}

pub fn rastrigin(x: &[f64]) -> f64 {
    10.0 * x.len() as f64 + x.iter().map(|v| v * v - 10.0 * (2.0 * PI * v).cos()).sum::<f64>()
}

pub fn levy(x: &[f64]) -> f64 {
    let w = |v: f64| 1.0 + (v - 1.0) / 4.0;
    let d = x.len();
    let w1 = w(x[0]);
    let wd = w(x[d - 1]);
    let mid: f64 = x[..d - 1]
        .iter()
        .map(|&v| {
            let wi = w(v);
            (wi - 1.0).powi(2) * (1.0 + 10.0 * (PI * wi + 1.0).sin().powi(2))
        })
        .sum();
    (PI * w1).sin().powi(2) + mid + (wd - 1.0).powi(2) * (1.0 + 10.0 * (PI * wd).sin().powi(2))
}

pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq: f64 = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

pub fn schwefel(x: &[f64]) -> f64 {
    418.9829 * x.len() as f64 - x.iter().map(|v| v * v.abs().sqrt().sin()).sum::<f64>()
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2).map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2)).sum()
}

pub fn zakharov(x: &[f64]) -> f64 {
    let sq: f64 = x.iter().map(|v| v * v).sum();
    let lin: f64 = x.iter().enumerate().map(|(i, v)| 0.5 * (i + 1) as f64 * v).sum();
    sq + lin.powi(2) + lin.powi(4)
}

pub fn dixon_price(x: &[f64]) -> f64 {
    let head = (x[0] - 1.0).powi(2);
    head + x.windows(2).enumerate().map(|(j, w)| (j + 2) as f64 * (2.0 * w[1] * w[1] - w[0]).powi(2)).sum::<f64>()
}

pub fn michalewicz(x: &[f64]) -> f64 {
    -x.iter().enumerate().map(|(i, &v)| v.sin() * ((i + 1) as f64 * v * v / PI).sin().powi(20)).sum::<f64>()
}

/// Uses `floor(d / 4)` groups; trailing variables do not contribute.
pub fn powell(x: &[f64]) -> f64 {
    x.chunks_exact(4)
        .map(|g| {
            (g[0] + 10.0 * g[1]).powi(2)
                + 5.0 * (g[2] - g[3]).powi(2)
                + (g[1] - 2.0 * g[2]).powi(4)
                + 10.0 * (g[0] + g[3]).powi(4)
        })
        .sum()
}

pub fn bent_cigar(x: &[f64]) -> f64 {
    x[0] * x[0] + 1e6 * x[1..].iter().map(|v| v * v).sum::<f64>()
}

pub fn alpine(x: &[f64]) -> f64 {
    x.iter().map(|v| (v * v.sin() + 0.1 * v).abs()).sum()
}

const WEIERSTRASS_TERMS: i32 = 21;

fn weierstrass_inner(v: f64) -> f64 {
    (0..WEIERSTRASS_TERMS).map(|k| 0.5f64.powi(k) * (2.0 * PI * 3f64.powi(k) * (v + 0.5)).cos()).sum()
}

/// Each coordinate contributes `inner(x_i) - inner(0)`, which is the printed
/// formula regrouped so the origin evaluates to exactly zero.
pub fn weierstrass(x: &[f64]) -> f64 {
    let c = weierstrass_inner(0.0);
    x.iter().map(|&v| weierstrass_inner(v) - c).sum()
}

pub fn styblinski_tang(x: &[f64]) -> f64 {
    0.5 * x.iter().map(|v| v.powi(4) - 16.0 * v * v + 5.0 * v).sum::<f64>() + STYBLINSKI_OFFSET * x.len() as f64
}

pub fn salomon(x: &[f64]) -> f64 {
    let r = sphere(x).sqrt();
    1.0 - (2.0 * PI * r).cos() + 0.1 * r
}

pub fn salomon_literal(x: &[f64]) -> f64 {
    let s: f64 = x.iter().sum();
    1.0 - (2.0 * PI * s).cos() + 0.1 * sphere(x)
}

pub fn schaffer_f7(x: &[f64]) -> f64 {
    let total: f64 = x
        .windows(2)
        .map(|w| {
            let q = w[0] * w[0] + w[1] * w[1];
            let s = q.powf(0.25);
            s + s * (50.0 * q.powf(0.1)).sin().powi(2)
        })
        .sum();
    total / (x.len() - 1) as f64
}
