//! Nonparametric comparison of algorithms over a set of problems.
//!
//! Everything works on a [`ResultsMatrix`] of per-problem performance values
//! where lower is better: pairwise sign and Wilcoxon tests against a control,
//! Friedman, aligned Friedman and Quade rankings, control-vs-all post-hoc
//! z-tests with Holland, Rom, Finner and Li adjustments, and contrast
//! estimation based on medians.

mod contrast;
mod distributions;
mod matrix;
mod pairwise;
mod posthoc;
mod ranks;

pub use contrast::contrast_estimation;
pub use distributions::{chi_squared_sf, f_sf, normal_cdf, normal_sf};
pub use matrix::ResultsMatrix;
pub use pairwise::{
    pairwise_against, sign_test, sign_test_with_ties, wilcoxon_signed_rank, PairwiseRow, TiePolicy, WilcoxonResult,
};
pub use posthoc::{
    adjust_pvalues, pair_z, posthoc, posthoc_z, rom_coefficients, Adjustment, PosthocReport, PosthocRow, ZRow,
};
pub use ranks::{aligned_friedman, average_ranks, friedman, quade, RankFamily, RankReport};
