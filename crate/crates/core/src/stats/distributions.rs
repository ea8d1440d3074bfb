use statrs::distribution::{ChiSquared, ContinuousCDF, FisherSnedecor, Normal};

fn std_normal() -> Normal {
    Normal::standard()
}

/// `P(Z <= z)` for a standard normal.
pub fn normal_cdf(z: f64) -> f64 {
    std_normal().cdf(z)
}

/// `P(Z > z)` for a standard normal, accurate far into the tail.
pub fn normal_sf(z: f64) -> f64 {
    std_normal().sf(z)
}

/// Upper tail of a chi-square with `df` degrees of freedom.
pub fn chi_squared_sf(x: f64, df: f64) -> f64 {
    if x <= 0.0 {
        return 1.0;
    }
    ChiSquared::new(df).expect("df must be positive").sf(x)
}

/// Upper tail of an F distribution.
pub fn f_sf(x: f64, df1: f64, df2: f64) -> f64 {
    if x <= 0.0 {
        return 1.0;
    }
    FisherSnedecor::new(df1, df2).expect("df must be positive").sf(x)
}
