//! Full comparison report over the bundled means tables, without running
//! any optimizer.
//!
//! cargo run --example stats_tables [-- fixtures/table_10_means.csv]

use std::path::PathBuf;

use batopt::harness::{load_means, stats_pipeline};

fn main() -> batopt::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/tables_2_3_means.csv"));
    let matrix = load_means(&path)?;
    let report = stats_pipeline(&matrix, "dBA")?;
    print!("{}", report.render_text());
    Ok(())
}
