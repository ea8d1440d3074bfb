//! How often does the first local walk leave the box? Monte Carlo over the
//! unit line and a 30-D box for several initial widths.
//!
//! cargo run --release --example oob_probe

use batopt::bat::oob_fraction_probe;
use batopt::{Problem, RngStream};

fn main() -> batopt::Result<()> {
    for d in [1, 30] {
        let unit = Problem::uniform_box("unit", d, 0.0, 1.0, |_| 0.0)?;
        for frac in [1.0, 0.5, 0.25, 0.0025] {
            let p = oob_fraction_probe(&unit, frac, 0.9, 200_000, &mut RngStream::new(1))?;
            println!("d = {d:>2}  w0 = {frac:<6} of width  out of box {:.4}", p);
        }
    }
    Ok(())
}
