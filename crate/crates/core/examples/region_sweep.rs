//! Cooperation regions over (p, delta), written as CSV and SVG.
//!
//! Usage: `cargo run --example region_sweep -- [OUT_DIR]`

use std::path::PathBuf;

use ranklash::export::{region_svg, region_table, write_atomic};
use ranklash::{region_area, region_sweep, CostModel, SweepSpec, SweepStrategy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out: PathBuf = std::env::args()
        .nth(1)
        .map_or_else(std::env::temp_dir, PathBuf::from);

    for (name, strategy) in [
        ("grim", SweepStrategy::Grim),
        ("tft", SweepStrategy::TitForTat),
        ("one_time", SweepStrategy::OneTimeGrim),
    ] {
        for beta in [0.2, 0.4, 0.6, 0.8] {
            let grid = region_sweep(&SweepSpec::new(strategy, CostModel::constant(0.1), beta))?;
            println!(
                "{name:>8} beta = {beta}: cooperative area {:.4}",
                region_area(&grid)
            );
            if beta == 0.4 {
                let stem = out.join(format!("region_{name}"));
                write_atomic(&stem.with_extension("csv"), &region_table(&grid).to_csv())?;
                write_atomic(&stem.with_extension("svg"), &region_svg(&grid, name))?;
            }
        }
    }
    println!("beta = 0.4 grids written to {}", out.display());
    Ok(())
}
