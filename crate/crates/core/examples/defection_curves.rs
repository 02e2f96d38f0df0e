//! V(C) and V(D) along the success rate, and where capping p stops helping.

use ranklash::{defection_curve, futile_defense, CostModel, DefectionPattern, GameParams};

fn main() -> ranklash::Result<()> {
    let template = GameParams::new(0.5, CostModel::constant(0.1), 0.4)?;
    let grid: Vec<f64> = (0..=10).map(|i| f64::from(i) / 10.0).collect();

    for delta in [0.3, 0.6, 0.9] {
        println!("delta = {delta}");
        for s in defection_curve(&template, delta, &grid, DefectionPattern::GrimPath)? {
            println!(
                "  p = {:.1}  V(C) = {:.4}  V(D) = {:.4}  gap = {:+.4}",
                s.p, s.v_c, s.v_d, s.gap
            );
        }
        let f = futile_defense(&template, delta, DefectionPattern::GrimPath)?;
        match f.futile_interval {
            Some((lo, hi)) => println!(
                "  V(D) peaks at p = {:.4}; capping p anywhere in [{lo:.4}, {hi}] leaves it at {:.4}",
                f.p_peak, f.v_d_max
            ),
            None => println!("  V(D) keeps rising up to p = 1; every cap helps"),
        }
    }
    Ok(())
}
