//! N-player payoffs, the two readings of the published formulas, and how the
//! threshold moves as more players attack.

use ranklash::{
    mode_discrepancy, multi_delta_star, multi_trend, CostModel, MultiMode, MultiParams,
    RepeatedStrategy,
};

fn main() -> ranklash::Result<()> {
    let cost = CostModel::constant(0.1);

    let gap = mode_discrepancy(&MultiParams::new(
        2,
        1,
        0.5,
        cost,
        0.4,
        MultiMode::PerPlayer,
    )?)?;
    println!(
        "N = 2: Q as written {:.4}, per player {:.4} (two-player table: 0.325)",
        gap.as_written.q, gap.per_player.q
    );

    let mp = MultiParams::new(10, 4, 0.5, cost, 0.4, MultiMode::PerPlayer)?;
    let th = multi_delta_star(&mp, RepeatedStrategy::Grim)?;
    println!(
        "N = 10, M = 4, grim: delta* = {:.4} ({:?})",
        th.delta_star, th.regime
    );

    for mode in [MultiMode::PerPlayer, MultiMode::AsWritten] {
        let tr = multi_trend(20, 0.5, cost, 0.4, RepeatedStrategy::Grim, mode)?;
        let pts: Vec<String> = tr
            .points
            .iter()
            .step_by(3)
            .map(|(m, d)| format!("M={m}:{d:.3}"))
            .collect();
        println!("{mode:?} N = 20: {}", pts.join(" "));
        println!("  decreasing for M >= N/2: {}", tr.tail_monotone_decreasing);
    }
    Ok(())
}
