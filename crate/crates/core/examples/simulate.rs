//! Monte Carlo play of strategy pairs against the exact discounted values.

use ranklash::{
    analytic_pair_value, estimate_values, Action, CostModel, GameParams, SimConfig, StageGame,
    StrategyKind,
};

fn main() -> ranklash::Result<()> {
    let params = GameParams::new(0.5, CostModel::constant(0.1), 0.4)?;
    let game = StageGame::symmetric(&params);
    let delta = 0.6;
    let tft = StrategyKind::TitForTat {
        initial: Action::Cooperate,
    };

    let pairs = [
        (
            "always attack vs grim",
            StrategyKind::AllDefect,
            StrategyKind::GrimTrigger,
        ),
        (
            "one attack vs tit-for-tat",
            StrategyKind::DefectKThenCooperate { k: 1 },
            tft,
        ),
        (
            "three attacks vs tit-for-tat",
            StrategyKind::DefectKThenCooperate { k: 3 },
            tft,
        ),
        ("grim vs tit-for-tat", StrategyKind::GrimTrigger, tft),
    ];
    let cfg = SimConfig::new(game, delta, 100_000, 42)?;
    println!(
        "{} episodes, horizon {} rounds, seed 42",
        cfg.episodes,
        cfg.horizon()
    );
    for (name, s1, s2) in pairs {
        let r = estimate_values(s1, s2, &cfg)?;
        let exact = analytic_pair_value(s1, s2, &game, delta)?;
        println!(
            "{name:<30} player 1: {:.4} +- {:.4} (exact {:.4})",
            r.mean[0], r.std_error[0], exact[0]
        );
    }
    Ok(())
}
