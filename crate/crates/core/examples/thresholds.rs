//! Critical discount factors under the different punishment rules.

use ranklash::{
    delta_star_grim, delta_star_one_time, delta_star_tft, tft_k_classify, thresholds_asymmetric,
    CostModel, GameParams, PlayerProfile, RepeatedStrategy,
};

fn main() -> ranklash::Result<()> {
    let params = GameParams::new(0.5, CostModel::constant(0.1), 0.4)?;

    let grim = delta_star_grim(&params)?;
    let tft = delta_star_tft(&params)?;
    let once = delta_star_one_time(&params)?;
    println!(
        "grim trigger       delta* = {:.6} ({:?})",
        grim.delta_star, grim.regime
    );
    println!(
        "tit-for-tat        delta* = {:.6} ({:?})",
        tft.delta_star, tft.regime
    );
    println!(
        "one-time cost      delta* = {:.6} ({:?})",
        once.delta_star, once.regime
    );

    // Against tit-for-tat the best defection run is one round or forever.
    for delta in [0.2, 0.5, 0.8] {
        let k = tft_k_classify(&params, delta)?;
        println!(
            "delta = {delta}: threshold {:.3}, best run length {:?}",
            k.threshold, k.optimal_k
        );
    }

    // A weaker attacker facing a stronger one.
    let weak = PlayerProfile::new(0.3, CostModel::constant(0.05), 0.6)?;
    let strong = PlayerProfile::new(0.7, CostModel::constant(0.05), 0.6)?;
    for rule in [RepeatedStrategy::Grim, RepeatedStrategy::TitForTat] {
        let th = thresholds_asymmetric(&weak, &strong, 0.4, rule)?;
        println!(
            "{rule:?}: delta1* = {:.4}, delta2* = {:.4}, binding player {}, sustainable at 0.6: {}",
            th.player1.delta_star, th.player2.delta_star, th.binding_player, th.sustainable
        );
    }
    Ok(())
}
