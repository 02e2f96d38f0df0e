//! Stage payoffs and the prisoner's-dilemma check across cost models.

use ranklash::{check_pd_ordering, stage_payoffs, CostModel, GameParams};

fn main() -> ranklash::Result<()> {
    println!(
        "{:>10} {:>5} {:>8} {:>8} {:>8} {:>8}  dilemma",
        "cost", "p", "R", "T", "S", "Q"
    );
    for (label, cost) in [
        ("0.1", CostModel::constant(0.1)),
        ("0.2p", CostModel::linear(0.2)),
        ("0.3p^2", CostModel::quadratic(0.3)),
    ] {
        for p in [0.2, 0.5, 0.9] {
            let params = GameParams::new(p, cost, 0.4)?;
            let m = stage_payoffs(&params);
            let ord = check_pd_ordering(&m, &params);
            let verdict = if ord.holds {
                "yes".to_owned()
            } else {
                format!("no {:?}", ord.violated_pairs)
            };
            println!(
                "{label:>10} {p:>5} {:>8.4} {:>8.4} {:>8.4} {:>8.4}  {verdict}",
                m.r, m.t, m.s, m.q
            );
        }
    }
    Ok(())
}
