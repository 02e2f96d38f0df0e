//! Acceptance suite: runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{enumerate_multi, exact_forever, exact_k_rounds, exact_table, q};
use ranklash::multiplayer::MultiMode;
use ranklash::parallel::with_threads;
use ranklash::simulator::{sample_multi_stage, MultiStageEstimate};
use ranklash::thresholds::{cost_threshold_grim, DEFAULT_PROBE_STEP};
use ranklash::value::capped_max_defection;
use ranklash::*;

const SEED: u64 = 0;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

fn rng(tag: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(tag);
    r
}

fn cost_model(a: f64, k: u32) -> CostModel {
    CostModel::new(a, f64::from(k)).unwrap()
}

// 1 --------------------------------------------------------------------------

fn closed_form_vs_bisection() -> Verdict {
    let mut r = rng(1);
    let (mut roots, mut worst, mut failures) = (0usize, 0.0f64, Vec::new());
    let mut check = |name: &str, th: &ThresholdReport, gap: &dyn Fn(f64) -> f64| {
        if th.regime != Regime::Interior {
            return;
        }
        match common::bisect(gap, 1e-12, 1.0 - 1e-12) {
            Some(root) => {
                let err = (root - th.delta_star).abs();
                worst = worst.max(err);
                roots += 1;
                if err > 1e-6 {
                    failures.push(format!("{name}: {} vs root {root}", th.delta_star));
                }
            }
            None => failures.push(format!("{name}: no sign change around {}", th.delta_star)),
        }
    };
    for _ in 0..1000 {
        let p = r.gen_range(0.05..=0.95);
        let a = r.gen_range(0.0..=0.3);
        let k = r.gen_range(0..=2u32);
        let beta = r.gen_range(0.05..=0.95);
        let params = GameParams::new(p, cost_model(a, k), beta).unwrap();
        let gap = |pat: DefectionPattern, g: GameParams| {
            move |d: f64| v_cooperate(&g, d).unwrap() - v_defect(&g, d, pat).unwrap()
        };

        let th = delta_star_grim(&params).unwrap();
        check("grim", &th, &gap(DefectionPattern::GrimPath, params));

        let th = delta_star_tft(&params).unwrap();
        check("tft single", &th, &gap(DefectionPattern::TftSingle, params));
        check(
            "tft alternating",
            &th,
            &gap(DefectionPattern::TftAlternating, params),
        );

        // the one-time result needs a constant cost: freeze c(p)
        let frozen =
            GameParams::one_time(p, CostModel::constant(params.cost_value()), beta).unwrap();
        let th = delta_star_one_time(&frozen).unwrap();
        check(
            "one-time",
            &th,
            &gap(DefectionPattern::OneTimeGrimPath, frozen),
        );
    }
    verdict(
        failures.is_empty() && roots > 0,
        format!(
            "{roots} interior roots, max |closed - bisection| = {worst:.2e}{}",
            first(&failures)
        ),
    )
}

fn first(f: &[String]) -> String {
    match f.first() {
        None => String::new(),
        Some(x) => format!("; {} failures, first: {x}", f.len()),
    }
}

// 2 --------------------------------------------------------------------------

const MC_EPISODES: u64 = 100_000;

type McRun = (String, f64, SimReport);

fn mc_combos() -> Vec<(CostModel, f64, f64, f64)> {
    let shapes = [
        (0.2, 0.3),
        (0.35, 0.6),
        (0.5, 0.4),
        (0.65, 0.2),
        (0.8, 0.8),
        (0.3, 0.5),
        (0.6, 0.7),
        (0.9, 0.25),
    ];
    let deltas = [0.3, 0.6, 0.9];
    let mut out = Vec::new();
    for (ci, cost) in [
        CostModel::constant(0.1),
        CostModel::linear(0.2),
        CostModel::quadratic(0.3),
    ]
    .into_iter()
    .enumerate()
    {
        for (i, &(p, beta)) in shapes.iter().enumerate() {
            out.push((cost, p, beta, deltas[(i + ci) % 3]));
        }
    }
    out
}

fn mc_runs() -> Vec<McRun> {
    use StrategyKind::*;
    let tft = TitForTat {
        initial: Action::Cooperate,
    };
    let pairs = [
        (
            AllDefect,
            GrimTrigger,
            DefectionPattern::GrimPath,
            "AllD/Grim",
        ),
        (
            DefectKThenCooperate { k: 1 },
            tft,
            DefectionPattern::TftSingle,
            "DefK1/TFT",
        ),
        (
            TitForTat {
                initial: Action::Attack,
            },
            tft,
            DefectionPattern::TftAlternating,
            "TFT-D/TFT",
        ),
        (
            DefectKThenCooperate { k: 3 },
            tft,
            DefectionPattern::TftKRounds(3),
            "DefK3/TFT",
        ),
    ];
    let mut out = Vec::new();
    for (cost, p, beta, delta) in mc_combos() {
        let params = GameParams::new(p, cost, beta).unwrap();
        let game = StageGame::symmetric(&params);
        for &(s1, s2, pat, name) in &pairs {
            let cfg = SimConfig::new(game, delta, MC_EPISODES, SEED).unwrap();
            let rep = estimate_values(s1, s2, &cfg).unwrap();
            let exact = v_defect(&params, delta, pat).unwrap();
            let label = format!(
                "{name} p={p} beta={beta} delta={delta} cost={}p^{}",
                cost.coefficient, cost.exponent
            );
            out.push((label, exact, rep));
        }
    }
    out
}

fn analytic_vs_monte_carlo(runs: &[McRun]) -> Verdict {
    let mut worst_z = 0.0f64;
    let mut worst_abs = 0.0f64;
    let mut failures = Vec::new();
    for (label, exact, rep) in runs {
        let err = (rep.mean[0] - exact).abs();
        let z = err / rep.std_error[0].max(f64::MIN_POSITIVE);
        worst_abs = worst_abs.max(err);
        if rep.std_error[0] > 0.0 {
            worst_z = worst_z.max(z);
        }
        if err > 3.0 * rep.std_error[0] || err > 0.01 {
            failures.push(format!(
                "{label}: mean {} vs {exact} (se {})",
                rep.mean[0], rep.std_error[0]
            ));
        }
    }
    verdict(
        failures.is_empty() && runs.len() == 96,
        format!(
            "{} runs x {MC_EPISODES} episodes, max |err| = {worst_abs:.2e}, max err/SE = {worst_z:.2}{}",
            runs.len(),
            first(&failures)
        ),
    )
}

// 3 --------------------------------------------------------------------------

fn pd_ordering_equivalence() -> Verdict {
    let mut r = rng(3);
    let mut disagreements = Vec::new();
    let mut q_over_s = 0;
    for _ in 0..10_000 {
        let p = r.gen_range(0.0..=1.0);
        let beta = r.gen_range(0.0..=1.0);
        let a = r.gen_range(0.0..=0.6);
        let k = r.gen_range(0..=2u32);
        let params = GameParams::new(p, cost_model(a, k), beta).unwrap();
        let m = stage_payoffs(&params);
        let direct = m.q > m.s;
        let c = params.cost_value();
        let bound = p / 2.0 + (beta - 1.0) * p * p / 2.0;
        let report = check_pd_ordering(&m, &params);
        q_over_s += usize::from(direct);
        if direct != (c < bound) || direct != report.cost_below_analytic_bound {
            disagreements.push(format!(
                "p={p} beta={beta} c={c}: Q-S={} bound-c={}",
                m.q - m.s,
                bound - c
            ));
        }
    }
    verdict(
        disagreements.is_empty(),
        format!(
            "10000 draws ({q_over_s} with Q > S), {} disagreements{}",
            disagreements.len(),
            first(&disagreements)
        ),
    )
}

// 4 --------------------------------------------------------------------------

fn grim_monotonicity() -> Verdict {
    let mut r = rng(4);
    let mut points = 0;
    let mut failures = Vec::new();
    let h = DEFAULT_PROBE_STEP;
    while points < 1000 {
        let p = r.gen_range(0.05..=0.95);
        let beta = r.gen_range(0.05..=0.95);
        let c = r.gen_range(0.001..=0.3);
        let params = GameParams::new(p, CostModel::constant(c), beta).unwrap();
        if delta_star_grim(&params).unwrap().regime != Regime::Interior {
            continue;
        }
        points += 1;
        let dc = monotonicity_probe(&params, ProbeVariable::Cost, h).unwrap();
        let db = monotonicity_probe(&params, ProbeVariable::Beta, h).unwrap();
        // same differences taken by hand
        let at = |c: f64, b: f64| {
            delta_star_grim(&GameParams::new(p, CostModel::constant(c), b).unwrap())
                .unwrap()
                .delta_star
        };
        let fc = (at(c + h, beta) - at(c - h, beta)) / (2.0 * h);
        let fb = (at(c, beta + h) - at(c, beta - h)) / (2.0 * h);
        if !(dc.sign < 0 && fc < 0.0 && db.sign > 0 && fb > 0.0) {
            failures.push(format!("p={p} beta={beta} c={c}: dc {fc:.3e} db {fb:.3e}"));
        }
    }

    // derivative in p at a = 0.1, k = 0, beta = 0.2
    let base = GameParams::new(0.5, CostModel::constant(0.1), 0.2).unwrap();
    let signs: Vec<(f64, i8)> = (0..=490)
        .map(|i| 0.5 + i as f64 * 0.001)
        .map(|p| {
            (
                p,
                monotonicity_probe(&base.with_p(p), ProbeVariable::P, h)
                    .unwrap()
                    .sign,
            )
        })
        .collect();
    let flip = signs
        .windows(2)
        .find(|w| w[0].1 > 0 && w[1].1 < 0)
        .map(|w| (w[0].0 + w[1].0) / 2.0);
    let pos_before = signs.first().map(|s| s.1) == Some(1);
    let neg_after = signs.last().map(|s| s.1) == Some(-1);
    verdict(
        failures.is_empty() && flip.is_some() && pos_before && neg_after,
        format!(
            "1000 interior points, dDelta*/dc < 0 and dDelta*/dbeta > 0 at all but {}; dDelta*/dp changes sign + to - at p ~ {:.4}{}",
            failures.len(),
            flip.unwrap_or(f64::NAN),
            first(&failures)
        ),
    )
}

// 5 --------------------------------------------------------------------------

fn tft_k_dichotomy() -> Verdict {
    let mut r = rng(5);
    let mut failures = Vec::new();
    let (mut short, mut long) = (0, 0);
    for _ in 0..200 {
        let p = r.gen_range(0.05..=0.95);
        let beta = r.gen_range(0.05..=0.95);
        let c = r.gen_range(0.0..=0.3);
        let delta = r.gen_range(0.01..=0.99);
        let (pq, cq, bq, dq) = (q(p), q(c), q(beta), q(delta));
        let table = exact_table(&pq, &cq, &bq);
        let values = exact_k_rounds(&table, &dq, 50);
        let forever = exact_forever(&table, &dq);
        let threshold = &pq * &bq + (common::qi(1) - &pq) - common::qi(2) * &cq / &pq;
        let k1_optimal = dq >= threshold;

        let argmax_is_one = values.iter().skip(1).all(|v| v < &values[0]) && forever < values[0];
        let increasing = values.windows(2).all(|w| w[1] > w[0]) && forever > values[49];

        // the f64 library agrees away from the tie
        let params = GameParams::new(p, CostModel::constant(c), beta).unwrap();
        let class = tft_k_classify(&params, delta).unwrap();
        let lib_ok = (class.threshold - common::to_f64(&threshold)).abs() < 1e-12
            && ((delta - class.threshold).abs() < 1e-12
                || (class.optimal_k == DefectionLength::One) == k1_optimal);
        let v3 = v_defect(&params, delta, DefectionPattern::TftKRounds(3)).unwrap();
        let lib_value_ok = (v3 - common::to_f64(&values[2])).abs() < 1e-12;

        let ok = if k1_optimal {
            argmax_is_one
        } else {
            increasing
        };
        if k1_optimal {
            short += 1;
        } else {
            long += 1;
        }
        if !(ok && lib_ok && lib_value_ok) {
            failures.push(format!("p={p} beta={beta} c={c} delta={delta}"));
        }
    }
    verdict(
        failures.is_empty(),
        format!("200 draws in exact arithmetic: {short} with k = 1 optimal, {long} strictly increasing to infinity{}", first(&failures)),
    )
}

// 6 --------------------------------------------------------------------------

fn region_reproduction() -> Verdict {
    let betas = [0.2, 0.4, 0.6, 0.8];
    let mut notes = Vec::new();
    let mut ok = true;
    for k in 0..=2u32 {
        let cost = cost_model(0.1, k);
        let areas: Vec<f64> = betas
            .iter()
            .map(|&b| {
                region_area(&region_sweep(&SweepSpec::new(SweepStrategy::Grim, cost, b)).unwrap())
            })
            .collect();
        let dec = areas.windows(2).all(|w| w[1] < w[0]);
        ok &= dec;
        notes.push(format!(
            "grim k={k} areas {}",
            areas
                .iter()
                .map(|a| format!("{a:.4}"))
                .collect::<Vec<_>>()
                .join(">")
        ));

        let grids: Vec<Vec<Vec<bool>>> = betas
            .iter()
            .map(|&b| {
                region_sweep(&SweepSpec::new(SweepStrategy::TitForTat, cost, b))
                    .unwrap()
                    .cells
            })
            .collect();
        let same = grids.windows(2).all(|w| w[0] == w[1]);
        ok &= same;
        if !same {
            notes.push(format!("tft k={k} grids differ across beta"));
        }
    }
    let rec = region_area(
        &region_sweep(&SweepSpec::new(
            SweepStrategy::Grim,
            CostModel::constant(0.1),
            0.4,
        ))
        .unwrap(),
    );
    let once = region_area(
        &region_sweep(&SweepSpec::new(
            SweepStrategy::OneTimeGrim,
            CostModel::constant(0.1),
            0.4,
        ))
        .unwrap(),
    );
    ok &= once < rec;
    notes.push(format!(
        "tft grids identical across beta; one-time {once:.4} < recurring {rec:.4}"
    ));
    verdict(ok, format!("401x401: {}", notes.join("; ")))
}

// 7 --------------------------------------------------------------------------

fn futile_defense_peaks() -> Verdict {
    let mut failures = Vec::new();
    let (mut matched, mut worst, mut worst_drift) = (0, 0.0f64, 0.0f64);
    for &delta in &[0.5, 0.6, 0.75, 0.9] {
        for &beta in &[0.2, 0.4, 0.6] {
            let params = GameParams::new(0.5, CostModel::constant(0.1), beta).unwrap();
            let rep = futile_defense(&params, delta, DefectionPattern::GrimPath).unwrap();
            let closed = (1.0 - delta) / (2.0 * delta * (1.0 - beta));
            if closed < 1.0 {
                matched += 1;
                let err = (rep.p_peak - closed).abs();
                worst = worst.max(err);
                if err > 1e-4 {
                    failures.push(format!(
                        "delta={delta} beta={beta}: {} vs {closed}",
                        rep.p_peak
                    ));
                }
                for i in 0..=10 {
                    let cap = rep.p_peak + (1.0 - rep.p_peak) * f64::from(i) / 10.0;
                    let capped =
                        capped_max_defection(&params, delta, DefectionPattern::GrimPath, cap)
                            .unwrap();
                    let drift = (capped.v_d_max - rep.v_d_max).abs();
                    worst_drift = worst_drift.max(drift);
                    if drift > 1e-9 {
                        failures.push(format!(
                            "delta={delta} beta={beta} cap={cap}: drift {drift:.2e}"
                        ));
                    }
                }
            } else if rep.exists || rep.p_peak < 1.0 - 1e-6 {
                failures.push(format!(
                    "delta={delta} beta={beta}: expected peak at 1, got {}",
                    rep.p_peak
                ));
            }
        }
    }
    verdict(
        failures.is_empty(),
        format!("{matched} interior peaks, max |p_peak - closed form| = {worst:.2e}, max capped drift = {worst_drift:.2e}{}", first(&failures)),
    )
}

// 8 --------------------------------------------------------------------------

fn asymmetric_corollaries() -> Verdict {
    let mut r = rng(8);
    let mut failures = Vec::new();
    let strategies = [RepeatedStrategy::Grim, RepeatedStrategy::TitForTat];
    for i in 0..500 {
        let beta = r.gen_range(0.05..=0.95);
        let delta = r.gen_range(0.05..0.95);

        // p1 < p2 at a common cost below p1/2
        let (a, b) = (r.gen_range(0.05..=0.95), r.gen_range(0.05..=0.95));
        let (p1, p2) = if a < b { (a, b) } else { (b, a) };
        let c = r.gen_range(0.0..0.98) * p1 / 2.0;
        let one = PlayerProfile::new(p1, CostModel::constant(c), delta).unwrap();
        let two = PlayerProfile::new(p2, CostModel::constant(c), delta).unwrap();
        for s in strategies {
            let th = thresholds_asymmetric(&one, &two, beta, s).unwrap();
            if p1 < p2 && th.player2.delta_star < th.player1.delta_star {
                failures.push(format!(
                    "#{i} {s:?} p ordering: {} < {}",
                    th.player2.delta_star, th.player1.delta_star
                ));
            }
        }

        // c1 < c2 at a common p
        let p = r.gen_range(0.05..=0.95);
        let (x, y) = (r.gen_range(0.0..0.3), r.gen_range(0.0..0.3));
        let (c1, c2) = if x < y { (x, y) } else { (y, x) };
        let one = PlayerProfile::new(p, CostModel::constant(c1), delta).unwrap();
        let two = PlayerProfile::new(p, CostModel::constant(c2), delta).unwrap();
        for s in strategies {
            let th = thresholds_asymmetric(&one, &two, beta, s).unwrap();
            if c1 < c2 && th.binding_player != 1 {
                failures.push(format!(
                    "#{i} {s:?} cost ordering: player {} binds",
                    th.binding_player
                ));
            }
        }

        // equal profiles reduce to the symmetric thresholds
        let k = r.gen_range(0..=2u32);
        let cost = cost_model(r.gen_range(0.0..0.3), k);
        let me = PlayerProfile::new(p, cost, delta).unwrap();
        let params = GameParams::new(p, cost, beta).unwrap();
        for (s, sym) in [
            (RepeatedStrategy::Grim, delta_star_grim(&params).unwrap()),
            (
                RepeatedStrategy::TitForTat,
                delta_star_tft(&params).unwrap(),
            ),
        ] {
            let th = thresholds_asymmetric(&me, &me, beta, s).unwrap();
            for pl in [th.player1, th.player2] {
                if (pl.delta_star - sym.delta_star).abs() > 1e-12 {
                    failures.push(format!(
                        "#{i} {s:?} reduction: {} vs {}",
                        pl.delta_star, sym.delta_star
                    ));
                }
            }
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "500 draws x 3 corollaries x 2 strategies{}",
            first(&failures)
        ),
    )
}

// 9 --------------------------------------------------------------------------

fn multiplayer_checks() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;

    let mut worst = 0.0f64;
    let mut cases = 0;
    for n in 2..=12 {
        for m in 1..n {
            for &p in &[0.0, 0.1, 0.37, 0.5, 0.81, 1.0] {
                let cost = CostModel::linear(0.15);
                let mp = MultiParams::new(n, m, p, cost, 0.35, MultiMode::PerPlayer).unwrap();
                let pay = multi_stage_payoffs(&mp).unwrap();
                let (t, s, qq) = enumerate_multi(n, m, p, cost.eval(p), 0.35);
                for e in [(pay.t - t).abs(), (pay.s - s).abs(), (pay.q - qq).abs()] {
                    worst = worst.max(e);
                }
                cases += 1;
            }
        }
    }
    ok &= worst <= 1e-12;
    notes.push(format!(
        "PerPlayer vs 2^N enumeration over {cases} cases: max err {worst:.1e}"
    ));

    let params = GameParams::new(0.5, CostModel::constant(0.1), 0.4).unwrap();
    let table = stage_payoffs(&params);
    let mp = MultiParams::new(
        2,
        1,
        0.5,
        CostModel::constant(0.1),
        0.4,
        MultiMode::PerPlayer,
    )
    .unwrap();
    let pay = multi_stage_payoffs(&mp).unwrap();
    let reduces = [
        (pay.r, table.r),
        (pay.t, table.t),
        (pay.s, table.s),
        (pay.q, table.q),
    ]
    .iter()
    .all(|(a, b)| (a - b).abs() <= 1e-15);
    ok &= reduces;
    notes.push(format!(
        "N=2 PerPlayer reduces to the two-player table: {reduces}"
    ));

    let gap = mode_discrepancy(&mp).unwrap();
    let flagged = (gap.as_written.q - 0.575).abs() < 1e-12
        && (gap.per_player.q - 0.325).abs() < 1e-12
        && gap.q_gap > 0.0;
    ok &= flagged;
    notes.push(format!(
        "AsWritten N=2 Q = {} vs {} (flagged gap {})",
        gap.as_written.q, gap.per_player.q, gap.q_gap
    ));

    let mut per_player_ok = 0;
    let mut as_written_bad = Vec::new();
    for &n in &[20usize, 50] {
        for &p in &[0.3, 0.5, 0.8] {
            for s in [RepeatedStrategy::Grim, RepeatedStrategy::TitForTat] {
                let pp = multi_trend(n, p, CostModel::constant(0.1), 0.4, s, MultiMode::PerPlayer)
                    .unwrap();
                if pp.tail_monotone_decreasing {
                    per_player_ok += 1;
                } else {
                    ok = false;
                    notes.push(format!("PerPlayer tail not decreasing: N={n} p={p} {s:?}"));
                }
                let aw = multi_trend(n, p, CostModel::constant(0.1), 0.4, s, MultiMode::AsWritten)
                    .unwrap();
                if !aw.tail_monotone_decreasing {
                    as_written_bad.push(format!("N={n} p={p} {s:?}"));
                }
            }
        }
    }
    notes.push(format!(
        "delta*(M) tail strictly decreasing (PerPlayer) in {per_player_ok}/12 cases"
    ));
    if !as_written_bad.is_empty() {
        notes.push(format!(
            "AsWritten formula exceptions: {}",
            as_written_bad.join(", ")
        ));
    }
    verdict(ok, notes.join("; "))
}

// 10 -------------------------------------------------------------------------

fn multi_mc() -> MultiStageEstimate {
    let mp = MultiParams::new(
        8,
        3,
        0.4,
        CostModel::constant(0.05),
        0.4,
        MultiMode::PerPlayer,
    )
    .unwrap();
    sample_multi_stage(&mp, 200_000, SEED).unwrap()
}

fn reproducibility(reference: &[McRun]) -> Verdict {
    let reruns = with_threads(1, mc_runs);
    let same_mc =
        reruns.len() == reference.len() && reruns.iter().zip(reference).all(|(a, b)| a.2 == b.2);
    let m1 = with_threads(1, multi_mc);
    let m4 = with_threads(4, multi_mc);
    let same_multi = m1 == m4;
    verdict(
        same_mc && same_multi,
        format!(
            "{} simulator reports (4 threads vs 1): identical = {same_mc}; N-player sampler (1 vs 4 threads): identical = {same_multi}",
            reference.len()
        ),
    )
}

fn main() {
    let mut all = true;
    let mut report =
        |id: u32, name: &str, budget: Option<Duration>, run: &mut dyn FnMut() -> Verdict| {
            let start = Instant::now();
            let v = run();
            let took = start.elapsed();
            let in_time = budget.is_none_or(|b| took <= b);
            let pass = v.pass && in_time;
            all &= pass;
            let limit = budget.map_or(String::new(), |b| {
                format!(" / limit {:.0}s", b.as_secs_f64())
            });
            println!(
                "[{}] criterion {id:>2} {name}: {} ({:.2}s{limit}{})",
                if pass { "PASS" } else { "FAIL" },
                v.detail,
                took.as_secs_f64(),
                if in_time { "" } else { ", over budget" }
            );
        };

    // sanity: the grim cost threshold closes the loop with the delta threshold
    let ct = cost_threshold_grim(0.5, 0.4, 0.6).unwrap();
    assert!((ct.min_cost - (0.5 - 0.6 * 0.65) / 2.0).abs() < 1e-15);

    let mut runs = Vec::new();
    report(
        1,
        "closed-form thresholds vs bisection",
        Some(Duration::from_secs(10)),
        &mut closed_form_vs_bisection,
    );
    report(
        2,
        "analytic values vs Monte Carlo",
        Some(Duration::from_secs(60)),
        &mut || {
            runs = with_threads(4, mc_runs);
            analytic_vs_monte_carlo(&runs)
        },
    );
    report(
        3,
        "PD ordering vs analytic bound",
        None,
        &mut pd_ordering_equivalence,
    );
    report(
        4,
        "grim threshold monotonicity",
        None,
        &mut grim_monotonicity,
    );
    report(
        5,
        "tit-for-tat defection length dichotomy",
        None,
        &mut tft_k_dichotomy,
    );
    report(
        6,
        "cooperation regions",
        Some(Duration::from_secs(30)),
        &mut region_reproduction,
    );
    report(7, "futile defense", None, &mut futile_defense_peaks);
    report(
        8,
        "asymmetric corollaries",
        None,
        &mut asymmetric_corollaries,
    );
    report(
        9,
        "multi-player payoffs and trend",
        Some(Duration::from_secs(20)),
        &mut multiplayer_checks,
    );
    report(
        10,
        "seeded reproducibility across thread counts",
        None,
        &mut || reproducibility(&runs),
    );

    if !all {
        println!("acceptance: FAILED");
        std::process::exit(1);
    }
    println!("acceptance: all criteria passed");
}
