//! Discounted values of cooperating and of each defection path, payoff curves
//! over the success rate, and futile-defense detection.

use serde::{Deserialize, Serialize};

use crate::error::{check_discount, check_unit, Error, Result};
use crate::game::{stage_payoffs, CostTiming, GameParams};
use crate::numeric::grid_golden_max;

/// How the first defector plays after breaking cooperation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DefectionPattern {
    /// One defection, then mutual defection forever (grim trigger punishment).
    GrimPath,
    /// Defect once, eat one retaliation round, cooperate after.
    TftSingle,
    /// `D, C, D, C, ...` against a tit-for-tat opponent.
    TftAlternating,
    /// Defect `k` rounds against tit-for-tat, then return to cooperation.
    TftKRounds(u32),
    /// Grim path with the cost charged once, at the first attack.
    OneTimeGrimPath,
}

/// `V(C) = R / (1 - delta)`.
pub fn v_cooperate(params: &GameParams, delta: f64) -> Result<f64> {
    check_discount(delta)?;
    Ok(stage_payoffs(params).r / (1.0 - delta))
}

/// Discounted value of following `pattern` instead of cooperating.
///
/// Under [`CostTiming::OneTimeFixed`] every pattern pays the cost only in its
/// first attacking round (round 1 for all patterns here), so later attack
/// rounds are credited back their cost.
pub fn v_defect(params: &GameParams, delta: f64, pattern: DefectionPattern) -> Result<f64> {
    check_discount(delta)?;
    let m = stage_payoffs(params);
    let d = delta;
    let (base, later_attack_weight) = match pattern {
        DefectionPattern::GrimPath | DefectionPattern::OneTimeGrimPath => {
            (m.t + d * m.q / (1.0 - d), d / (1.0 - d))
        }
        DefectionPattern::TftSingle => (m.t + d * m.s + d * d / (1.0 - d) * m.r, 0.0),
        DefectionPattern::TftAlternating => {
            ((m.t + d * m.s) / (1.0 - d * d), d * d / (1.0 - d * d))
        }
        DefectionPattern::TftKRounds(0) => return Err(Error::ZeroDefectionRounds),
        DefectionPattern::TftKRounds(k) => {
            let dk = d.powi(k as i32);
            (
                m.t + (d - dk) / (1.0 - d) * m.q + dk * m.s + dk * d / (1.0 - d) * m.r,
                (d - dk) / (1.0 - d),
            )
        }
    };
    let one_time = pattern == DefectionPattern::OneTimeGrimPath
        || params.cost_timing == CostTiming::OneTimeFixed;
    if one_time {
        if !params.cost.is_constant() {
            return Err(Error::OneTimeNeedsConstantCost(params.cost.exponent));
        }
        Ok(base + later_attack_weight * params.cost_value())
    } else {
        Ok(base)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    pub p: f64,
    pub v_c: f64,
    pub v_d: f64,
    /// `v_d - v_c`
    pub gap: f64,
}

/// `V(C)` and `V(D)` along a grid of success rates; the cost model is
/// re-evaluated at each `p`.
pub fn defection_curve(
    template: &GameParams,
    delta: f64,
    p_grid: &[f64],
    pattern: DefectionPattern,
) -> Result<Vec<CurveSample>> {
    if p_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    p_grid
        .iter()
        .map(|&p| {
            check_unit("p", p)?;
            let params = template.with_p(p);
            let v_c = v_cooperate(&params, delta)?;
            let v_d = v_defect(&params, delta, pattern)?;
            Ok(CurveSample {
                p,
                v_c,
                v_d,
                gap: v_d - v_c,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DefectionPeak {
    pub p_peak: f64,
    pub v_d_max: f64,
}

pub const PEAK_GRID_POINTS: usize = 1001;
pub const PEAK_TOLERANCE: f64 = 1e-9;

fn check_open_discount(delta: f64) -> Result<()> {
    if delta > 0.0 && delta < 1.0 {
        Ok(())
    } else {
        Err(Error::Discount(delta))
    }
}

/// Largest `V(D)` an attacker can reach when the success rate is capped at `cap`.
pub fn capped_max_defection(
    template: &GameParams,
    delta: f64,
    pattern: DefectionPattern,
    cap: f64,
) -> Result<DefectionPeak> {
    check_open_discount(delta)?;
    check_unit("cap", cap)?;
    // surfaces pattern/cost-model errors before the search
    v_defect(&template.with_p(cap), delta, pattern)?;
    let f = |p: f64| v_defect(&template.with_p(p), delta, pattern).unwrap_or(f64::NEG_INFINITY);
    let (p_peak, v_d_max) = grid_golden_max(f, 0.0, cap, PEAK_GRID_POINTS, PEAK_TOLERANCE);
    Ok(DefectionPeak { p_peak, v_d_max })
}

/// Success rate maximizing `V(D)` over `[0, 1]`.
pub fn peak_defection(
    template: &GameParams,
    delta: f64,
    pattern: DefectionPattern,
) -> Result<DefectionPeak> {
    capped_max_defection(template, delta, pattern, 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FutileReport {
    pub p_peak: f64,
    pub v_d_max: f64,
    /// Caps on `p` in this range leave the attacker's best `V(D)` unchanged.
    pub futile_interval: Option<(f64, f64)>,
    pub exists: bool,
}

/// Range of caps on the attainable success rate that cannot lower the best
/// defection value. Empty when `V(D)` peaks at `p = 1`.
pub fn futile_defense(
    template: &GameParams,
    delta: f64,
    pattern: DefectionPattern,
) -> Result<FutileReport> {
    let peak = peak_defection(template, delta, pattern)?;
    let exists = peak.p_peak < 1.0 - 1e-6;
    Ok(FutileReport {
        p_peak: peak.p_peak,
        v_d_max: peak.v_d_max,
        futile_interval: exists.then_some((peak.p_peak, 1.0)),
        exists,
    })
}
