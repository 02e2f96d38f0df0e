//! Critical discount factors and cost thresholds.
//!
//! Every cooperation condition here reduces to a linear inequality in the
//! discount factor, `delta * den >= num`. With `den > 0` that is the familiar
//! `delta >= delta_star = num / den`. The helpers keep the raw ratio even when
//! it falls outside `[0, 1]`; the [`Regime`] carries the interpretation.

use serde::{Deserialize, Serialize};

use crate::error::{check_discount, check_unit, Error, Result};
use crate::game::{eval_cost, stage_payoffs, CostTiming, GameParams, PlayerProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    /// Every `delta` in `[0, 1)` sustains cooperation.
    AlwaysCooperate,
    Interior,
    /// No `delta < 1` sustains cooperation.
    NeverCooperate,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub delta_star: f64,
    pub regime: Regime,
    /// 1 or 2; only set by asymmetric analyses.
    pub binding_player: Option<u8>,
    /// The condition reads `delta <= delta_star` (negative denominator).
    /// Never set for the two-player grim and tit-for-tat formulas.
    #[serde(default)]
    pub inverted: bool,
}

impl ThresholdReport {
    /// Solves `delta * den >= num` for `delta` in `[0, 1)`.
    pub fn from_linear(num: f64, den: f64) -> Self {
        if den == 0.0 {
            // T = R style degeneracy: the condition no longer involves delta.
            let (delta_star, regime) = if num <= 0.0 {
                (0.0, Regime::AlwaysCooperate)
            } else {
                (1.0, Regime::NeverCooperate)
            };
            return Self {
                delta_star,
                regime,
                binding_player: None,
                inverted: false,
            };
        }
        let ratio = num / den;
        if den > 0.0 {
            Self {
                delta_star: ratio,
                regime: classify(ratio),
                binding_player: None,
                inverted: false,
            }
        } else {
            let regime = if ratio >= 1.0 {
                Regime::AlwaysCooperate
            } else if ratio < 0.0 {
                Regime::NeverCooperate
            } else {
                Regime::Interior
            };
            Self {
                delta_star: ratio,
                regime,
                binding_player: None,
                inverted: true,
            }
        }
    }

    /// Whether discount factor `delta` sustains cooperation (weak inequality).
    pub fn sustains(&self, delta: f64) -> bool {
        match self.regime {
            Regime::AlwaysCooperate => true,
            Regime::NeverCooperate => false,
            Regime::Interior if self.inverted => delta <= self.delta_star,
            Regime::Interior => delta >= self.delta_star,
        }
    }
}

/// Regime of a (non-inverted) threshold value.
pub fn classify(delta_star: f64) -> Regime {
    if delta_star <= 0.0 {
        Regime::AlwaysCooperate
    } else if delta_star >= 1.0 {
        Regime::NeverCooperate
    } else {
        Regime::Interior
    }
}

fn grim_terms(p: f64, c: f64, beta: f64) -> (f64, f64) {
    (p - 2.0 * c, p - beta * p * p + p * p)
}

/// Grim trigger: `delta* = (p - 2c) / (p - beta p^2 + p^2)`.
pub fn delta_star_grim(params: &GameParams) -> Result<ThresholdReport> {
    if params.cost_timing == CostTiming::OneTimeFixed {
        return Err(Error::OneTimeTimingNotSupported);
    }
    let (num, den) = grim_terms(params.p, params.cost_value(), params.beta);
    Ok(ThresholdReport::from_linear(num, den))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostThreshold {
    /// Smallest cost that sustains cooperation, floored at 0.
    pub min_cost: f64,
    pub raw: f64,
    /// Raw value was negative: any nonnegative cost works.
    pub clamped: bool,
}

impl CostThreshold {
    fn from_raw(raw: f64) -> Self {
        Self {
            min_cost: raw.max(0.0),
            raw,
            clamped: raw < 0.0,
        }
    }
}

/// Minimum attack cost sustaining cooperation under grim trigger at `delta`.
pub fn cost_threshold_grim(p: f64, beta: f64, delta: f64) -> Result<CostThreshold> {
    check_unit("p", p)?;
    check_unit("beta", beta)?;
    check_discount(delta)?;
    Ok(CostThreshold::from_raw(
        (p - delta * (p - beta * p * p + p * p)) / 2.0,
    ))
}

/// Minimum attack cost sustaining cooperation under tit-for-tat at `delta`:
/// `(1 - delta) p / 2`.
pub fn cost_threshold_tft(p: f64, delta: f64) -> Result<CostThreshold> {
    check_unit("p", p)?;
    check_discount(delta)?;
    Ok(CostThreshold::from_raw((1.0 - delta) * p / 2.0))
}

/// Tit-for-tat, single defection or alternation: `delta* = 1 - 2c/p`.
///
/// The threshold does not depend on `beta`: under these paths the players
/// never attack in the same round.
pub fn delta_star_tft(params: &GameParams) -> Result<ThresholdReport> {
    let p = params.p;
    let c = params.cost_value();
    if p == 0.0 {
        return Ok(ThresholdReport::from_linear(-2.0 * c, 0.0));
    }
    let mut report = ThresholdReport::from_linear(p - 2.0 * c, p);
    report.delta_star = 1.0 - 2.0 * c / p;
    report.regime = classify(report.delta_star);
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DefectionLength {
    One,
    Infinity,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TftKClass {
    /// `(Q - S) / (R - S) = p beta + (1 - p) - 2c/p`
    pub threshold: f64,
    pub optimal_k: DefectionLength,
}

/// Best length of a defection run against tit-for-tat.
///
/// Extending a run by one round changes the deviator's value by
/// `delta^k [(Q - S) - delta (R - S)]`, so the optimum is either one round or forever.
pub fn tft_k_classify(params: &GameParams, delta: f64) -> Result<TftKClass> {
    check_discount(delta)?;
    let p = params.p;
    if p == 0.0 {
        return Err(Error::ZeroSuccessRate);
    }
    let c = params.cost_value();
    let threshold = p * params.beta + (1.0 - p) - 2.0 * c / p;
    let optimal_k = if delta >= threshold {
        DefectionLength::One
    } else {
        DefectionLength::Infinity
    };
    Ok(TftKClass {
        threshold,
        optimal_k,
    })
}

/// Grim trigger with a fixed cost paid only on a player's first attack:
/// `delta* = (p - 2c) / (p - beta p^2 + p^2 - 2c)`.
///
/// For `c > 0` this is never below the recurring-cost threshold.
pub fn delta_star_one_time(params: &GameParams) -> Result<ThresholdReport> {
    if !params.cost.is_constant() {
        return Err(Error::OneTimeNeedsConstantCost(params.cost.exponent));
    }
    let p = params.p;
    let c = params.cost_value();
    let (num, den) = grim_terms(p, c, params.beta);
    Ok(ThresholdReport::from_linear(num, den - 2.0 * c))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RepeatedStrategy {
    Grim,
    TitForTat,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymmetricThresholds {
    pub player1: ThresholdReport,
    pub player2: ThresholdReport,
    /// Player (1 or 2) whose constraint `delta_i >= delta_i*` is tightest.
    pub binding_player: u8,
    pub sustainable: bool,
}

/// Per-player thresholds for players differing in `p`, cost and discount.
///
/// Grim: `delta_i* = (p_i - 2c_i) / ((1 - beta) p_1 p_2 + p_j)`;
/// tit-for-tat: `delta_i* = (p_i - 2c_i) / p_j`.
pub fn thresholds_asymmetric(
    p1: &PlayerProfile,
    p2: &PlayerProfile,
    beta: f64,
    strategy: RepeatedStrategy,
) -> Result<AsymmetricThresholds> {
    check_unit("beta", beta)?;
    let one = |me: &PlayerProfile, other: &PlayerProfile| {
        let num = me.p - 2.0 * me.cost_value();
        let den = match strategy {
            RepeatedStrategy::Grim => (1.0 - beta) * me.p * other.p + other.p,
            RepeatedStrategy::TitForTat => other.p,
        };
        ThresholdReport::from_linear(num, den)
    };
    let mut r1 = one(p1, p2);
    let mut r2 = one(p2, p1);

    let slack1 = r1.delta_star - p1.delta;
    let slack2 = r2.delta_star - p2.delta;
    let binding = if slack2 > slack1 || (slack2 == slack1 && r2.delta_star > r1.delta_star) {
        2
    } else {
        1
    };
    r1.binding_player = Some(binding);
    r2.binding_player = Some(binding);
    Ok(AsymmetricThresholds {
        player1: r1,
        player2: r2,
        binding_player: binding,
        sustainable: r1.sustains(p1.delta) && r2.sustains(p2.delta),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscountAsymmetry {
    pub player1: CostThreshold,
    pub player2: CostThreshold,
    pub binding_player: u8,
    pub sustainable: bool,
}

/// Players sharing `p` and cost but with different patience: cooperation needs
/// the cost to clear each player's own cost threshold.
pub fn cost_conditions_by_discount(
    params: &GameParams,
    delta1: f64,
    delta2: f64,
    strategy: RepeatedStrategy,
) -> Result<DiscountAsymmetry> {
    let th = |d: f64| match strategy {
        RepeatedStrategy::Grim => cost_threshold_grim(params.p, params.beta, d),
        RepeatedStrategy::TitForTat => cost_threshold_tft(params.p, d),
    };
    let t1 = th(delta1)?;
    let t2 = th(delta2)?;
    let c = params.cost_value();
    Ok(DiscountAsymmetry {
        player1: t1,
        player2: t2,
        binding_player: if t2.raw > t1.raw { 2 } else { 1 },
        sustainable: c >= t1.raw && c >= t2.raw,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProbeVariable {
    Cost,
    Beta,
    P,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbeResult {
    pub sign: i8,
    pub derivative: f64,
}

pub const DEFAULT_PROBE_STEP: f64 = 1e-5;

/// Sign of the partial derivative of the grim-trigger `delta*` by central difference.
///
/// For `Cost` the evaluated cost is perturbed directly; for `P` the cost model
/// is re-evaluated at the shifted success rates.
pub fn monotonicity_probe(
    params: &GameParams,
    variable: ProbeVariable,
    step: f64,
) -> Result<ProbeResult> {
    if !(step > 0.0) {
        return Err(Error::Invalid(format!(
            "probe step must be positive, got {step}"
        )));
    }
    let ds = |p: f64, c: f64, beta: f64| {
        let (num, den) = grim_terms(p, c, beta);
        num / den
    };
    let (p, beta) = (params.p, params.beta);
    let c = params.cost_value();
    let boundary = |name| Error::ProbeAtBoundary {
        variable: name,
        step,
    };
    let (hi, lo) = match variable {
        ProbeVariable::Cost => {
            if c - step < 0.0 || p <= 0.0 {
                return Err(boundary("cost"));
            }
            (ds(p, c + step, beta), ds(p, c - step, beta))
        }
        ProbeVariable::Beta => {
            if beta - step < 0.0 || beta + step > 1.0 || p <= 0.0 {
                return Err(boundary("beta"));
            }
            (ds(p, c, beta + step), ds(p, c, beta - step))
        }
        ProbeVariable::P => {
            if p - step <= 0.0 || p + step > 1.0 {
                return Err(boundary("p"));
            }
            let (ph, pl) = (p + step, p - step);
            (
                ds(ph, eval_cost(&params.cost, ph), beta),
                ds(pl, eval_cost(&params.cost, pl), beta),
            )
        }
    };
    let derivative = (hi - lo) / (2.0 * step);
    // below this the difference is roundoff
    let noise = 1e-10;
    let sign = if derivative > noise {
        1
    } else if derivative < -noise {
        -1
    } else {
        0
    };
    Ok(ProbeResult { sign, derivative })
}

/// `delta*` for the grim path computed from payoffs: `(T - R) / (T - Q)`.
/// Used to cross-check the closed forms.
pub fn delta_star_from_payoffs(params: &GameParams) -> f64 {
    let m = stage_payoffs(params);
    (m.t - m.r) / (m.t - m.q)
}
