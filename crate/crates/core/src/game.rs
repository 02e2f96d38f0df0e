//! Game configuration, attack cost models and the one-shot payoff table.
//!
//! Two sellers share a normalized market of size 1. Each round a seller either
//! cooperates or launches a ranking-manipulation attack that succeeds with
//! probability `p`. A lone successful attacker takes the whole market; when
//! both attacks succeed the market is shared at a degraded value `beta`.
//! Payoffs below are expectations over attack outcomes, from one player's view.

use serde::{Deserialize, Serialize};

use crate::error::{check_discount, check_unit, Error, Result};

/// Attack cost as a function of the attack success rate: `a * p^k`.
///
/// `k = 0` is a constant cost, `k = 1` linear, `k = 2` quadratic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostModel {
    pub coefficient: f64,
    pub exponent: f64,
}

impl CostModel {
    pub fn new(coefficient: f64, exponent: f64) -> Result<Self> {
        if !(coefficient >= 0.0 && coefficient.is_finite()) {
            return Err(Error::Invalid(format!(
                "cost coefficient must be finite and >= 0, got {coefficient}"
            )));
        }
        if !(exponent >= 0.0 && exponent.is_finite()) {
            return Err(Error::Invalid(format!(
                "cost exponent must be finite and >= 0, got {exponent}"
            )));
        }
        Ok(Self {
            coefficient,
            exponent,
        })
    }

    pub fn constant(a: f64) -> Self {
        Self {
            coefficient: a,
            exponent: 0.0,
        }
    }

    pub fn linear(a: f64) -> Self {
        Self {
            coefficient: a,
            exponent: 1.0,
        }
    }

    pub fn quadratic(a: f64) -> Self {
        Self {
            coefficient: a,
            exponent: 2.0,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.exponent == 0.0
    }

    /// Cost of an attack with success rate `p`.
    pub fn eval(&self, p: f64) -> f64 {
        eval_cost(self, p)
    }
}

/// Evaluates `a * p^k`; a constant model returns `a` even at `p = 0`.
pub fn eval_cost(model: &CostModel, p: f64) -> f64 {
    if model.exponent == 0.0 {
        model.coefficient
    } else if model.exponent == 1.0 {
        model.coefficient * p
    } else {
        model.coefficient * p.powf(model.exponent)
    }
}

/// When the attack cost is paid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum CostTiming {
    /// Every attacking round pays the cost.
    #[default]
    Recurring,
    /// The cost is paid once, in the round of a player's first attack.
    OneTimeFixed,
}

/// Symmetric two-player game.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GameParams {
    pub p: f64,
    pub cost: CostModel,
    pub beta: f64,
    pub cost_timing: CostTiming,
}

impl GameParams {
    /// Recurring-cost game. `beta = 1` is allowed as the no-degradation edge case.
    pub fn new(p: f64, cost: CostModel, beta: f64) -> Result<Self> {
        check_unit("p", p)?;
        check_unit("beta", beta)?;
        let cost = CostModel::new(cost.coefficient, cost.exponent)?;
        Ok(Self {
            p,
            cost,
            beta,
            cost_timing: CostTiming::Recurring,
        })
    }

    pub fn one_time(p: f64, cost: CostModel, beta: f64) -> Result<Self> {
        Ok(Self::new(p, cost, beta)?.with_timing(CostTiming::OneTimeFixed))
    }

    pub fn with_timing(mut self, timing: CostTiming) -> Self {
        self.cost_timing = timing;
        self
    }

    /// Same game with a different success rate; the cost model is re-evaluated at the new `p`.
    pub fn with_p(mut self, p: f64) -> Self {
        self.p = p;
        self
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta = beta;
        self
    }

    pub fn cost_value(&self) -> f64 {
        eval_cost(&self.cost, self.p)
    }
}

/// One-shot expected payoffs from one player's perspective.
///
/// `r`: both cooperate, `t`: lone attacker, `s`: attacked cooperator,
/// `q`: both attack.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PayoffMatrix {
    pub r: f64,
    pub t: f64,
    pub s: f64,
    pub q: f64,
}

/// Expected stage payoffs of the symmetric game.
///
/// The matrix is the same for both cost timings; under one-time cost the
/// charge applies only in a player's first attacking round, which the value
/// functions and the simulator account for.
pub fn stage_payoffs(params: &GameParams) -> PayoffMatrix {
    let p = params.p;
    let c = params.cost_value();
    PayoffMatrix {
        r: 0.5,
        t: p + (1.0 - p) / 2.0 - c,
        s: (1.0 - p) / 2.0,
        q: p * p * (params.beta / 2.0) + p * (1.0 - p) + (1.0 - p) * (1.0 - p) / 2.0 - c,
    }
}

/// A player in an asymmetric game.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlayerProfile {
    pub p: f64,
    pub cost: CostModel,
    pub delta: f64,
}

impl PlayerProfile {
    pub fn new(p: f64, cost: CostModel, delta: f64) -> Result<Self> {
        check_unit("p", p)?;
        check_discount(delta)?;
        let cost = CostModel::new(cost.coefficient, cost.exponent)?;
        Ok(Self { p, cost, delta })
    }

    pub fn cost_value(&self) -> f64 {
        eval_cost(&self.cost, self.p)
    }
}

/// Stage payoffs when the players differ in success rate and cost.
///
/// Returns `(player 1 matrix, player 2 matrix)`. A player's sucker payoff
/// depends on the opponent's success rate only.
pub fn stage_payoffs_asymmetric(
    p1: &PlayerProfile,
    p2: &PlayerProfile,
    beta: f64,
) -> Result<(PayoffMatrix, PayoffMatrix)> {
    check_unit("beta", beta)?;
    let one = |me: &PlayerProfile, other: &PlayerProfile| {
        let (pi, pj, ci) = (me.p, other.p, me.cost_value());
        PayoffMatrix {
            r: 0.5,
            t: pi + (1.0 - pi) / 2.0 - ci,
            s: (1.0 - pj) / 2.0,
            q: pi * pj * (beta / 2.0) + pi * (1.0 - pj) + (1.0 - pi) * (1.0 - pj) / 2.0 - ci,
        }
    };
    Ok((one(p1, p2), one(p2, p1)))
}

/// One of the three strict inequalities of the dilemma `T > R > Q > S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderingPair {
    TemptationOverReward,
    RewardOverPunishment,
    PunishmentOverSucker,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderingReport {
    pub holds: bool,
    pub violated_pairs: Vec<OrderingPair>,
    /// `p/2 + (beta - 1) p^2 / 2`; costs below it give `Q > S`.
    pub analytic_bound: f64,
    pub cost: f64,
    pub cost_below_analytic_bound: bool,
    /// `c < p/2`, equivalent to `T > R`.
    pub cost_below_half_p: bool,
}

/// Checks whether `matrix` has prisoner's-dilemma ordering.
///
/// Violations are reported, not rejected: threshold formulas stay evaluable
/// outside the dilemma regime.
pub fn check_pd_ordering(matrix: &PayoffMatrix, params: &GameParams) -> OrderingReport {
    let p = params.p;
    let c = params.cost_value();
    let mut violated = Vec::new();
    if !(matrix.t > matrix.r) {
        violated.push(OrderingPair::TemptationOverReward);
    }
    if !(matrix.r > matrix.q) {
        violated.push(OrderingPair::RewardOverPunishment);
    }
    if !(matrix.q > matrix.s) {
        violated.push(OrderingPair::PunishmentOverSucker);
    }
    let analytic_bound = p / 2.0 + (params.beta - 1.0) * p * p / 2.0;
    OrderingReport {
        holds: violated.is_empty(),
        violated_pairs: violated,
        analytic_bound,
        cost: c,
        cost_below_analytic_bound: c < analytic_bound,
        cost_below_half_p: c < p / 2.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TOL: f64 = 1e-9;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= TOL
    }

    #[test]
    fn cost_forms() {
        assert_eq!(eval_cost(&CostModel::constant(0.1), 0.7), 0.1);
        assert_eq!(eval_cost(&CostModel::constant(0.1), 0.0), 0.1);
        assert!(close(eval_cost(&CostModel::linear(0.1), 0.5), 0.05));
        let quad = eval_cost(&CostModel::quadratic(0.1), 0.5);
        assert!(close(quad, 0.025));
        // independent route: repeated multiplication
        assert!(close(quad, 0.1 * 0.5 * 0.5));
        assert!(close(
            eval_cost(&CostModel::new(0.2, 3.0).unwrap(), 0.5),
            0.2 * 0.125
        ));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(CostModel::new(-0.1, 0.0).is_err());
        assert!(CostModel::new(0.1, -1.0).is_err());
        assert!(GameParams::new(1.2, CostModel::constant(0.1), 0.4).is_err());
        assert!(GameParams::new(0.5, CostModel::constant(0.1), -0.1).is_err());
        assert!(GameParams::new(f64::NAN, CostModel::constant(0.1), 0.4).is_err());
        assert!(PlayerProfile::new(0.5, CostModel::constant(0.1), 1.0).is_err());
    }

    #[test]
    fn table_values() {
        let m = stage_payoffs(&GameParams::new(0.5, CostModel::constant(0.1), 0.4).unwrap());
        assert_eq!(m.r, 0.5);
        assert!(close(m.t, 0.65));
        assert!(close(m.s, 0.25));
        assert!(close(m.q, 0.325));

        let m = stage_payoffs(&GameParams::new(0.0, CostModel::constant(0.0), 0.3).unwrap());
        for v in [m.r, m.t, m.s, m.q] {
            assert!(close(v, 0.5));
        }

        let m = stage_payoffs(&GameParams::new(1.0, CostModel::constant(0.0), 1.0).unwrap());
        assert!(close(m.t, 1.0));
        assert!(close(m.s, 0.0));
        assert!(close(m.q, 0.5));
    }

    #[test]
    fn one_time_matrix_unchanged() {
        let rec = GameParams::new(0.5, CostModel::constant(0.1), 0.4).unwrap();
        let one = rec.with_timing(CostTiming::OneTimeFixed);
        assert_eq!(stage_payoffs(&rec), stage_payoffs(&one));
    }

    #[test]
    fn asymmetric_values() {
        let a = PlayerProfile::new(0.3, CostModel::constant(0.1), 0.9).unwrap();
        let b = PlayerProfile::new(0.7, CostModel::constant(0.1), 0.9).unwrap();
        let (m1, m2) = stage_payoffs_asymmetric(&a, &b, 0.4).unwrap();
        assert!(close(m1.t, 0.55));
        assert!(close(m1.s, 0.15));
        assert!(close(m1.q, 0.137));
        assert!(close(m2.t, 0.75));
        assert!(close(m2.s, 0.35));
        assert!(close(m2.q, 0.537));

        let a = PlayerProfile::new(0.0, CostModel::constant(0.0), 0.5).unwrap();
        let b = PlayerProfile::new(1.0, CostModel::constant(0.0), 0.5).unwrap();
        let (m1, m2) = stage_payoffs_asymmetric(&a, &b, 0.4).unwrap();
        assert!(close(m1.s, 0.0));
        assert!(close(m2.t, 1.0));
        assert!(close(m1.q, 0.0));
        assert!(close(m2.q, 1.0));
    }

    #[test]
    fn ordering_examples() {
        let g = GameParams::new(0.5, CostModel::constant(0.1), 0.4).unwrap();
        let r = check_pd_ordering(&stage_payoffs(&g), &g);
        assert!(r.holds);
        assert!(close(r.analytic_bound, 0.175));
        assert!(r.cost_below_analytic_bound && r.cost_below_half_p);

        let g = GameParams::new(0.5, CostModel::constant(0.3), 0.4).unwrap();
        let m = stage_payoffs(&g);
        let r = check_pd_ordering(&m, &g);
        assert!(!r.holds);
        assert!(close(m.t, 0.45));
        assert!(r
            .violated_pairs
            .contains(&OrderingPair::TemptationOverReward));

        let g = GameParams::new(0.0, CostModel::constant(0.05), 0.7).unwrap();
        let r = check_pd_ordering(&stage_payoffs(&g), &g);
        assert!(!r.holds);
        assert!(r
            .violated_pairs
            .contains(&OrderingPair::TemptationOverReward));
    }

    fn arb_params() -> impl Strategy<Value = GameParams> {
        (0.0..=1.0f64, 0.0..0.5f64, 0u8..3, 0.0..=1.0f64).prop_map(|(p, a, k, beta)| {
            GameParams::new(p, CostModel::new(a, f64::from(k)).unwrap(), beta).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn temptation_minus_punishment_is_cost_free(g in arb_params()) {
            let m = stage_payoffs(&g);
            let expected = g.p / 2.0 + g.p * g.p * (1.0 - g.beta) / 2.0;
            prop_assert!((m.t - m.q - expected).abs() <= 1e-12);
            prop_assert!(m.t - m.q >= -1e-12);
        }

        #[test]
        fn payoffs_bounded(g in arb_params()) {
            let m = stage_payoffs(&g);
            let c = g.cost_value();
            for v in [m.r, m.t, m.s, m.q] {
                prop_assert!(v >= -c - 1e-12 && v <= 1.0 + 1e-12);
            }
            prop_assert!(m.s >= 0.0);
        }

        #[test]
        fn punishment_over_sucker_iff_bound(g in arb_params()) {
            let r = check_pd_ordering(&stage_payoffs(&g), &g);
            let m = stage_payoffs(&g);
            // skip draws that sit on the boundary within rounding
            prop_assume!((g.cost_value() - r.analytic_bound).abs() > 1e-12);
            prop_assert_eq!(m.q > m.s, r.cost_below_analytic_bound);
        }

        #[test]
        fn asymmetric_reduces_to_symmetric(g in arb_params(), delta in 0.0..0.99f64) {
            let prof = PlayerProfile::new(g.p, g.cost, delta).unwrap();
            let (m1, m2) = stage_payoffs_asymmetric(&prof, &prof, g.beta).unwrap();
            let m = stage_payoffs(&g);
            prop_assert_eq!(m1, m);
            prop_assert_eq!(m2, m);
        }
    }
}
