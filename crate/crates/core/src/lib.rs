//! Repeated-game analysis of ranking-manipulation attacks between competing
//! LLM search engines.
//!
//! Two (or more) engines either stay honest or pay to inject content that
//! pushes their own results up a shared ranking. The crate computes stage
//! payoffs, the discount thresholds above which trigger strategies sustain
//! honesty, discounted values of defection paths, cooperation regions over the
//! `(p, delta)` plane, and a seeded Monte Carlo simulator that checks the
//! closed forms.
//!
//! ```
//! use ranklash::{delta_star_grim, CostModel, GameParams, Regime};
//!
//! let params = GameParams::new(0.5, CostModel::constant(0.1), 0.4).unwrap();
//! let th = delta_star_grim(&params).unwrap();
//! assert!((th.delta_star - 0.3 / 0.65).abs() < 1e-12);
//! assert_eq!(th.regime, Regime::Interior);
//! ```

// `!(x > y)` comparisons are deliberate: they treat NaN as a violation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod export;
pub mod game;
pub mod multiplayer;
pub mod numeric;
pub mod parallel;
pub mod simulator;
pub mod sweep;
pub mod thresholds;
pub mod value;

pub use error::{Error, Result};
pub use game::{
    check_pd_ordering, eval_cost, stage_payoffs, stage_payoffs_asymmetric, CostModel, CostTiming,
    GameParams, OrderingPair, OrderingReport, PayoffMatrix, PlayerProfile,
};
pub use multiplayer::{
    binomial_pmf, mode_discrepancy, multi_delta_star, multi_stage_payoffs, multi_trend,
    ModeDiscrepancy, MultiMode, MultiParams, MultiPayoffs, MultiTrend,
};
pub use simulator::{
    analytic_pair_value, estimate_values, run_episode, sample_multi_stage, Action, SimConfig,
    SimReport, StageGame, StrategyAutomaton, StrategyKind,
};
pub use sweep::{
    boundary_extract, region_area, region_sweep, Axis, BoundaryPoint, RegionGrid, SweepSpec,
    SweepStrategy,
};
pub use thresholds::{
    cost_conditions_by_discount, cost_threshold_grim, cost_threshold_tft, delta_star_grim,
    delta_star_one_time, delta_star_tft, monotonicity_probe, tft_k_classify, thresholds_asymmetric,
    AsymmetricThresholds, DefectionLength, ProbeVariable, Regime, RepeatedStrategy, TftKClass,
    ThresholdReport,
};
pub use value::{
    defection_curve, futile_defense, peak_defection, v_cooperate, v_defect, CurveSample,
    DefectionPattern, DefectionPeak, FutileReport,
};
