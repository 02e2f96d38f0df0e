//! N sellers, M of whom attack.
//!
//! Successful attackers split the market equally; if nobody succeeds the
//! market is split among all N; if all N attack and all succeed, the N share a
//! degraded market `beta`.
//!
//! Two readings of the temptation and mutual-defection payoffs are offered:
//!
//! * [`MultiMode::AsWritten`] sums `C(M, k) p^k (1-p)^(M-k) / k` over the
//!   number of successes `k`, the published form.
//! * [`MultiMode::PerPlayer`] is the expected payoff of one particular
//!   attacker, who must be among the `k` successes: `C(M-1, k-1)` in place of
//!   `C(M, k)`. It reduces exactly to the two-player table.
//!
//! The two agree on `T` only when `M = 1` and never agree on `Q`.

use serde::{Deserialize, Serialize};
use statrs::function::factorial::ln_binomial;

use crate::error::{check_unit, Error, Result};
use crate::game::{eval_cost, CostModel};
use crate::thresholds::{RepeatedStrategy, ThresholdReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum MultiMode {
    #[default]
    AsWritten,
    PerPlayer,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultiParams {
    pub n: usize,
    pub m: usize,
    pub p: f64,
    pub cost: CostModel,
    pub beta: f64,
    pub mode: MultiMode,
}

impl MultiParams {
    pub fn new(
        n: usize,
        m: usize,
        p: f64,
        cost: CostModel,
        beta: f64,
        mode: MultiMode,
    ) -> Result<Self> {
        let mp = Self {
            n,
            m,
            p,
            cost,
            beta,
            mode,
        };
        mp.validate()?;
        Ok(mp)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 || self.m < 1 || self.m >= self.n {
            return Err(Error::PlayerCount {
                n: self.n,
                m: self.m,
            });
        }
        check_unit("p", self.p)?;
        check_unit("beta", self.beta)?;
        CostModel::new(self.cost.coefficient, self.cost.exponent)?;
        Ok(())
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = m;
        self
    }

    pub fn with_mode(mut self, mode: MultiMode) -> Self {
        self.mode = mode;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultiPayoffs {
    pub r: f64,
    pub t: f64,
    pub s: f64,
    pub q: f64,
}

/// `C(n, k) p^k (1-p)^(n-k)`, evaluated in log space.
pub fn binomial_pmf(n: u64, k: u64, p: f64) -> f64 {
    if k > n {
        return 0.0;
    }
    if p == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    if p == 1.0 {
        return if k == n { 1.0 } else { 0.0 };
    }
    let ln = ln_binomial(n, k) + k as f64 * p.ln() + (n - k) as f64 * (-p).ln_1p();
    ln.exp()
}

/// Neumaier-compensated sum, largest magnitudes first.
fn stable_sum(mut terms: Vec<f64>) -> f64 {
    terms.sort_by(|a, b| b.abs().total_cmp(&a.abs()));
    let mut sum = 0.0;
    let mut comp = 0.0;
    for x in terms {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Expected share of one attacker among `attackers` when success counts
/// `1..=max_k` are split equally. `max_k < attackers` drops the all-succeed case.
fn success_share(attackers: usize, max_k: usize, p: f64, mode: MultiMode) -> f64 {
    let terms = (1..=max_k)
        .map(|k| {
            let w = match mode {
                MultiMode::AsWritten => binomial_pmf(attackers as u64, k as u64, p),
                MultiMode::PerPlayer => p * binomial_pmf(attackers as u64 - 1, k as u64 - 1, p),
            };
            w / k as f64
        })
        .collect();
    stable_sum(terms)
}

/// `R`, `T`, `S`, `Q` of the N-player game in the requested mode.
pub fn multi_stage_payoffs(mp: &MultiParams) -> Result<MultiPayoffs> {
    mp.validate()?;
    let n = mp.n as f64;
    let p = mp.p;
    let c = eval_cost(&mp.cost, p);
    let none_m = (1.0 - p).powi(mp.m as i32);
    let none_n = (1.0 - p).powi(mp.n as i32);
    let all_n = p.powi(mp.n as i32);
    Ok(MultiPayoffs {
        r: 1.0 / n,
        t: success_share(mp.m, mp.m, p, mp.mode) + none_m / n - c,
        s: none_m / n,
        q: success_share(mp.n, mp.n - 1, p, mp.mode) + all_n * mp.beta / n + none_n / n - c,
    })
}

/// Both readings side by side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeDiscrepancy {
    pub as_written: MultiPayoffs,
    pub per_player: MultiPayoffs,
    pub t_gap: f64,
    pub q_gap: f64,
}

pub fn mode_discrepancy(mp: &MultiParams) -> Result<ModeDiscrepancy> {
    let a = multi_stage_payoffs(&mp.with_mode(MultiMode::AsWritten))?;
    let b = multi_stage_payoffs(&mp.with_mode(MultiMode::PerPlayer))?;
    Ok(ModeDiscrepancy {
        as_written: a,
        per_player: b,
        t_gap: a.t - b.t,
        q_gap: a.q - b.q,
    })
}

/// Grim: `(T - R) / (T - Q)`; tit-for-tat: `(T - R) / (R - S)`.
pub fn multi_delta_star(mp: &MultiParams, strategy: RepeatedStrategy) -> Result<ThresholdReport> {
    let pay = multi_stage_payoffs(mp)?;
    let num = pay.t - pay.r;
    let den = match strategy {
        RepeatedStrategy::Grim => pay.t - pay.q,
        RepeatedStrategy::TitForTat => pay.r - pay.s,
    };
    Ok(ThresholdReport::from_linear(num, den))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultiTrend {
    /// `(M, delta*)` for `M = 1..N-1`.
    pub points: Vec<(usize, f64)>,
    /// `delta*` strictly decreasing over `M >= ceil(N/2)`.
    pub tail_monotone_decreasing: bool,
}

/// `delta*` as a function of the number of attackers.
pub fn multi_trend(
    n: usize,
    p: f64,
    cost: CostModel,
    beta: f64,
    strategy: RepeatedStrategy,
    mode: MultiMode,
) -> Result<MultiTrend> {
    if n < 3 {
        return Err(Error::PlayerCount { n, m: 1 });
    }
    let base = MultiParams::new(n, 1, p, cost, beta, mode)?;
    let points = (1..n)
        .map(|m| Ok((m, multi_delta_star(&base.with_m(m), strategy)?.delta_star)))
        .collect::<Result<Vec<_>>>()?;
    let tail_start = n.div_ceil(2);
    let tail: Vec<f64> = points
        .iter()
        .filter(|(m, _)| *m >= tail_start)
        .map(|&(_, d)| d)
        .collect();
    let tail_monotone_decreasing = tail.windows(2).all(|w| w[1] < w[0]);
    Ok(MultiTrend {
        points,
        tail_monotone_decreasing,
    })
}
