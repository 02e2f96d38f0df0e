//! Stochastic repeated-game engine and the exact path evaluator used as its oracle.
//!
//! Strategies see the opponent's *actions* at the end of each round, never
//! whether an attack succeeded. Joint action paths are therefore deterministic
//! and only the market outcomes are random.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_discount, check_unit, Error, Result};
use crate::game::{
    eval_cost, stage_payoffs, stage_payoffs_asymmetric, CostModel, CostTiming, GameParams,
    PayoffMatrix, PlayerProfile,
};
use crate::multiplayer::MultiParams;
use crate::parallel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Action {
    Cooperate,
    Attack,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StrategyKind {
    AllCooperate,
    AllDefect,
    GrimTrigger,
    TitForTat {
        initial: Action,
    },
    /// Attack for the first `k` rounds, cooperate afterwards.
    DefectKThenCooperate {
        k: u32,
    },
}

/// A strategy plus the slice of opponent history it needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StrategyAutomaton {
    kind: StrategyKind,
    triggered: bool,
    last_seen: Option<Action>,
    // saturates at k so that the joint state eventually cycles
    rounds: u32,
}

impl StrategyAutomaton {
    pub fn new(kind: StrategyKind) -> Self {
        Self {
            kind,
            triggered: false,
            last_seen: None,
            rounds: 0,
        }
    }

    pub fn kind(&self) -> StrategyKind {
        self.kind
    }

    pub fn action(&self) -> Action {
        match self.kind {
            StrategyKind::AllCooperate => Action::Cooperate,
            StrategyKind::AllDefect => Action::Attack,
            StrategyKind::GrimTrigger => {
                if self.triggered {
                    Action::Attack
                } else {
                    Action::Cooperate
                }
            }
            StrategyKind::TitForTat { initial } => self.last_seen.unwrap_or(initial),
            StrategyKind::DefectKThenCooperate { k } => {
                if self.rounds < k {
                    Action::Attack
                } else {
                    Action::Cooperate
                }
            }
        }
    }

    /// Records the opponent's action for the round just played.
    pub fn observe(&mut self, opponent: Action) {
        match self.kind {
            StrategyKind::GrimTrigger => self.triggered |= opponent == Action::Attack,
            StrategyKind::TitForTat { .. } => self.last_seen = Some(opponent),
            StrategyKind::DefectKThenCooperate { k } => self.rounds = (self.rounds + 1).min(k),
            StrategyKind::AllCooperate | StrategyKind::AllDefect => {}
        }
    }
}

/// Per-player attack technology inside a two-player stage game.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Attacker {
    pub p: f64,
    pub cost: f64,
    pub timing: CostTiming,
}

/// The two players' attack parameters plus the degradation factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StageGame {
    pub players: [Attacker; 2],
    pub beta: f64,
    matrices: [PayoffMatrix; 2],
}

impl StageGame {
    pub fn symmetric(params: &GameParams) -> Self {
        let a = Attacker {
            p: params.p,
            cost: params.cost_value(),
            timing: params.cost_timing,
        };
        let m = stage_payoffs(params);
        Self {
            players: [a, a],
            beta: params.beta,
            matrices: [m, m],
        }
    }

    /// Players with their own success rate and cost; recurring costs.
    pub fn asymmetric(p1: &PlayerProfile, p2: &PlayerProfile, beta: f64) -> Result<Self> {
        let (m1, m2) = stage_payoffs_asymmetric(p1, p2, beta)?;
        let at = |pr: &PlayerProfile| Attacker {
            p: pr.p,
            cost: pr.cost_value(),
            timing: CostTiming::Recurring,
        };
        Ok(Self {
            players: [at(p1), at(p2)],
            beta,
            matrices: [m1, m2],
        })
    }

    fn max_cost(&self) -> f64 {
        self.players[0].cost.max(self.players[1].cost)
    }

    fn charges(&self, i: usize, already_paid: bool) -> bool {
        match self.players[i].timing {
            CostTiming::Recurring => true,
            CostTiming::OneTimeFixed => !already_paid,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StageOutcome {
    pub actions: [Action; 2],
    pub successes: [bool; 2],
    pub payoffs: [f64; 2],
    /// Cost actually charged this round.
    pub costs: [f64; 2],
}

/// Market split of one round given actions and the attackers' success draws.
///
/// `draws[i]` must be `Some` exactly when player `i` attacks. `already_paid[i]`
/// matters only under one-time cost timing.
pub fn resolve_stage(
    game: &StageGame,
    actions: [Action; 2],
    draws: [Option<bool>; 2],
    already_paid: [bool; 2],
) -> Result<StageOutcome> {
    let mut successes = [false; 2];
    for i in 0..2 {
        match (actions[i], draws[i]) {
            (Action::Cooperate, Some(_)) => return Err(Error::DrawForCooperator(i + 1)),
            (Action::Attack, None) => return Err(Error::MissingDraw(i + 1)),
            (Action::Attack, Some(s)) => successes[i] = s,
            (Action::Cooperate, None) => {}
        }
    }
    let market = match successes {
        [true, true] => [game.beta / 2.0, game.beta / 2.0],
        [true, false] => [1.0, 0.0],
        [false, true] => [0.0, 1.0],
        [false, false] => [0.5, 0.5],
    };
    let mut costs = [0.0; 2];
    for i in 0..2 {
        if actions[i] == Action::Attack && game.charges(i, already_paid[i]) {
            costs[i] = game.players[i].cost;
        }
    }
    Ok(StageOutcome {
        actions,
        successes,
        payoffs: [market[0] - costs[0], market[1] - costs[1]],
        costs,
    })
}

pub const DEFAULT_HORIZON_EPSILON: f64 = 1e-9;
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub game: StageGame,
    pub delta: f64,
    pub episodes: u64,
    pub horizon_epsilon: f64,
    pub master_seed: u64,
}

impl SimConfig {
    pub fn new(game: StageGame, delta: f64, episodes: u64, master_seed: u64) -> Result<Self> {
        check_discount(delta)?;
        if episodes == 0 {
            return Err(Error::NoEpisodes);
        }
        Ok(Self {
            game,
            delta,
            episodes,
            horizon_epsilon: DEFAULT_HORIZON_EPSILON,
            master_seed,
        })
    }

    pub fn with_horizon_epsilon(mut self, eps: f64) -> Self {
        self.horizon_epsilon = eps;
        self
    }

    /// Rounds played per episode: `ceil(ln(eps / (1 + c_max)) / ln delta)`.
    pub fn horizon(&self) -> u64 {
        if self.delta == 0.0 {
            return 1;
        }
        let target = self.horizon_epsilon / (1.0 + self.game.max_cost());
        let t = (target.ln() / self.delta.ln()).ceil();
        (t.max(1.0)) as u64
    }
}

/// Discounted payoffs of one episode plus the undiscounted cost each player paid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpisodeTrace {
    pub payoffs: [f64; 2],
    pub total_cost: [f64; 2],
    pub attacks: [u64; 2],
}

/// Plays one episode; success draws come from a ChaCha stream keyed by
/// `(master_seed, episode_index)` with a fixed position per `(round, player)`.
pub fn run_episode_traced(
    s1: StrategyKind,
    s2: StrategyKind,
    config: &SimConfig,
    episode_index: u64,
) -> EpisodeTrace {
    let mut rng = ChaCha8Rng::seed_from_u64(config.master_seed);
    rng.set_stream(episode_index);
    let mut autos = [StrategyAutomaton::new(s1), StrategyAutomaton::new(s2)];
    let mut paid = [false; 2];
    let mut trace = EpisodeTrace {
        payoffs: [0.0; 2],
        total_cost: [0.0; 2],
        attacks: [0; 2],
    };
    let mut weight = 1.0;
    for _ in 0..config.horizon() {
        let actions = [autos[0].action(), autos[1].action()];
        // both uniforms are consumed every round so positions stay fixed
        let u: [f64; 2] = [rng.gen(), rng.gen()];
        let mut draws = [None; 2];
        for i in 0..2 {
            if actions[i] == Action::Attack {
                draws[i] = Some(u[i] < config.game.players[i].p);
            }
        }
        let out = resolve_stage(&config.game, actions, draws, paid)
            .expect("draws supplied exactly for attackers");
        for i in 0..2 {
            trace.payoffs[i] += weight * out.payoffs[i];
            trace.total_cost[i] += out.costs[i];
            if actions[i] == Action::Attack {
                paid[i] = true;
                trace.attacks[i] += 1;
            }
        }
        autos[0].observe(actions[1]);
        autos[1].observe(actions[0]);
        weight *= config.delta;
    }
    trace
}

pub fn run_episode(
    s1: StrategyKind,
    s2: StrategyKind,
    config: &SimConfig,
    episode_index: u64,
) -> [f64; 2] {
    run_episode_traced(s1, s2, config, episode_index).payoffs
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimReport {
    pub mean: [f64; 2],
    pub std_error: [f64; 2],
    pub episodes: u64,
    pub horizon: u64,
    pub seed: u64,
}

/// Running mean and sum of squared deviations (Welford), mergeable with Chan's rule.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Moments {
    n: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    pub(crate) fn push(&mut self, x: f64) {
        self.n += 1;
        let d = x - self.mean;
        self.mean += d / self.n as f64;
        self.m2 += d * (x - self.mean);
    }

    pub(crate) fn merge(self, other: Self) -> Self {
        if self.n == 0 {
            return other;
        }
        if other.n == 0 {
            return self;
        }
        let n = self.n + other.n;
        let d = other.mean - self.mean;
        Self {
            n,
            mean: self.mean + d * other.n as f64 / n as f64,
            m2: self.m2 + other.m2 + d * d * self.n as f64 * other.n as f64 / n as f64,
        }
    }

    pub(crate) fn mean(&self) -> f64 {
        self.mean
    }

    /// Sample standard deviation over `sqrt(n)`.
    pub(crate) fn std_error(&self) -> f64 {
        if self.n < 2 {
            return 0.0;
        }
        (self.m2 / (self.n - 1) as f64).sqrt() / (self.n as f64).sqrt()
    }
}

// Fixed work partition: the merge order never depends on the thread count.
pub(crate) const CHUNK: u64 = 1024;

/// Monte Carlo means and standard errors of both players' discounted payoffs.
///
/// Bit-identical for a fixed seed whatever the worker count.
pub fn estimate_values(
    s1: StrategyKind,
    s2: StrategyKind,
    config: &SimConfig,
) -> Result<SimReport> {
    if config.episodes == 0 {
        return Err(Error::NoEpisodes);
    }
    let chunks = config.episodes.div_ceil(CHUNK);
    let partials: Vec<[Moments; 2]> = parallel::install(|| {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut m = [Moments::default(); 2];
                let end = ((c + 1) * CHUNK).min(config.episodes);
                for e in c * CHUNK..end {
                    let v = run_episode(s1, s2, config, e);
                    m[0].push(v[0]);
                    m[1].push(v[1]);
                }
                m
            })
            .collect()
    });
    let total = partials
        .into_iter()
        .fold([Moments::default(); 2], |acc, m| {
            [acc[0].merge(m[0]), acc[1].merge(m[1])]
        });
    Ok(SimReport {
        mean: [total[0].mean(), total[1].mean()],
        std_error: [total[0].std_error(), total[1].std_error()],
        episodes: config.episodes,
        horizon: config.horizon(),
        seed: config.master_seed,
    })
}

/// Exact expected discounted payoffs of a strategy pair.
///
/// The joint automaton state (including who has already paid a one-time
/// cost) is finite, so the action path enters a cycle; the prefix is summed
/// directly and the cycle in closed form.
pub fn analytic_pair_value(
    s1: StrategyKind,
    s2: StrategyKind,
    game: &StageGame,
    delta: f64,
) -> Result<[f64; 2]> {
    check_discount(delta)?;
    type Joint = ([StrategyAutomaton; 2], [bool; 2]);
    let mut autos = [StrategyAutomaton::new(s1), StrategyAutomaton::new(s2)];
    let mut paid = [false; 2];
    let mut seen: Vec<Joint> = Vec::new();
    let mut rewards: Vec<[f64; 2]> = Vec::new();
    let cycle_start = loop {
        let state = (autos, paid);
        if let Some(pos) = seen.iter().position(|s| *s == state) {
            break pos;
        }
        seen.push(state);
        let actions = [autos[0].action(), autos[1].action()];
        rewards.push(expected_stage(game, actions, paid));
        for i in 0..2 {
            if actions[i] == Action::Attack {
                paid[i] = true;
            }
        }
        autos[0].observe(actions[1]);
        autos[1].observe(actions[0]);
    };

    let mut out = [0.0; 2];
    let mut w = 1.0;
    for r in &rewards[..cycle_start] {
        out[0] += w * r[0];
        out[1] += w * r[1];
        w *= delta;
    }
    let start_weight = w;
    let mut cyc = [0.0; 2];
    let mut cw = 1.0;
    for r in &rewards[cycle_start..] {
        cyc[0] += cw * r[0];
        cyc[1] += cw * r[1];
        cw *= delta;
    }
    // cw == delta^cycle_len
    for i in 0..2 {
        out[i] += start_weight * cyc[i] / (1.0 - cw);
    }
    Ok(out)
}

/// Expected stage payoffs for an action pair, from the payoff tables.
fn expected_stage(game: &StageGame, actions: [Action; 2], paid: [bool; 2]) -> [f64; 2] {
    let mut out = [0.0; 2];
    for i in 0..2 {
        let j = 1 - i;
        let m = &game.matrices[i];
        out[i] = match (actions[i], actions[j]) {
            (Action::Cooperate, Action::Cooperate) => m.r,
            (Action::Attack, Action::Cooperate) => m.t,
            (Action::Cooperate, Action::Attack) => m.s,
            (Action::Attack, Action::Attack) => m.q,
        };
        // tables carry the cost in every attacking round; refund uncharged rounds
        if actions[i] == Action::Attack && !game.charges(i, paid[i]) {
            out[i] += game.players[i].cost;
        }
    }
    out
}

/// Sampled per-player stage payoffs of the N-player game.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultiStageEstimate {
    pub t: (f64, f64),
    pub s: (f64, f64),
    pub q: (f64, f64),
    pub samples: u64,
}

/// Monte Carlo estimate of the per-player `T`, `S` and `Q` of an N-player game
/// (means with standard errors). Player 0 is the focal player.
pub fn sample_multi_stage(mp: &MultiParams, samples: u64, seed: u64) -> Result<MultiStageEstimate> {
    mp.validate()?;
    if samples == 0 {
        return Err(Error::NoEpisodes);
    }
    let (n, m, p) = (mp.n, mp.m, mp.p);
    let c = eval_cost(&mp.cost, p);
    let share = 1.0 / n as f64;
    let chunks = samples.div_ceil(CHUNK);
    let partials: Vec<[Moments; 3]> = parallel::install(|| {
        (0..chunks)
            .into_par_iter()
            .map(|ch| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(ch);
                let mut acc = [Moments::default(); 3];
                let end = ((ch + 1) * CHUNK).min(samples);
                for _ in ch * CHUNK..end {
                    // M attackers against N - M cooperators
                    let focal = rng.gen::<f64>() < p;
                    let mut k = usize::from(focal);
                    for _ in 1..m {
                        k += usize::from(rng.gen::<f64>() < p);
                    }
                    let t = if k == 0 {
                        share
                    } else if focal {
                        1.0 / k as f64
                    } else {
                        0.0
                    };
                    acc[0].push(t - c);
                    acc[1].push(if k == 0 { share } else { 0.0 });

                    // everyone attacks
                    let focal = rng.gen::<f64>() < p;
                    let mut k = usize::from(focal);
                    for _ in 1..n {
                        k += usize::from(rng.gen::<f64>() < p);
                    }
                    let q = if k == n {
                        mp.beta * share
                    } else if k == 0 {
                        share
                    } else if focal {
                        1.0 / k as f64
                    } else {
                        0.0
                    };
                    acc[2].push(q - c);
                }
                acc
            })
            .collect()
    });
    let tot = partials.into_iter().fold([Moments::default(); 3], |a, b| {
        [a[0].merge(b[0]), a[1].merge(b[1]), a[2].merge(b[2])]
    });
    let pair = |m: &Moments| (m.mean(), m.std_error());
    Ok(MultiStageEstimate {
        t: pair(&tot[0]),
        s: pair(&tot[1]),
        q: pair(&tot[2]),
        samples,
    })
}

/// Convenience: symmetric stage game for `(p, cost, beta)`.
pub fn stage_game(p: f64, cost: CostModel, beta: f64, timing: CostTiming) -> Result<StageGame> {
    check_unit("p", p)?;
    Ok(StageGame::symmetric(
        &GameParams::new(p, cost, beta)?.with_timing(timing),
    ))
}
