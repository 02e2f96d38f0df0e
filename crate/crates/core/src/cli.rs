//! Command-line front end.
//!
//! Every subcommand evaluates one analysis and writes it as CSV, JSON or SVG
//! to stdout or to `--output` (atomically). A `--config FILE` of `key = value`
//! lines supplies long flags; flags on the command line win.
//!
//! Exit codes: 0 success, 2 usage error, 3 domain or I/O error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::export::{self, Cell, Format, Table};
use crate::game::{
    check_pd_ordering, stage_payoffs, stage_payoffs_asymmetric, CostModel, CostTiming, GameParams,
    PlayerProfile,
};
use crate::multiplayer::{
    mode_discrepancy, multi_delta_star, multi_stage_payoffs, multi_trend, MultiMode, MultiParams,
};
use crate::simulator::{
    analytic_pair_value, estimate_values, Action, SimConfig, StageGame, StrategyKind,
    DEFAULT_HORIZON_EPSILON, DEFAULT_SEED,
};
use crate::sweep::{region_sweep, Axis, SweepSpec, SweepStrategy, DEFAULT_RESOLUTION};
use crate::thresholds::{
    cost_threshold_grim, cost_threshold_tft, delta_star_grim, delta_star_one_time, delta_star_tft,
    tft_k_classify, thresholds_asymmetric, DefectionLength, RepeatedStrategy, ThresholdReport,
};
use crate::value::{defection_curve, futile_defense, DefectionPattern};

#[derive(Debug, Parser, Serialize)]
#[command(
    name = "ranklash",
    version,
    about = "Repeated-game analysis of ranking-manipulation attacks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Stage payoffs R, T, S, Q
    Payoffs(PayoffsArgs),
    /// Prisoner's-dilemma ordering check
    Ordering(GameOnly),
    /// Critical discount factor
    Threshold(ThresholdArgs),
    /// V(C) and V(D) along p
    Curves(CurvesArgs),
    /// Peak of V(D) and the futile-defense interval
    Futile(FutileArgs),
    /// Cooperation region over the (p, delta) plane
    Region(RegionArgs),
    /// N-player payoffs and thresholds
    Multi(MultiArgs),
    /// N-player threshold as a function of the number of attackers
    MultiTrend(MultiTrendArgs),
    /// Monte Carlo estimate of a strategy pair's discounted values
    Simulate(SimulateArgs),
}

#[derive(Debug, Args, Serialize)]
struct GameArgs {
    /// Attack success rate
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Cost coefficient `a` in `a * p^k`
    #[arg(long, default_value_t = 0.1)]
    cost: f64,
    /// Cost exponent `k` (0 constant, 1 linear, 2 quadratic)
    #[arg(long, default_value_t = 0.0)]
    cost_exp: f64,
    /// Degradation factor when both attacks succeed
    #[arg(long, default_value_t = 0.4)]
    beta: f64,
}

impl GameArgs {
    fn cost_model(&self) -> Result<CostModel, CliError> {
        Ok(CostModel::new(self.cost, self.cost_exp)?)
    }

    fn params(&self) -> Result<GameParams, CliError> {
        Ok(GameParams::new(self.p, self.cost_model()?, self.beta)?)
    }
}

#[derive(Debug, Args, Serialize)]
struct OutArgs {
    /// Output format (default: csv for region and curves, json otherwise)
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Output file; stdout when absent
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum FormatArg {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum TimingArg {
    Recurring,
    OneTime,
}

impl From<TimingArg> for CostTiming {
    fn from(t: TimingArg) -> Self {
        match t {
            TimingArg::Recurring => CostTiming::Recurring,
            TimingArg::OneTime => CostTiming::OneTimeFixed,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum RuleArg {
    Grim,
    Tft,
}

impl From<RuleArg> for RepeatedStrategy {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Grim => RepeatedStrategy::Grim,
            RuleArg::Tft => RepeatedStrategy::TitForTat,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ModeArg {
    AsWritten,
    PerPlayer,
}

impl From<ModeArg> for MultiMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::AsWritten => MultiMode::AsWritten,
            ModeArg::PerPlayer => MultiMode::PerPlayer,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum PatternArg {
    Grim,
    TftSingle,
    TftAlternating,
    TftK,
    OneTime,
}

fn pattern(p: PatternArg, k: u32) -> DefectionPattern {
    match p {
        PatternArg::Grim => DefectionPattern::GrimPath,
        PatternArg::TftSingle => DefectionPattern::TftSingle,
        PatternArg::TftAlternating => DefectionPattern::TftAlternating,
        PatternArg::TftK => DefectionPattern::TftKRounds(k),
        PatternArg::OneTime => DefectionPattern::OneTimeGrimPath,
    }
}

#[derive(Debug, Args, Serialize)]
#[command(allow_negative_numbers = true)]
struct GameOnly {
    #[command(flatten)]
    game: GameArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Args, Serialize)]
#[command(allow_negative_numbers = true)]
struct PayoffsArgs {
    #[command(flatten)]
    game: GameArgs,
    /// Player 2 success rate; switches to the asymmetric table
    #[arg(long)]
    p2: Option<f64>,
    /// Player 2 cost coefficient (defaults to --cost)
    #[arg(long)]
    cost2: Option<f64>,
    /// Player 2 cost exponent (defaults to --cost-exp)
    #[arg(long)]
    cost2_exp: Option<f64>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ThresholdKind {
    Grim,
    Tft,
    TftK,
    OneTime,
    Asym,
}

#[derive(Debug, Args, Serialize)]
#[command(allow_negative_numbers = true)]
struct ThresholdArgs {
    #[arg(long, value_enum)]
    strategy: ThresholdKind,
    #[command(flatten)]
    game: GameArgs,
    /// Discount factor (player 1 for asym); required for tft-k
    #[arg(long)]
    delta: Option<f64>,
    /// asym: player 2 success rate
    #[arg(long)]
    p2: Option<f64>,
    /// asym: player 2 cost coefficient
    #[arg(long)]
    cost2: Option<f64>,
    /// asym: player 2 cost exponent
    #[arg(long)]
    cost2_exp: Option<f64>,
    /// asym: player 2 discount factor
    #[arg(long)]
    delta2: Option<f64>,
    /// asym: punishment rule
    #[arg(long, value_enum, default_value_t = RuleArg::Grim)]
    rule: RuleArg,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Args, Serialize)]
#[command(allow_negative_numbers = true)]
struct CurvesArgs {
    #[command(flatten)]
    game: GameArgs,
    #[arg(long, default_value_t = 0.6)]
    delta: f64,
    #[arg(long, value_enum, default_value_t = PatternArg::Grim)]
    pattern: PatternArg,
    /// Run length for tft-k
    #[arg(long, default_value_t = 2)]
    k: u32,
    /// Evenly spaced p samples over [0, 1]
    #[arg(long, default_value_t = 101)]
    points: usize,
    /// Explicit comma-separated p samples (overrides --points)
    #[arg(long, value_delimiter = ',')]
    p_values: Option<Vec<f64>>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Args, Serialize)]
#[command(allow_negative_numbers = true)]
struct FutileArgs {
    #[command(flatten)]
    game: GameArgs,
    #[arg(long, default_value_t = 0.6)]
    delta: f64,
    #[arg(long, value_enum, default_value_t = PatternArg::Grim)]
    pattern: PatternArg,
    #[arg(long, default_value_t = 2)]
    k: u32,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum RegionStrategy {
    Grim,
    Tft,
    OneTime,
}

#[derive(Debug, Args, Serialize)]
#[command(allow_negative_numbers = true)]
struct RegionArgs {
    #[arg(long, value_enum, default_value_t = RegionStrategy::Grim)]
    strategy: RegionStrategy,
    #[arg(long, default_value_t = 0.1)]
    cost: f64,
    #[arg(long, default_value_t = 0.0)]
    cost_exp: f64,
    #[arg(long, default_value_t = 0.4)]
    beta: f64,
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    p_points: usize,
    #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
    delta_points: usize,
    #[arg(long, default_value_t = 0.0)]
    p_lo: f64,
    #[arg(long, default_value_t = 1.0)]
    p_hi: f64,
    #[arg(long, default_value_t = 0.0)]
    delta_lo: f64,
    #[arg(long, default_value_t = 1.0)]
    delta_hi: f64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Args, Serialize)]
#[command(allow_negative_numbers = true)]
struct MultiArgs {
    /// Number of players
    #[arg(long)]
    n: usize,
    /// Number of attackers
    #[arg(long)]
    m: usize,
    #[command(flatten)]
    game: GameArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::AsWritten)]
    mode: ModeArg,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Args, Serialize)]
#[command(allow_negative_numbers = true)]
struct MultiTrendArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    game: GameArgs,
    #[arg(long, value_enum, default_value_t = RuleArg::Grim)]
    rule: RuleArg,
    #[arg(long, value_enum, default_value_t = ModeArg::AsWritten)]
    mode: ModeArg,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum StrategyArg {
    AllCooperate,
    AllDefect,
    Grim,
    /// Tit-for-tat opening with cooperation
    Tft,
    /// Tit-for-tat opening with an attack
    TftD,
    /// Attack for --k rounds, then cooperate
    DefectK,
}

fn strategy_kind(s: StrategyArg, k: u32) -> StrategyKind {
    match s {
        StrategyArg::AllCooperate => StrategyKind::AllCooperate,
        StrategyArg::AllDefect => StrategyKind::AllDefect,
        StrategyArg::Grim => StrategyKind::GrimTrigger,
        StrategyArg::Tft => StrategyKind::TitForTat {
            initial: Action::Cooperate,
        },
        StrategyArg::TftD => StrategyKind::TitForTat {
            initial: Action::Attack,
        },
        StrategyArg::DefectK => StrategyKind::DefectKThenCooperate { k },
    }
}

#[derive(Debug, Args, Serialize)]
#[command(allow_negative_numbers = true)]
struct SimulateArgs {
    #[arg(long, value_enum)]
    s1: StrategyArg,
    #[arg(long, value_enum)]
    s2: StrategyArg,
    /// Run length of a defect-k player
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[command(flatten)]
    game: GameArgs,
    #[arg(long, default_value_t = 0.6)]
    delta: f64,
    #[arg(long, value_enum, default_value_t = TimingArg::Recurring)]
    timing: TimingArg,
    /// Player 2 success rate (asymmetric game, recurring costs)
    #[arg(long)]
    p2: Option<f64>,
    #[arg(long)]
    cost2: Option<f64>,
    #[arg(long)]
    cost2_exp: Option<f64>,
    #[arg(long, default_value_t = 10_000)]
    episodes: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Truncation tolerance for the episode horizon
    #[arg(long, default_value_t = DEFAULT_HORIZON_EPSILON)]
    horizon_eps: f64,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Domain(format!("i/o: {e}"))
    }
}

/// Result of one subcommand, before serialization.
struct Outcome {
    table: Table,
    /// Extra JSON fields; when present the rows move under `data.rows`.
    summary: Option<serde_json::Map<String, Value>>,
    svg: Option<String>,
    default_format: Format,
    seed: Option<u64>,
}

impl Outcome {
    fn table(table: Table) -> Self {
        Self {
            table,
            summary: None,
            svg: None,
            default_format: Format::Json,
            seed: None,
        }
    }

    fn json_data(&self) -> Value {
        match &self.summary {
            None => self.table.to_json_value(),
            Some(extra) => {
                let mut m = extra.clone();
                let rows = match self.table.to_json_value() {
                    v @ Value::Array(_) => v,
                    v => Value::Array(vec![v]),
                };
                m.insert("rows".into(), rows);
                Value::Object(m)
            }
        }
    }
}

/// Parses `argv` (program name first), runs the subcommand and returns the exit code.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Option<Vec<String>> = argv
        .into_iter()
        .map(|a| a.into().into_string().ok())
        .collect();
    let Some(argv) = argv else {
        eprintln!("error: arguments must be valid UTF-8");
        return 2;
    };
    match run(argv) {
        Ok(()) => 0,
        Err(CliError::Usage(m)) => {
            if !m.is_empty() {
                eprintln!("error: {m}");
            }
            2
        }
        Err(CliError::Domain(m)) => {
            eprintln!("error: {}", m.replace('\n', " "));
            3
        }
    }
}

fn run(argv: Vec<String>) -> Result<(), CliError> {
    let argv = merge_config(argv)?;
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            if code == 0 {
                return Ok(());
            }
            // clap has already printed its diagnostic
            return Err(CliError::Usage(String::new()));
        }
    };
    let out = match &cli.command {
        Command::Payoffs(a) => &a.out,
        Command::Ordering(a) => &a.out,
        Command::Threshold(a) => &a.out,
        Command::Curves(a) => &a.out,
        Command::Futile(a) => &a.out,
        Command::Region(a) => &a.out,
        Command::Multi(a) => &a.out,
        Command::MultiTrend(a) => &a.out,
        Command::Simulate(a) => &a.out,
    };
    let outcome = execute(&cli.command)?;
    let format = match out.format {
        Some(FormatArg::Csv) => Format::Csv,
        Some(FormatArg::Json) => Format::Json,
        Some(FormatArg::Svg) => Format::Svg,
        None => outcome.default_format,
    };
    let text = match format {
        Format::Csv => outcome.table.to_csv(),
        Format::Json => {
            let meta = json!({
                "command": argv.get(1).cloned().unwrap_or_default(),
                "argv": replay_argv(&argv),
                "inputs": serde_json::to_value(&cli.command).unwrap_or(Value::Null),
                "tool_version": env!("CARGO_PKG_VERSION"),
                "seed": outcome.seed,
            });
            export::json_document(meta, outcome.json_data())
        }
        Format::Svg => outcome.svg.clone().ok_or_else(|| {
            CliError::Usage("svg output is only available for region and curves".into())
        })?,
    };
    match &out.output {
        Some(path) => export::write_atomic(path, &text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Arguments (without the program name) that reproduce the result; the
/// output path is dropped.
fn replay_argv(argv: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut it = argv.iter().skip(1);
    while let Some(a) = it.next() {
        if a == "--output" {
            it.next();
        } else if !a.starts_with("--output=") {
            out.push(a.clone());
        }
    }
    out
}

/// Pulls `--config FILE` out of `argv` and appends the file's flags that the
/// command line does not already set.
fn merge_config(argv: Vec<String>) -> Result<Vec<String>, CliError> {
    let mut args = Vec::with_capacity(argv.len());
    let mut config = None;
    let mut it = argv.into_iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            config = Some(
                it.next()
                    .ok_or_else(|| CliError::Usage("--config needs a file path".into()))?,
            );
        } else if let Some(path) = a.strip_prefix("--config=") {
            config = Some(path.to_owned());
        } else {
            args.push(a);
        }
    }
    let Some(path) = config else {
        return Ok(args);
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| CliError::Domain(format!("cannot read config {path}: {e}")))?;
    let mut extra = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .or_else(|| line.split_once(char::is_whitespace))
            .ok_or_else(|| {
                CliError::Usage(format!("{path}:{}: expected `key = value`", lineno + 1))
            })?;
        let key = key.trim().trim_start_matches("--");
        let flag = format!("--{key}");
        let set = args
            .iter()
            .any(|a| *a == flag || a.starts_with(&format!("{flag}=")));
        if !set {
            extra.push(flag);
            extra.push(value.trim().to_owned());
        }
    }
    args.extend(extra);
    Ok(args)
}

fn execute(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Payoffs(a) => payoffs(a),
        Command::Ordering(a) => ordering(a),
        Command::Threshold(a) => threshold(a),
        Command::Curves(a) => curves(a),
        Command::Futile(a) => futile(a),
        Command::Region(a) => region(a),
        Command::Multi(a) => multi(a),
        Command::MultiTrend(a) => trend(a),
        Command::Simulate(a) => simulate(a),
    }
}

fn player2(
    g: &GameArgs,
    p2: f64,
    cost2: Option<f64>,
    exp2: Option<f64>,
    delta: f64,
) -> Result<PlayerProfile, CliError> {
    let model = CostModel::new(cost2.unwrap_or(g.cost), exp2.unwrap_or(g.cost_exp))?;
    Ok(PlayerProfile::new(p2, model, delta)?)
}

fn payoffs(a: &PayoffsArgs) -> Result<Outcome, CliError> {
    let params = a.game.params()?;
    let mut t = Table::new(["player", "r", "t", "s", "q", "cost"]);
    match a.p2 {
        None => {
            let m = stage_payoffs(&params);
            t.push(vec![
                1usize.into(),
                m.r.into(),
                m.t.into(),
                m.s.into(),
                m.q.into(),
                params.cost_value().into(),
            ]);
        }
        Some(p2) => {
            let one = PlayerProfile::new(a.game.p, params.cost, 0.0)?;
            let two = player2(&a.game, p2, a.cost2, a.cost2_exp, 0.0)?;
            let (m1, m2) = stage_payoffs_asymmetric(&one, &two, a.game.beta)?;
            for (i, (m, pr)) in [(m1, one), (m2, two)].into_iter().enumerate() {
                t.push(vec![
                    (i + 1).into(),
                    m.r.into(),
                    m.t.into(),
                    m.s.into(),
                    m.q.into(),
                    pr.cost_value().into(),
                ]);
            }
        }
    }
    Ok(Outcome::table(t))
}

fn ordering(a: &GameOnly) -> Result<Outcome, CliError> {
    let params = a.game.params()?;
    let rep = check_pd_ordering(&stage_payoffs(&params), &params);
    let violated: Vec<String> = rep
        .violated_pairs
        .iter()
        .map(|v| format!("{v:?}"))
        .collect();
    let mut t = Table::new([
        "holds",
        "violated",
        "analytic_bound",
        "cost",
        "cost_below_analytic_bound",
        "cost_below_half_p",
    ]);
    t.push(vec![
        rep.holds.into(),
        violated.join(";").into(),
        rep.analytic_bound.into(),
        rep.cost.into(),
        rep.cost_below_analytic_bound.into(),
        rep.cost_below_half_p.into(),
    ]);
    Ok(Outcome::table(t))
}

fn regime_cell(r: &ThresholdReport) -> Cell {
    format!("{:?}", r.regime).into()
}

fn threshold(a: &ThresholdArgs) -> Result<Outcome, CliError> {
    let params = a.game.params()?;
    let t = match a.strategy {
        ThresholdKind::Grim | ThresholdKind::Tft | ThresholdKind::OneTime => {
            let rep = match a.strategy {
                ThresholdKind::Grim => delta_star_grim(&params)?,
                ThresholdKind::Tft => delta_star_tft(&params)?,
                _ => delta_star_one_time(&params.with_timing(CostTiming::OneTimeFixed))?,
            };
            let mut header = vec!["delta_star", "regime", "inverted"];
            let mut row = vec![
                rep.delta_star.into(),
                regime_cell(&rep),
                rep.inverted.into(),
            ];
            if let Some(d) = a.delta {
                crate::error::check_discount(d)?;
                header.push("sustains");
                row.push(rep.sustains(d).into());
                let ct = match a.strategy {
                    ThresholdKind::Grim => Some(cost_threshold_grim(a.game.p, a.game.beta, d)?),
                    ThresholdKind::Tft => Some(cost_threshold_tft(a.game.p, d)?),
                    _ => None,
                };
                header.push("min_cost");
                row.push(ct.map(|c| c.min_cost).into());
            }
            let mut t = Table::new(header);
            t.push(row);
            t
        }
        ThresholdKind::TftK => {
            let d = a
                .delta
                .ok_or_else(|| CliError::Usage("--strategy tft-k needs --delta".into()))?;
            let cls = tft_k_classify(&params, d)?;
            let k = match cls.optimal_k {
                DefectionLength::One => "1",
                DefectionLength::Infinity => "infinity",
            };
            let mut t = Table::new(["threshold", "optimal_k"]);
            t.push(vec![cls.threshold.into(), k.into()]);
            t
        }
        ThresholdKind::Asym => {
            let p2 =
                a.p2.ok_or_else(|| CliError::Usage("--strategy asym needs --p2".into()))?;
            let d1 = a.delta.unwrap_or(0.6);
            let one = PlayerProfile::new(a.game.p, params.cost, d1)?;
            let two = player2(&a.game, p2, a.cost2, a.cost2_exp, a.delta2.unwrap_or(d1))?;
            let rep = thresholds_asymmetric(&one, &two, a.game.beta, a.rule.into())?;
            let mut t = Table::new([
                "delta1_star",
                "regime1",
                "delta2_star",
                "regime2",
                "binding_player",
                "sustainable",
            ]);
            t.push(vec![
                rep.player1.delta_star.into(),
                regime_cell(&rep.player1),
                rep.player2.delta_star.into(),
                regime_cell(&rep.player2),
                usize::from(rep.binding_player).into(),
                rep.sustainable.into(),
            ]);
            t
        }
    };
    Ok(Outcome::table(t))
}

fn curves(a: &CurvesArgs) -> Result<Outcome, CliError> {
    let params = a.game.params()?;
    let grid: Vec<f64> = match &a.p_values {
        Some(v) => v.clone(),
        None => {
            if a.points < 2 {
                return Err(Error::AxisTooSmall(a.points).into());
            }
            let n = a.points - 1;
            (0..=n).map(|i| i as f64 / n as f64).collect()
        }
    };
    let samples = defection_curve(&params, a.delta, &grid, pattern(a.pattern, a.k))?;
    let title = format!("V_C and V_D, delta = {}, beta = {}", a.delta, a.game.beta);
    let mut out = Outcome::table(export::curve_table(&samples));
    out.svg = Some(export::curves_svg(&samples, &title));
    out.default_format = Format::Csv;
    Ok(out)
}

fn futile(a: &FutileArgs) -> Result<Outcome, CliError> {
    let params = a.game.params()?;
    let rep = futile_defense(&params, a.delta, pattern(a.pattern, a.k))?;
    let mut t = Table::new(["p_peak", "v_d_max", "exists", "futile_lo", "futile_hi"]);
    t.push(vec![
        rep.p_peak.into(),
        rep.v_d_max.into(),
        rep.exists.into(),
        rep.futile_interval.map(|i| i.0).into(),
        rep.futile_interval.map(|i| i.1).into(),
    ]);
    Ok(Outcome::table(t))
}

fn region(a: &RegionArgs) -> Result<Outcome, CliError> {
    let strategy = match a.strategy {
        RegionStrategy::Grim => SweepStrategy::Grim,
        RegionStrategy::Tft => SweepStrategy::TitForTat,
        RegionStrategy::OneTime => SweepStrategy::OneTimeGrim,
    };
    let spec = SweepSpec {
        strategy,
        cost: CostModel::new(a.cost, a.cost_exp)?,
        beta: a.beta,
        p_axis: Axis::new(a.p_lo, a.p_hi, a.p_points),
        delta_axis: Axis::new(a.delta_lo, a.delta_hi, a.delta_points),
    };
    let grid = region_sweep(&spec)?;
    let title = format!("{:?} cooperation region, beta = {}", a.strategy, a.beta);
    let mut out = Outcome::table(export::region_table(&grid));
    out.svg = Some(export::region_svg(&grid, &title));
    out.default_format = Format::Csv;
    Ok(out)
}

fn multi(a: &MultiArgs) -> Result<Outcome, CliError> {
    let mp = MultiParams::new(
        a.n,
        a.m,
        a.game.p,
        a.game.cost_model()?,
        a.game.beta,
        a.mode.into(),
    )?;
    let pay = multi_stage_payoffs(&mp)?;
    let grim = multi_delta_star(&mp, RepeatedStrategy::Grim)?;
    let tft = multi_delta_star(&mp, RepeatedStrategy::TitForTat)?;
    let gap = mode_discrepancy(&mp)?;
    let mut t = Table::new([
        "r",
        "t",
        "s",
        "q",
        "grim_delta_star",
        "tft_delta_star",
        "t_gap",
        "q_gap",
    ]);
    t.push(vec![
        pay.r.into(),
        pay.t.into(),
        pay.s.into(),
        pay.q.into(),
        grim.delta_star.into(),
        tft.delta_star.into(),
        gap.t_gap.into(),
        gap.q_gap.into(),
    ]);
    Ok(Outcome::table(t))
}

fn trend(a: &MultiTrendArgs) -> Result<Outcome, CliError> {
    let tr = multi_trend(
        a.n,
        a.game.p,
        a.game.cost_model()?,
        a.game.beta,
        a.rule.into(),
        a.mode.into(),
    )?;
    let mut t = Table::new(["m", "delta_star"]);
    for &(m, d) in &tr.points {
        t.push(vec![m.into(), d.into()]);
    }
    let mut out = Outcome::table(t);
    let mut extra = serde_json::Map::new();
    extra.insert(
        "tail_monotone_decreasing".into(),
        json!(tr.tail_monotone_decreasing),
    );
    out.summary = Some(extra);
    Ok(out)
}

fn simulate(a: &SimulateArgs) -> Result<Outcome, CliError> {
    let params = a.game.params()?.with_timing(a.timing.into());
    let game = match a.p2 {
        None => StageGame::symmetric(&params),
        Some(p2) => {
            if matches!(a.timing, TimingArg::OneTime) {
                return Err(CliError::Usage("--p2 supports recurring costs only".into()));
            }
            let one = PlayerProfile::new(a.game.p, params.cost, a.delta)?;
            let two = player2(&a.game, p2, a.cost2, a.cost2_exp, a.delta)?;
            StageGame::asymmetric(&one, &two, a.game.beta)?
        }
    };
    if !(a.horizon_eps > 0.0 && a.horizon_eps < 1.0) {
        return Err(Error::OutOfRange {
            name: "horizon-eps",
            value: a.horizon_eps,
            lo: 0.0,
            hi: 1.0,
        }
        .into());
    }
    let cfg =
        SimConfig::new(game, a.delta, a.episodes, a.seed)?.with_horizon_epsilon(a.horizon_eps);
    let (s1, s2) = (strategy_kind(a.s1, a.k), strategy_kind(a.s2, a.k));
    let rep = estimate_values(s1, s2, &cfg)?;
    let exact = analytic_pair_value(s1, s2, &game, a.delta)?;
    let mut t = Table::new([
        "player",
        "mean",
        "std_error",
        "analytic",
        "episodes",
        "horizon",
    ]);
    for (i, &x) in exact.iter().enumerate() {
        t.push(vec![
            (i + 1).into(),
            rep.mean[i].into(),
            rep.std_error[i].into(),
            x.into(),
            Cell::Int(rep.episodes as i64),
            Cell::Int(rep.horizon as i64),
        ]);
    }
    let mut out = Outcome::table(t);
    out.seed = Some(a.seed);
    Ok(out)
}
