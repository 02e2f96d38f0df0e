use thiserror::Error;

/// Errors raised when an analysis is asked to evaluate outside its domain.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} must lie in [{lo}, {hi}], got {value}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("discount factor must satisfy 0 <= delta < 1, got {0}")]
    Discount(f64),

    #[error("one-time fixed cost timing is not handled here; use delta_star_one_time")]
    OneTimeTimingNotSupported,

    #[error("one-time fixed cost requires a constant cost model (exponent 0), got exponent {0}")]
    OneTimeNeedsConstantCost(f64),

    #[error("defection length k must be at least 1")]
    ZeroDefectionRounds,

    #[error("threshold undefined when p = 0")]
    ZeroSuccessRate,

    #[error("probe point within {step} of the {variable} domain boundary")]
    ProbeAtBoundary { variable: &'static str, step: f64 },

    #[error("grid must not be empty")]
    EmptyGrid,

    #[error("axis needs at least 2 points, got {0}")]
    AxisTooSmall(usize),

    #[error("invalid player counts: need n >= 2 and 1 <= m < n, got n = {n}, m = {m}")]
    PlayerCount { n: usize, m: usize },

    #[error("success draw supplied for cooperating player {0}")]
    DrawForCooperator(usize),

    #[error("missing success draw for attacking player {0}")]
    MissingDraw(usize),

    #[error("episode count must be positive")]
    NoEpisodes,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name,
            value,
            lo: 0.0,
            hi: 1.0,
        })
    }
}

pub(crate) fn check_discount(delta: f64) -> Result<()> {
    if (0.0..1.0).contains(&delta) {
        Ok(())
    } else {
        Err(Error::Discount(delta))
    }
}
