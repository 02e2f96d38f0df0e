//! Cooperation regions over the (p, delta) plane.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_unit, Error, Result};
use crate::game::{CostModel, CostTiming, GameParams};
use crate::parallel;
use crate::thresholds::{
    delta_star_grim, delta_star_one_time, delta_star_tft, Regime, ThresholdReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepStrategy {
    Grim,
    TitForTat,
    OneTimeGrim,
}

/// `n` cell-centred samples over `(lo, hi)`: `lo + (i + 1/2)(hi - lo)/n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl Axis {
    pub const fn new(lo: f64, hi: f64, n: usize) -> Self {
        Self { lo, hi, n }
    }

    pub fn unit(n: usize) -> Self {
        Self::new(0.0, 1.0, n)
    }

    pub fn points(&self) -> Vec<f64> {
        let w = (self.hi - self.lo) / self.n as f64;
        (0..self.n)
            .map(|i| self.lo + (i as f64 + 0.5) * w)
            .collect()
    }

    fn validate(&self, name: &'static str) -> Result<()> {
        check_unit(name, self.lo)?;
        check_unit(name, self.hi)?;
        if self.n < 2 {
            return Err(Error::AxisTooSmall(self.n));
        }
        if !(self.lo < self.hi) {
            return Err(Error::Invalid(format!(
                "{name} axis needs lo < hi, got [{}, {}]",
                self.lo, self.hi
            )));
        }
        Ok(())
    }
}

pub const DEFAULT_RESOLUTION: usize = 401;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub strategy: SweepStrategy,
    pub cost: CostModel,
    pub beta: f64,
    pub p_axis: Axis,
    pub delta_axis: Axis,
}

impl SweepSpec {
    /// Default 401 x 401 grid over the open unit square.
    pub fn new(strategy: SweepStrategy, cost: CostModel, beta: f64) -> Self {
        Self {
            strategy,
            cost,
            beta,
            p_axis: Axis::unit(DEFAULT_RESOLUTION),
            delta_axis: Axis::unit(DEFAULT_RESOLUTION),
        }
    }

    pub fn with_resolution(mut self, n_p: usize, n_delta: usize) -> Self {
        self.p_axis.n = n_p;
        self.delta_axis.n = n_delta;
        self
    }

    fn threshold_at(&self, p: f64) -> Result<ThresholdReport> {
        let params = GameParams::new(p, self.cost, self.beta)?;
        match self.strategy {
            SweepStrategy::Grim => delta_star_grim(&params),
            SweepStrategy::TitForTat => delta_star_tft(&params),
            SweepStrategy::OneTimeGrim => {
                delta_star_one_time(&params.with_timing(CostTiming::OneTimeFixed))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionGrid {
    pub spec: SweepSpec,
    pub p_values: Vec<f64>,
    pub delta_values: Vec<f64>,
    /// `cells[i][j]`: cooperation sustained at `(p_values[i], delta_values[j])`.
    pub cells: Vec<Vec<bool>>,
    /// Threshold per `p` column.
    pub thresholds: Vec<ThresholdReport>,
}

/// Evaluates the strategy's threshold in every `p` column and marks cells
/// with `delta >= delta*`.
pub fn region_sweep(spec: &SweepSpec) -> Result<RegionGrid> {
    spec.p_axis.validate("p")?;
    spec.delta_axis.validate("delta")?;
    check_unit("beta", spec.beta)?;
    let p_values = spec.p_axis.points();
    let delta_values = spec.delta_axis.points();
    let columns: Vec<(ThresholdReport, Vec<bool>)> = parallel::install(|| {
        p_values
            .par_iter()
            .map(|&p| {
                let th = spec.threshold_at(p)?;
                let col = delta_values.iter().map(|&d| th.sustains(d)).collect();
                Ok((th, col))
            })
            .collect::<Result<_>>()
    })?;
    let (thresholds, cells) = columns.into_iter().unzip();
    Ok(RegionGrid {
        spec: *spec,
        p_values,
        delta_values,
        cells,
        thresholds,
    })
}

/// Fraction of cells where cooperation is sustained.
pub fn region_area(grid: &RegionGrid) -> f64 {
    let total: usize = grid.cells.iter().map(Vec::len).sum();
    if total == 0 {
        return 0.0;
    }
    let on: usize = grid
        .cells
        .iter()
        .map(|c| c.iter().filter(|&&x| x).count())
        .sum();
    on as f64 / total as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryPoint {
    pub p: f64,
    /// Threshold clamped to `[0, 1]` for plotting.
    pub delta_star: f64,
    pub raw_delta_star: f64,
    pub regime: Regime,
}

/// Threshold curve `(p, clamp(delta*, 0, 1))`, one point per `p` column.
pub fn boundary_extract(grid: &RegionGrid) -> Vec<BoundaryPoint> {
    grid.p_values
        .iter()
        .zip(&grid.thresholds)
        .map(|(&p, th)| BoundaryPoint {
            p,
            delta_star: th.delta_star.clamp(0.0, 1.0),
            raw_delta_star: th.delta_star,
            regime: th.regime,
        })
        .collect()
}
