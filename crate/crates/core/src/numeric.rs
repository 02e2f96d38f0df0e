//! Small derivative-free solvers: bisection and grid-seeded golden-section search.

use crate::error::{Error, Result};

/// Root of `f` on `[lo, hi]` by bisection. `f(lo)` and `f(hi)` must differ in sign
/// (a zero at either end is returned directly).
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::Invalid(format!(
            "bisection bracket [{lo}, {hi}] does not straddle a root"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid == lo || mid == hi {
            return Ok(mid);
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for a maximum of a unimodal `f` on `[lo, hi]`.
pub fn golden_section_max<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
        if x1 >= x2 {
            break;
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}

/// Global maximum of `f` on `[lo, hi]`: a uniform grid of `grid_points` picks the
/// best cell, golden-section refines inside its neighbours.
///
/// Ties go to the smallest argument.
pub fn grid_golden_max<F>(mut f: F, lo: f64, hi: f64, grid_points: usize, tol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    if hi <= lo || grid_points < 2 {
        return (lo, f(lo));
    }
    let n = grid_points - 1;
    let at = |i: usize| {
        if i == n {
            hi
        } else {
            lo + (hi - lo) * i as f64 / n as f64
        }
    };
    let mut best_i = 0;
    let mut best_v = f64::NEG_INFINITY;
    for i in 0..=n {
        let v = f(at(i));
        if v > best_v {
            best_v = v;
            best_i = i;
        }
    }
    let a = at(best_i.saturating_sub(1));
    let b = at((best_i + 1).min(n));
    let (gx, gv) = golden_section_max(&mut f, a, b, tol);

    let mut candidates = [(at(best_i), best_v), (gx, gv), (a, f(a)), (b, f(b))];
    candidates.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut best = candidates[0];
    for c in &candidates[1..] {
        if c.1 > best.1 {
            best = *c;
        }
    }
    best
}
