//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(x: f64) -> Q {
    BigRational::from_float(x).expect("finite")
}

pub fn qi(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Stage payoffs `(R, T, S, Q)` in exact arithmetic.
pub fn exact_table(p: &Q, c: &Q, beta: &Q) -> (Q, Q, Q, Q) {
    let half = Q::new(BigInt::from(1), BigInt::from(2));
    let one_m = Q::one() - p;
    let r = half.clone();
    let t = p + &one_m * &half - c;
    let s = &one_m * &half;
    let qq = p * p * beta * &half + p * &one_m + &one_m * &one_m * &half - c;
    (r, t, s, qq)
}

/// `delta^k`, exactly.
pub fn pow(d: &Q, k: u32) -> Q {
    let mut out = Q::one();
    for _ in 0..k {
        out *= d;
    }
    out
}

/// Deviator's values against tit-for-tat when attacking for `k = 1..=k_max` rounds:
/// `V(k) = T + sum_{i=1}^{k-1} d^i Q + d^k S + d^{k+1} R / (1 - d)`.
pub fn exact_k_rounds(table: &(Q, Q, Q, Q), d: &Q, k_max: u32) -> Vec<Q> {
    let (r, t, s, qq) = table;
    let tail = r / (Q::one() - d);
    let mut prefix = t.clone();
    let mut w = d.clone();
    let mut out = Vec::with_capacity(k_max as usize);
    for _ in 0..k_max {
        out.push(&prefix + &w * (s + d * &tail));
        prefix += &w * qq;
        w *= d;
    }
    out
}

/// Attacking forever against tit-for-tat: `T + d Q / (1 - d)`.
pub fn exact_forever(table: &(Q, Q, Q, Q), d: &Q) -> Q {
    let (_, t, _, qq) = table;
    t + d * qq / (Q::one() - d)
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn is_positive(x: &Q) -> bool {
    x.is_positive()
}

pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}

/// Per-player N-player payoffs `(T, S, Q)` by summing over all `2^N` success patterns.
/// Player 0 is the focal attacker.
pub fn enumerate_multi(n: usize, m: usize, p: f64, c: f64, beta: f64) -> (f64, f64, f64) {
    let prob = |mask: u32, bits: usize| {
        (0..bits).fold(1.0, |acc, i| {
            acc * if mask >> i & 1 == 1 { p } else { 1.0 - p }
        })
    };
    let share = 1.0 / n as f64;
    let (mut t, mut s) = (0.0, 0.0);
    for mask in 0..(1u32 << m) {
        let w = prob(mask, m);
        let k = mask.count_ones();
        t += w * match (k, mask & 1) {
            (0, _) => share,
            (_, 1) => 1.0 / f64::from(k),
            _ => 0.0,
        };
        if k == 0 {
            s += w * share;
        }
    }
    let mut qq = 0.0;
    for mask in 0..(1u32 << n) {
        let w = prob(mask, n);
        let k = mask.count_ones() as usize;
        qq += w * if k == n {
            beta * share
        } else if k == 0 {
            share
        } else if mask & 1 == 1 {
            1.0 / k as f64
        } else {
            0.0
        };
    }
    (t - c, s, qq - c)
}

/// Plain bisection on a sign change; independent of the crate's root finder.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> Option<f64> {
    let (flo, fhi) = (f(lo), f(hi));
    if flo.signum() == fhi.signum() {
        return None;
    }
    let lo_sign = flo.signum();
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid).signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-14 {
            break;
        }
    }
    Some(0.5 * (lo + hi))
}
