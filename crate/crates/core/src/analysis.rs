//! Closed-form evaluation of integrals of `π_k(t) − π(t^{k+1})`, Mertens and
//! `π − li` diagnostics, the smoothed `ψ_k` deviation ratio, and the
//! `0.04621 − 1/(2k+1)` crossover.
//!
//! No generic quadrature is used: every integral reduces to prime sums by
//! integrating the step functions between their jumps.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime_sums::{
    integral_pi_k_exact, integral_pi_power_exact, pi_difference_integral_grid, power_bound,
    prefix_sums, Exponent,
};
use crate::sieve::{self, floor_limit};
use crate::summation::{Accumulator, CompensatedSum};
use crate::zeta::log_integral;

/// Mertens' constant `B = lim (Σ_{p≤x} 1/p − log log x)`.
pub const MERTENS_CONSTANT: f64 = 0.261_497_212_847_642_8;

/// Constant bounding the smoothed deviation ratio (from `Σ_ρ 1/γ² < 0.04620999`).
pub const SMOOTHED_DEVIATION_BOUND: f64 = 0.04621;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightedIntegralReport {
    pub x: f64,
    pub k: f64,
    /// `∫_1^x (π_k(t) − π(t^{k+1})) / t^{k+2} dt`.
    pub integral_value: f64,
    /// `−log(k+1)/(k+1)`, the value as `x → ∞`.
    pub limit_value: f64,
    pub gap: f64,
    /// `−(π_k(x) − π(x^{k+1})) / ((k+1) x^{k+1})`.
    pub boundary_terms: f64,
    /// Rounding-error bound of `integral_value`, dominated by `Σ 1/p`.
    pub err_bound: f64,
    /// Set for `k = 0`, where the integrand vanishes identically.
    pub degenerate: bool,
}

/// `−log(k+1)/(k+1)`.
pub fn weighted_integral_limit(k: Exponent) -> f64 {
    let k1 = k.get() + 1.0;
    -k1.ln() / k1
}

/// `∫_1^x (π_k(t) − π(t^{k+1})) / t^{k+2} dt` on a grid, from
/// `(1/(k+1))[Σ_{p≤x} 1/p − Σ_{p≤x^{k+1}} 1/p] − (π_k(x) − π(x^{k+1}))/((k+1)x^{k+1})`.
pub fn weighted_integral_grid(xs: &[f64], k: Exponent) -> Result<Vec<WeightedIntegralReport>> {
    if let Some(&x) = xs.iter().find(|&&x| x.is_nan() || x < 2.0) {
        return Err(Error::domain(format!("weighted integral needs x >= 2, got {x}")));
    }
    let kk = k.get();
    let k1 = kk + 1.0;
    let mut limits = Vec::with_capacity(2 * xs.len());
    for &x in xs {
        limits.push(floor_limit(x)?);
    }
    for &x in xs {
        limits.push(floor_limit(power_bound(x, k))?);
    }
    let top = limits.iter().copied().max().unwrap_or(0);
    let items = sieve::primes_up_to(top)?.map(|p| {
        let pf = p as f64;
        (p, [1.0 / pf, pf.powf(kk), 1.0])
    });
    let snaps = prefix_sums(items, &limits);
    let n = xs.len();
    let limit_value = weighted_integral_limit(k);
    Ok(xs
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let [recip_lo, pow_lo, _] = snaps[i];
            let [recip_hi, _, count_hi] = snaps[n + i];
            let reciprocal = recip_lo.sub(recip_hi).scale(1.0 / k1);
            let boundary = pow_lo
                .sub(count_hi)
                .scale(-1.0 / (k1 * power_bound(x, k)));
            let value = reciprocal.value + boundary.value;
            WeightedIntegralReport {
                x,
                k: kk,
                integral_value: value,
                limit_value,
                gap: (value - limit_value).abs(),
                boundary_terms: boundary.value,
                err_bound: reciprocal.err_bound + boundary.err_bound + f64::EPSILON * value.abs(),
                degenerate: kk == 0.0,
            }
        })
        .collect())
}

pub fn weighted_integral(x: f64, k: Exponent) -> Result<WeightedIntegralReport> {
    Ok(weighted_integral_grid(&[x], k)?.remove(0))
}

/// `∫_1^x (π_k(t) − π(t^{k+1})) dt`, exactly up to summation error.
pub fn difference_integral(x: f64, k: Exponent) -> Result<CompensatedSum> {
    Ok(integral_pi_k_exact(x, k)?.sub(integral_pi_power_exact(x, k)?))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignScanReport {
    pub k: f64,
    pub x_samples: Vec<f64>,
    /// `∫_1^x (π_k(t) − π(t^{k+1})) dt` at each sample.
    pub values: Vec<f64>,
    pub err_bounds: Vec<f64>,
    /// First sample with a negative value.
    pub first_negative_threshold: Option<f64>,
    /// Smallest sample from which every later sample is negative.
    pub all_negative_beyond: Option<f64>,
    pub degenerate: bool,
}

/// Geometric grid of `samples` points on `[lo, hi]`.
pub fn geometric_grid(lo: f64, hi: f64, samples: usize) -> Vec<f64> {
    if samples == 1 {
        return vec![lo];
    }
    let ratio = (hi / lo).ln() / (samples - 1) as f64;
    (0..samples)
        .map(|i| {
            if i + 1 == samples {
                hi
            } else {
                lo * (ratio * i as f64).exp()
            }
        })
        .collect()
}

/// Evaluate `∫_1^x (π_k − π(t^{k+1}))` on a geometric grid over `[10, x_max]`
/// and locate where it turns and stays negative.
pub fn sign_scan(k: Exponent, x_max: f64, samples: usize) -> Result<SignScanReport> {
    if samples < 2 {
        return Err(Error::domain("sign scan needs at least 2 samples"));
    }
    if x_max.is_nan() || x_max <= 10.0 {
        return Err(Error::domain(format!("sign scan needs x_max > 10, got {x_max}")));
    }
    let xs = geometric_grid(10.0, x_max, samples);
    let sums = pi_difference_integral_grid(&xs, k)?;
    let values: Vec<f64> = sums.iter().map(|s| s.value).collect();
    let first_negative_threshold = xs.iter().zip(&values).find(|(_, &v)| v < 0.0).map(|(&x, _)| x);
    let nonneg_tail = values.iter().rposition(|&v| v >= 0.0);
    let all_negative_beyond = match nonneg_tail {
        None => Some(xs[0]),
        Some(i) => xs.get(i + 1).copied(),
    };
    Ok(SignScanReport {
        k: k.get(),
        x_samples: xs,
        values,
        err_bounds: sums.iter().map(|s| s.err_bound).collect(),
        first_negative_threshold,
        all_negative_beyond,
        degenerate: k.get() == 0.0,
    })
}

/// `Σ_{p≤x} 1/p − log log x`.
pub fn mertens_deviation(x: f64) -> Result<f64> {
    if x.is_nan() || x < 3.0 {
        return Err(Error::domain(format!("mertens_deviation needs x >= 3, got {x}")));
    }
    let mut acc = Accumulator::new();
    for p in sieve::primes_up_to(floor_limit(x)?)? {
        acc.add_term(1.0 / p as f64);
    }
    Ok(acc.value() - x.ln().ln())
}

/// `|∫_2^x (ψ_k(t) − t^{k+1}/(k+1)) / log t dt| · log x / x^{k+3/2}`, for `k > 0`.
///
/// The step part is `Σ_{n≤x} Λ(n) n^k (li(x) − li(n))`; the smooth part is
/// `(li(x^{k+2}) − li(2^{k+2}))/(k+1)` after substituting `u = t^{k+2}`.
pub fn smoothed_deviation_ratio(x: f64, k: Exponent) -> Result<f64> {
    if x.is_nan() || x < 16.0 {
        return Err(Error::domain(format!("smoothed deviation needs x >= 16, got {x}")));
    }
    let kk = k.get();
    if kk <= 0.0 {
        return Err(Error::domain(format!("smoothed deviation needs k > 0, got {kk}")));
    }
    let li_x = log_integral(x)?;
    let mut step = Accumulator::new();
    for t in sieve::prime_powers_up_to(floor_limit(x)?)? {
        let n = t.n as f64;
        step.add_term(t.lambda * n.powf(kk) * (li_x - log_integral(n)?));
    }
    let smooth = (log_integral(x.powf(kk + 2.0))? - log_integral(2f64.powf(kk + 2.0))?) / (kk + 1.0);
    Ok((step.value() - smooth).abs() * x.ln() / x.powf(kk + 1.5))
}

/// `0.04621 − 1/(2k+1)`; negative exactly when the unweighted integral is
/// forced negative for large `x`.
pub fn crossover(k: f64) -> Result<f64> {
    if k.is_nan() || k <= -0.5 {
        return Err(Error::domain(format!("crossover needs k > -1/2, got {k}")));
    }
    Ok(SMOOTHED_DEVIATION_BOUND - 1.0 / (2.0 * k + 1.0))
}

/// Root of [`crossover`], by bisection on `[0, 1000]`.
pub fn crossover_root() -> f64 {
    let (mut lo, mut hi) = (0.0f64, 1000.0f64);
    while hi - lo > 1e-13 * hi {
        let mid = 0.5 * (lo + hi);
        if crossover(mid).expect("mid > -1/2") < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `E(x) = π(x) − li(x)`.
pub fn pi_minus_li(x: f64) -> Result<f64> {
    if x.is_nan() || x < 2.0 {
        return Err(Error::domain(format!("pi_minus_li needs x >= 2, got {x}")));
    }
    Ok(sieve::count_primes(x)? as f64 - log_integral(x)?)
}
