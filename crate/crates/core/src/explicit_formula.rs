//! Truncated explicit formula for `∫_2^x ψ_k`, the exact summation identity
//! behind it, and the averaged oscillation identity for `ψ_k(u) − u^{k+1}/(k+1)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phase::reduced_phase;
use crate::prime_sums::{integral_psi_k_exact, product_err, psi_k_grid, Exponent};
use crate::sieve::{self, floor_limit};
use crate::summation::{Accumulator, UNIT_ROUNDOFF};
use crate::zeta::{residues_a_b, ZeroTable};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExplicitFormulaReport {
    pub x: f64,
    pub k: f64,
    pub zeros_used: usize,
    /// `x^{k+2} / ((k+1)(k+2))`.
    pub main_term: f64,
    /// `Σ_ρ x^{ρ+k+1} / ((ρ+k)(ρ+k+1))` over the zeros used (conjugates paired).
    pub zero_sum: f64,
    /// `−A·x + B`, or 0 when not included.
    pub linear_terms: f64,
    pub linear_included: bool,
    /// `main_term − zero_sum + linear_terms`.
    pub total: f64,
    /// `Σ_{n≤x} (x − n) Λ(n) n^k`.
    pub exact: f64,
    pub abs_residual: f64,
    /// `x^{k+3/2}` times the estimated `Σ 2/γ²` of the omitted zeros.
    pub tail_estimate: f64,
}

/// Evaluate the explicit formula for `∫_2^x ψ_k(t) dt` truncated to the first
/// `count` zeros and compare it with the exact step-function integral.
///
/// `x^{ρ+k+1}` is formed as `x^{k+3/2}·e^{iγ log x}` with the phase reduced
/// by [`reduced_phase`].
pub fn truncated_psi_integral(
    x: f64,
    k: Exponent,
    table: &ZeroTable,
    count: usize,
    include_linear: bool,
) -> Result<ExplicitFormulaReport> {
    if x.is_nan() || x < 4.0 {
        return Err(Error::domain(format!("explicit formula needs x >= 4, got {x}")));
    }
    if count == 0 {
        return Err(Error::domain("explicit formula needs at least one zero"));
    }
    let kk = k.get();
    let linear_terms = if include_linear {
        let r = residues_a_b(kk)?;
        -r.a * x + r.b
    } else {
        0.0
    };
    let main_term = x.powf(kk + 2.0) / ((kk + 1.0) * (kk + 2.0));
    let log_x = x.ln();
    let amplitude = x.powf(kk + 1.5);
    let zeros = table.pair_sum(count, |gamma| {
        let theta = reduced_phase(gamma, log_x);
        let rho_k = Complex64::new(0.5 + kk, gamma);
        let phase = Complex64::new(theta.cos(), theta.sin());
        phase / (rho_k * (rho_k + 1.0))
    })?;
    let zero_sum = amplitude * zeros.value;
    let total = main_term - zero_sum + linear_terms;
    let exact = integral_psi_k_exact(2.0, x, k)?.value;
    Ok(ExplicitFormulaReport {
        x,
        k: kk,
        zeros_used: zeros.zeros_used,
        main_term,
        zero_sum,
        linear_terms,
        linear_included: include_linear,
        total,
        exact,
        abs_residual: (total - exact).abs(),
        tail_estimate: amplitude * zeros.tail_inverse_gamma_sq,
    })
}

/// Outcome of evaluating `∫_2^x ψ_k` along two accumulation routes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub x: f64,
    pub k: f64,
    /// `Σ Λ(n) n^k (x − n)` term by term.
    pub termwise: f64,
    /// `x·ψ_k(x) − Σ Λ(n) n^{k+1}`.
    pub by_parts: f64,
    pub discrepancy: f64,
    /// Sum of both routes' rounding-error bounds.
    pub err_bound: f64,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.discrepancy <= self.err_bound
    }
}

/// Cross-check `∫_2^x ψ_k(t) dt = Σ_{n≤x} (x−n) Λ(n) n^k` by summing once term
/// by term and once in the integrated-by-parts form `x·ψ_k(x) − Σ Λ(n) n^{k+1}`.
pub fn integral_identity_check(x: f64, k: Exponent) -> Result<IdentityCheck> {
    let termwise = integral_psi_k_exact(2.0, x, k)?;
    let mut psi = Accumulator::new();
    let mut moment = Accumulator::new();
    for t in sieve::prime_powers_up_to(floor_limit(x)?)? {
        let n = t.n as f64;
        let w = t.lambda * n.powf(k.get());
        psi.add_term(w);
        moment.add_term(w * n);
    }
    let psi = psi.finish();
    let moment = moment.finish();
    let by_parts = x * psi.value - moment.value;
    let by_parts_err =
        product_err(x, psi) + moment.err_bound + UNIT_ROUNDOFF * by_parts.abs();
    Ok(IdentityCheck {
        x,
        k: k.get(),
        termwise: termwise.value,
        by_parts,
        discrepancy: (termwise.value - by_parts).abs(),
        err_bound: termwise.err_bound + by_parts_err,
    })
}

fn check_window(x: f64, delta: f64) -> Result<()> {
    if x.is_nan() || x < 4.0 {
        return Err(Error::domain(format!("averaging needs x >= 4, got {x}")));
    }
    if delta.is_nan() || delta < 1.0 / (2.0 * x) || delta > 0.5 {
        return Err(Error::domain(format!(
            "delta = {delta} outside the window [1/(2x), 1/2] = [{}, 0.5]",
            1.0 / (2.0 * x)
        )));
    }
    Ok(())
}

/// Average of `ψ_k(u) − u^{k+1}/(k+1)` over `[e^{−δ}x, e^{δ}x]`, evaluated
/// exactly (step part summed, smooth part integrated in closed form).
pub fn littlewood_lhs(x: f64, delta: f64, k: Exponent) -> Result<f64> {
    check_window(x, delta)?;
    let kk = k.get();
    let a = (-delta).exp() * x;
    let b = delta.exp() * x;
    let step = integral_psi_k_exact(a, b, k)?.value;
    let smooth = (b.powf(kk + 2.0) - a.powf(kk + 2.0)) / ((kk + 1.0) * (kk + 2.0));
    Ok((step - smooth) / (b - a))
}

/// `−2x^{k+1/2} Σ_{γ>0} (sin γδ / γδ)(sin(γ log x) / γ)` over the first
/// `count` zeros.
pub fn littlewood_rhs(
    x: f64,
    delta: f64,
    k: Exponent,
    table: &ZeroTable,
    count: usize,
) -> Result<f64> {
    Ok(littlewood_rhs_sum(x, delta, k, table, count)?.0)
}

fn littlewood_rhs_sum(
    x: f64,
    delta: f64,
    k: Exponent,
    table: &ZeroTable,
    count: usize,
) -> Result<(f64, f64)> {
    check_window(x, delta)?;
    let log_x = x.ln();
    let s = table.pair_sum_real(count, |gamma| {
        let window = reduced_phase(gamma, delta).sin() / (gamma * delta);
        window * reduced_phase(gamma, log_x).sin() / gamma
    })?;
    let amplitude = x.powf(k.get() + 0.5);
    Ok((-amplitude * s.value, amplitude * s.tail_inverse_gamma_sq / delta))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LittlewoodReport {
    pub x: f64,
    pub delta: f64,
    pub k: f64,
    pub zeros_used: usize,
    pub lhs: f64,
    pub rhs: f64,
    /// `|lhs − rhs| / x^{k+1/2}`.
    pub normalized_gap: f64,
    /// Size estimate of the omitted zeros' contribution to `rhs`.
    pub tail_estimate: f64,
}

pub fn littlewood(
    x: f64,
    delta: f64,
    k: Exponent,
    table: &ZeroTable,
    count: usize,
) -> Result<LittlewoodReport> {
    let lhs = littlewood_lhs(x, delta, k)?;
    let (rhs, tail_estimate) = littlewood_rhs_sum(x, delta, k, table, count)?;
    Ok(LittlewoodReport {
        x,
        delta,
        k: k.get(),
        zeros_used: count,
        lhs,
        rhs,
        normalized_gap: (lhs - rhs).abs() / x.powf(k.get() + 0.5),
        tail_estimate,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillationPoint {
    pub x: f64,
    /// `(ψ_k(x) − x^{k+1}/(k+1)) / x^{k+1/2}`.
    pub deviation: f64,
    pub running_min: f64,
    pub running_max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OscillationScan {
    pub k: f64,
    pub points: Vec<OscillationPoint>,
    pub min: f64,
    pub max: f64,
    /// Grid points whose deviation has the opposite sign of the previous point.
    pub sign_changes: Vec<f64>,
}

/// Normalized deviation of `ψ_k` from `x^{k+1}/(k+1)` along an ascending grid.
pub fn oscillation_scan(grid: &[f64], k: Exponent) -> Result<OscillationScan> {
    for w in grid.windows(2) {
        if w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less) {
            return Err(Error::domain("oscillation grid must be strictly ascending"));
        }
    }
    if let Some(&x) = grid.iter().find(|&&x| x.is_nan() || x < 16.0) {
        return Err(Error::domain(format!("oscillation grid point {x} below 16")));
    }
    let kk = k.get();
    let psi = psi_k_grid(grid, k)?;
    let mut points = Vec::with_capacity(grid.len());
    let mut sign_changes = Vec::new();
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut prev: Option<f64> = None;
    for (&x, s) in grid.iter().zip(&psi) {
        let deviation = (s.value - x.powf(kk + 1.0) / (kk + 1.0)) / x.powf(kk + 0.5);
        min = min.min(deviation);
        max = max.max(deviation);
        if let Some(p) = prev {
            if p != 0.0 && deviation != 0.0 && (p < 0.0) != (deviation < 0.0) {
                sign_changes.push(x);
            }
        }
        if deviation != 0.0 {
            prev = Some(deviation);
        }
        points.push(OscillationPoint {
            x,
            deviation,
            running_min: min,
            running_max: max,
        });
    }
    Ok(OscillationScan {
        k: kk,
        points,
        min,
        max,
        sign_changes,
    })
}
