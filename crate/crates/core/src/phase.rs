//! Phase reduction for `γ·t` with large `γ`.

use std::f64::consts::TAU;

/// Low part of the double-double representation of 2π.
const TAU_LO: f64 = 2.449_293_598_294_706_4e-16;

/// `γ·t` reduced modulo 2π into `[-π, π]`.
///
/// The product is formed exactly as a double-double (`hi + lo`) before the
/// multiple of 2π is removed, so the reduced phase carries an absolute error
/// of a few ulps of π rather than of `γ·t`. Rounding already present in the
/// inputs (e.g. of `t = log x`) is not recovered.
pub fn reduced_phase(gamma: f64, t: f64) -> f64 {
    let hi = gamma * t;
    let lo = gamma.mul_add(t, -hi);
    let n = (hi / TAU).round();
    let r = (-n).mul_add(TAU, hi);
    let r = (-n).mul_add(TAU_LO, r);
    r + lo
}
