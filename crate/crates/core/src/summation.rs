//! Compensated floating-point accumulation with a running error bound.

use serde::{Deserialize, Serialize};

/// Unit roundoff of `f64` (half an ulp at 1.0).
pub const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;

/// Ulps charged per summand for evaluating it (`powf`, `ln` and up to two
/// products, each within one ulp).
pub const TERM_ULPS: f64 = 4.0;

/// A sum together with a bound on its accumulated rounding error.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct CompensatedSum {
    pub value: f64,
    pub err_bound: f64,
}

impl CompensatedSum {
    pub const ZERO: CompensatedSum = CompensatedSum {
        value: 0.0,
        err_bound: 0.0,
    };

    pub fn exact(value: f64) -> Self {
        CompensatedSum {
            value,
            err_bound: 0.0,
        }
    }

    /// `self - other`, with the bounds added and the subtraction's own
    /// rounding charged.
    pub fn sub(self, other: CompensatedSum) -> CompensatedSum {
        let value = self.value - other.value;
        CompensatedSum {
            value,
            err_bound: self.err_bound + other.err_bound + UNIT_ROUNDOFF * value.abs(),
        }
    }

    /// Multiply by an exactly known scalar.
    pub fn scale(self, factor: f64) -> CompensatedSum {
        let value = self.value * factor;
        CompensatedSum {
            value,
            err_bound: self.err_bound * factor.abs() + UNIT_ROUNDOFF * value.abs(),
        }
    }
}

/// Neumaier (improved Kahan) accumulator.
///
/// The reported bound is `term_err + (2u + 2nu²)·Σ|xᵢ|`, where `term_err`
/// collects the evaluation error charged by [`Accumulator::add_term`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Accumulator {
    sum: f64,
    comp: f64,
    abs_sum: f64,
    term_err: f64,
    count: u64,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add a value that is exact as given.
    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
        self.abs_sum += v.abs();
        self.count += 1;
    }

    /// Add a computed summand, charging [`TERM_ULPS`] of relative error.
    #[inline]
    pub fn add_term(&mut self, v: f64) {
        self.add(v);
        self.term_err += TERM_ULPS * f64::EPSILON * v.abs();
    }

    pub fn len(&self) -> u64 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    pub fn finish(&self) -> CompensatedSum {
        let n = self.count as f64;
        let u = UNIT_ROUNDOFF;
        CompensatedSum {
            value: self.value(),
            err_bound: self.term_err + (2.0 * u + 2.0 * n * u * u) * self.abs_sum,
        }
    }
}

impl Extend<f64> for Accumulator {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for v in iter {
            self.add(v);
        }
    }
}
