use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Distance from a pole inside which evaluation is refused.
const POLE_GUARD: f64 = 1e-6;

/// `B_{2j}` for `j = 1..=12`.
const BERNOULLI: [f64; 12] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
];

/// Digamma `ψ(x)` for `x > 0`: shift up to `x >= 10` with
/// `ψ(x) = ψ(x+1) − 1/x`, then the asymptotic series in `1/x²`.
pub fn digamma(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::domain(format!("digamma({x}): argument must be > 0")));
    }
    let mut x = x;
    let mut shift = 0.0;
    while x < 10.0 {
        shift -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    // Σ B_{2j}/(2j) x^{-2j}, Horner in x^{-2}
    let mut series = 0.0;
    for j in (0..8).rev() {
        series = series * inv2 + BERNOULLI[j] / (2.0 * (j as f64 + 1.0));
    }
    series *= inv2;
    Ok(shift + x.ln() - 0.5 / x - series)
}

/// `(ζ(s), ζ′(s))` for real `s > 1` by Euler–Maclaurin summation with
/// `N = 20` and twelve Bernoulli corrections.
fn zeta_and_derivative(s: f64) -> (f64, f64) {
    const N: u32 = 20;
    let mut z = 0.0;
    let mut dz = 0.0;
    for n in (1..N).rev() {
        let nf = n as f64;
        let t = nf.powf(-s);
        z += t;
        dz -= nf.ln() * t;
    }
    let nf = N as f64;
    let ln_n = nf.ln();
    let n_s = nf.powf(-s);
    let tail = nf * n_s / (s - 1.0);
    z += tail + 0.5 * n_s;
    dz += -ln_n * tail - tail / (s - 1.0) - 0.5 * ln_n * n_s;

    // rising factorial (s)_{2j-1}, its log-derivative, and N^{-s-2j+1}
    let mut rising = s;
    let mut rising_dlog = 1.0 / s;
    let mut power = n_s / nf;
    let mut factorial = 2.0;
    for (j, b) in BERNOULLI.iter().enumerate() {
        let term = b / factorial * rising * power;
        z += term;
        dz += term * (rising_dlog - ln_n);
        let m = 2.0 * j as f64 + 1.0;
        rising *= (s + m) * (s + m + 1.0);
        rising_dlog += 1.0 / (s + m) + 1.0 / (s + m + 1.0);
        power /= nf * nf;
        factorial *= (m + 2.0) * (m + 3.0);
    }
    (z, dz)
}

/// `ζ′(s)/ζ(s)` on the real line, for `s > 1` or `s < 0`.
///
/// Negative arguments use the reflection identity
/// `ζ′/ζ(s) = log 2π + (π/2)·cot(πs/2) − ψ(1−s) − ζ′/ζ(1−s)`.
/// The strip `[0, 1]` is refused.
pub fn log_deriv_zeta(s: f64) -> Result<f64> {
    if s.is_nan() {
        return Err(Error::domain("log_deriv_zeta(NaN)"));
    }
    if s > 1.0 {
        let (z, dz) = zeta_and_derivative(s);
        return Ok(dz / z);
    }
    if s >= 0.0 {
        return Err(Error::domain(format!("log_deriv_zeta({s}): s in [0, 1] is not supported")));
    }
    let half = s / 2.0;
    if (half - half.round()).abs() * 2.0 < POLE_GUARD {
        return Err(Error::Singularity(format!(
            "log_deriv_zeta({s}): within {POLE_GUARD} of the trivial zero {}",
            2.0 * half.round()
        )));
    }
    let cot = 1.0 / (PI * half).tan();
    Ok((2.0 * PI).ln() + 0.5 * PI * cot - digamma(1.0 - s)? - log_deriv_zeta(1.0 - s)?)
}

/// Logarithmic integral `li(y)` (principal value from 0), `y >= 2`.
///
/// Ramanujan's series below `log y = 40`, the asymptotic expansion above.
pub fn log_integral(y: f64) -> Result<f64> {
    if y.is_nan() || y < 2.0 {
        return Err(Error::domain(format!("log_integral({y}): argument must be >= 2")));
    }
    if y.is_infinite() {
        return Ok(f64::INFINITY);
    }
    let l = y.ln();
    if l >= 40.0 {
        // y/L Σ j!/L^j up to the smallest term
        let mut term = 1.0;
        let mut sum = 1.0;
        for j in 1..200 {
            let next = term * j as f64 / l;
            if next >= term || next < 1e-18 * sum {
                break;
            }
            term = next;
            sum += term;
        }
        return Ok(y / l * sum);
    }
    // γ + ln L + √y Σ_{n≥1} (−1)^{n−1} L^n / (n! 2^{n−1}) Σ_{j<⌈n/2⌉} 1/(2j+1)
    let mut sum = 0.0;
    let mut coeff = 1.0; // L^n / (n! 2^{n-1}), updated incrementally
    let mut inner = 0.0;
    for n in 1..400u32 {
        let nf = n as f64;
        coeff *= if n == 1 { l } else { l / (2.0 * nf) };
        if n % 2 == 1 {
            inner += 1.0 / nf;
        }
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let term = sign * coeff * inner;
        sum += term;
        if n as f64 > l && term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    Ok(EULER_GAMMA + l.ln() + y.sqrt() * sum)
}

/// Residues of `(ζ′/ζ)(s−k) / (s(s+1))` at `s = 0` and `s = −1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResiduePair {
    /// `(ζ′/ζ)(−k)`.
    pub a: f64,
    /// `−(ζ′/ζ)(−1−k)`.
    pub b: f64,
}

pub fn residues_a_b(k: f64) -> Result<ResiduePair> {
    if !k.is_finite() || k <= -1.0 {
        return Err(Error::domain(format!("residues: k = {k} must be > -1")));
    }
    if k > 0.5 && (k - k.round()).abs() < POLE_GUARD {
        return Err(Error::Singularity(format!(
            "residues at k = {k}: -k or -1-k hits a trivial zero of zeta (pole of zeta'/zeta)"
        )));
    }
    let a = if k == 0.0 {
        (2.0 * PI).ln()
    } else if k < 0.0 {
        return Err(Error::domain(format!(
            "residues at k = {k}: needs zeta'/zeta({}) inside the critical strip",
            -k
        )));
    } else {
        log_deriv_zeta(-k)?
    };
    let b = -log_deriv_zeta(-1.0 - k)?;
    Ok(ResiduePair { a, b })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digamma_values() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-14);
        assert!((digamma(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-14);
        // ψ(1/2) = −γ − 2 ln 2
        assert!((digamma(0.5).unwrap() + EULER_GAMMA + 2.0 * 2f64.ln()).abs() < 1e-14);
        assert!(digamma(0.0).is_err());
        assert!(digamma(-1.5).is_err());
    }

    #[test]
    fn digamma_recurrence() {
        let mut x = 0.1;
        while x <= 50.0 {
            let lhs = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
            assert!((lhs - 1.0 / x).abs() < 1e-12, "x = {x}");
            x += 0.37;
        }
    }

    #[test]
    fn zeta_values() {
        let (z2, _) = zeta_and_derivative(2.0);
        assert!((z2 - PI * PI / 6.0).abs() < 1e-15);
        let (z4, _) = zeta_and_derivative(4.0);
        assert!((z4 - PI.powi(4) / 90.0).abs() < 1e-15);
        // ζ′(2) = −0.93754825431584375...
        let (_, dz2) = zeta_and_derivative(2.0);
        assert!((dz2 + 0.937_548_254_315_843_8).abs() < 1e-14);
    }

    #[test]
    fn log_deriv_zeta_domain() {
        assert!(matches!(log_deriv_zeta(0.5), Err(Error::Domain(_))));
        assert!(matches!(log_deriv_zeta(0.0), Err(Error::Domain(_))));
        assert!(matches!(log_deriv_zeta(1.0), Err(Error::Domain(_))));
        assert!(matches!(log_deriv_zeta(-2.0), Err(Error::Singularity(_))));
        assert!(matches!(log_deriv_zeta(-4.0 + 1e-7), Err(Error::Singularity(_))));
        assert!(log_deriv_zeta(-4.0 + 1e-5).is_ok());
        let v = log_deriv_zeta(4.0).unwrap();
        assert!(v < 0.0 && v.is_finite());
    }

    #[test]
    fn log_deriv_zeta_near_zero_from_left() {
        // ζ′/ζ(0) = log 2π; the reflection formula approaches it continuously
        let v = log_deriv_zeta(-1e-4).unwrap();
        assert!((v - (2.0 * PI).ln()).abs() < 1e-3);
    }

    #[test]
    fn log_deriv_zeta_minus_one() {
        // ζ′(−1) = 1/12 − ln A, ζ(−1) = −1/12  (A: Glaisher–Kinkelin)
        let glaisher: f64 = 1.282_427_129_100_622_6;
        let expected = 12.0 * glaisher.ln() - 1.0;
        assert!((log_deriv_zeta(-1.0).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn log_integral_values() {
        assert!((log_integral(2.0).unwrap() - 1.045_163_780_117_492_8).abs() < 1e-14);
        assert!((log_integral(1e6).unwrap() - 78_627.549_159_462_18).abs() < 1e-8);
        assert!(log_integral(1.5).is_err());
        // either side of the switch to the asymptotic series (mpmath values)
        let below = log_integral(39.999f64.exp()).unwrap();
        let above = log_integral(40.0f64.exp()).unwrap();
        assert!((below / 6_033_836_499_765_537.7 - 1.0).abs() < 1e-13);
        assert!((above / 6_039_718_263_611_241.6 - 1.0).abs() < 1e-13);
    }

    #[test]
    fn residues() {
        let r = residues_a_b(0.0).unwrap();
        assert!((r.a - 1.837_877_066_409_345_5).abs() < 1e-15);
        assert_eq!(r.b, -log_deriv_zeta(-1.0).unwrap());
        let r = residues_a_b(0.5).unwrap();
        assert!(r.a.is_finite() && r.b.is_finite());
        assert!(matches!(residues_a_b(1.0), Err(Error::Singularity(_))));
        assert!(matches!(residues_a_b(2.0 + 1e-8), Err(Error::Singularity(_))));
        assert!(matches!(residues_a_b(-0.5), Err(Error::Domain(_))));
        assert!(matches!(residues_a_b(-1.0), Err(Error::Domain(_))));
    }
}
