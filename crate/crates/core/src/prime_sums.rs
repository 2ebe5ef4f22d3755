//! Prime-power sums `π_k`, `ψ_k`, `Π_k` and exact integrals of these step
//! functions, accumulated with error-bounded compensated summation.
//!
//! `p^k` is evaluated with `powf`; every summand is charged
//! [`TERM_ULPS`](crate::summation::TERM_ULPS) of evaluation error on top of
//! the summation bound. Terms are always added in ascending order, so values
//! are reproducible bit for bit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sieve::{self, floor_limit, iroot};
use crate::summation::{Accumulator, CompensatedSum, UNIT_ROUNDOFF};

/// Real exponent `k > -1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Exponent(f64);

impl Exponent {
    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() || k <= -1.0 {
            return Err(Error::domain(format!("exponent k = {k} must be finite and > -1")));
        }
        Ok(Exponent(k))
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Exponent {
    type Error = Error;
    fn try_from(k: f64) -> Result<Self> {
        Exponent::new(k)
    }
}

impl From<Exponent> for f64 {
    fn from(k: Exponent) -> f64 {
        k.0
    }
}

fn check_x(x: f64, min: f64, what: &str) -> Result<()> {
    if x.is_nan() || x < min {
        return Err(Error::domain(format!("{what}: x = {x} must be >= {min}")));
    }
    Ok(())
}

/// `x^(k+1)`, the bound of the companion count `π(x^{k+1})`.
pub fn power_bound(x: f64, k: Exponent) -> f64 {
    x.powf(k.get() + 1.0)
}

/// `π_k(x) = Σ_{p≤x} p^k`.
pub fn pi_k(x: f64, k: Exponent) -> Result<CompensatedSum> {
    check_x(x, 0.0, "pi_k")?;
    let mut acc = Accumulator::new();
    for p in sieve::primes_up_to(floor_limit(x)?)? {
        acc.add_term((p as f64).powf(k.get()));
    }
    Ok(acc.finish())
}

/// `ψ_k(x) = Σ_{n≤x} Λ(n) n^k`.
pub fn psi_k(x: f64, k: Exponent) -> Result<CompensatedSum> {
    check_x(x, 0.0, "psi_k")?;
    let mut acc = Accumulator::new();
    for t in sieve::prime_powers_up_to(floor_limit(x)?)? {
        acc.add_term(t.lambda * (t.n as f64).powf(k.get()));
    }
    Ok(acc.finish())
}

/// The terms `(1/m)·π_{mk}(x^{1/m})` of `Π_k(x)`, for `m = 1, 2, …` while
/// `x^{1/m} >= 2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PiDecomposition {
    pub x: f64,
    pub k: f64,
    /// `terms[m-1]` is `(1/m)·π_{mk}(x^{1/m})`.
    pub terms: Vec<CompensatedSum>,
}

impl PiDecomposition {
    /// `π_k(x)`.
    pub fn head(&self) -> f64 {
        self.terms.first().map_or(0.0, |t| t.value)
    }

    /// `½π_{2k}(x^{1/2})`.
    pub fn second(&self) -> f64 {
        self.terms.get(1).map_or(0.0, |t| t.value)
    }

    /// Everything from `m = 3` on.
    pub fn tail(&self) -> f64 {
        let mut acc = Accumulator::new();
        acc.extend(self.terms.iter().skip(2).map(|t| t.value));
        acc.value()
    }

    pub fn total(&self) -> CompensatedSum {
        let mut acc = Accumulator::new();
        let mut err = 0.0;
        for t in &self.terms {
            acc.add(t.value);
            err += t.err_bound;
        }
        let mut s = acc.finish();
        s.err_bound += err;
        s
    }
}

pub fn capital_pi_decomposition(x: f64, k: Exponent) -> Result<PiDecomposition> {
    check_x(x, 0.0, "capital_pi_k")?;
    let n = floor_limit(x)?;
    let mut terms = Vec::new();
    let mut m = 1u32;
    loop {
        let root = iroot(n, m);
        if root < 2 {
            break;
        }
        let exponent = m as f64 * k.get();
        let mut acc = Accumulator::new();
        for p in sieve::primes_up_to(root)? {
            acc.add_term((p as f64).powf(exponent));
        }
        terms.push(acc.finish().scale(1.0 / m as f64));
        m += 1;
    }
    Ok(PiDecomposition {
        x,
        k: k.get(),
        terms,
    })
}

/// `Π_k(x) = Σ_m (1/m) π_{mk}(x^{1/m})`.
pub fn capital_pi_k(x: f64, k: Exponent) -> Result<CompensatedSum> {
    Ok(capital_pi_decomposition(x, k)?.total())
}

/// `Π_k(x) = Σ_{n≤x} Λ(n) n^k / log n`, summed over prime powers.
pub fn capital_pi_k_via_lambda(x: f64, k: Exponent) -> Result<CompensatedSum> {
    check_x(x, 0.0, "capital_pi_k_via_lambda")?;
    let mut acc = Accumulator::new();
    for t in sieve::prime_powers_up_to(floor_limit(x)?)? {
        let n = t.n as f64;
        acc.add_term(t.lambda * n.powf(k.get()) / n.ln());
    }
    Ok(acc.finish())
}

/// `π_k(x) − π(x^{k+1})`.
pub fn delta_k(x: f64, k: Exponent) -> Result<f64> {
    check_x(x, 2.0, "delta_k")?;
    let companion = sieve::count_primes(power_bound(x, k))?;
    Ok(pi_k(x, k)?.value - companion as f64)
}

/// `Δ_k(x)` scaled by the natural oscillation size: `log x / x^{k+1/2}`
/// for `k > 0`, `log x / x^{(k+1)/2}` for `-1 < k < 0`.
pub fn normalized_delta(x: f64, k: Exponent) -> Result<f64> {
    check_x(x, 16.0, "normalized_delta")?;
    let kk = k.get();
    if kk == 0.0 {
        return Err(Error::domain("normalized_delta is undefined at k = 0 (Δ vanishes identically)"));
    }
    let scale = if kk > 0.0 {
        x.powf(kk + 0.5)
    } else {
        x.powf((kk + 1.0) / 2.0)
    };
    Ok(delta_k(x, k)? * x.ln() / scale)
}

/// `∫_a^b ψ_k(t) dt = Σ_{n≤b} Λ(n) n^k (b − max(a, n))`, exactly.
pub fn integral_psi_k_exact(a: f64, b: f64, k: Exponent) -> Result<CompensatedSum> {
    check_x(a, 2.0, "integral_psi_k_exact lower limit")?;
    if b.is_nan() || b < a {
        return Err(Error::domain(format!("integral_psi_k_exact: need a <= b, got [{a}, {b}]")));
    }
    let mut acc = Accumulator::new();
    for t in sieve::prime_powers_up_to(floor_limit(b)?)? {
        let n = t.n as f64;
        acc.add_term(t.lambda * n.powf(k.get()) * (b - a.max(n)));
    }
    Ok(acc.finish())
}

/// `∫_1^x π_k(t) dt = Σ_{p≤x} p^k (x − p)`.
pub fn integral_pi_k_exact(x: f64, k: Exponent) -> Result<CompensatedSum> {
    check_x(x, 1.0, "integral_pi_k_exact")?;
    let mut acc = Accumulator::new();
    for p in sieve::primes_up_to(floor_limit(x)?)? {
        let pf = p as f64;
        acc.add_term(pf.powf(k.get()) * (x - pf));
    }
    Ok(acc.finish())
}

/// `∫_1^x π(t^{k+1}) dt = Σ_{q≤x^{k+1}} (x − q^{1/(k+1)})`; the step
/// function jumps at `t = q^{1/(k+1)}`.
pub fn integral_pi_power_exact(x: f64, k: Exponent) -> Result<CompensatedSum> {
    check_x(x, 1.0, "integral_pi_power_exact")?;
    let inv = 1.0 / (k.get() + 1.0);
    let mut acc = Accumulator::new();
    for q in sieve::primes_up_to(floor_limit(power_bound(x, k))?)? {
        acc.add_term(x - (q as f64).powf(inv));
    }
    Ok(acc.finish())
}

/// Compensated prefix sums of a stream of `(position, terms)` pairs taken at
/// each of `limits` (sums over `position <= limit`). `limits` may be in any
/// order; the stream must be ascending in position.
pub(crate) fn prefix_sums<const N: usize, I>(items: I, limits: &[u64]) -> Vec<[CompensatedSum; N]>
where
    I: IntoIterator<Item = (u64, [f64; N])>,
{
    let mut order: Vec<usize> = (0..limits.len()).collect();
    order.sort_by_key(|&i| limits[i]);
    let mut out = vec![[CompensatedSum::ZERO; N]; limits.len()];
    let mut accs = [Accumulator::new(); N];
    let mut next = 0;
    let snapshot = |accs: &[Accumulator; N]| std::array::from_fn(|j| accs[j].finish());
    for (pos, terms) in items {
        while next < order.len() && pos > limits[order[next]] {
            out[order[next]] = snapshot(&accs);
            next += 1;
        }
        if next == order.len() {
            break;
        }
        for (acc, t) in accs.iter_mut().zip(terms) {
            acc.add_term(t);
        }
    }
    while next < order.len() {
        out[order[next]] = snapshot(&accs);
        next += 1;
    }
    out
}

/// `ψ_k` on a grid in one pass over the prime powers.
pub fn psi_k_grid(xs: &[f64], k: Exponent) -> Result<Vec<CompensatedSum>> {
    for &x in xs {
        check_x(x, 0.0, "psi_k")?;
    }
    let limits = xs.iter().map(|&x| floor_limit(x)).collect::<Result<Vec<_>>>()?;
    let top = limits.iter().copied().max().unwrap_or(0);
    let items = sieve::prime_powers_up_to(top)?
        .map(|t| (t.n, [t.lambda * (t.n as f64).powf(k.get())]));
    Ok(prefix_sums(items, &limits).into_iter().map(|[s]| s).collect())
}

/// `∫_1^x (π_k(t) − π(t^{k+1})) dt` on a grid in one pass over the primes,
/// as `x·(π_k(x) − π(x^{k+1})) − (Σ_{p≤x} p^{k+1} − Σ_{q≤x^{k+1}} q^{1/(k+1)})`.
pub fn pi_difference_integral_grid(xs: &[f64], k: Exponent) -> Result<Vec<CompensatedSum>> {
    for &x in xs {
        check_x(x, 1.0, "integral of pi_k - pi(t^(k+1))")?;
    }
    let kk = k.get();
    let inv = 1.0 / (kk + 1.0);
    let lower = xs.iter().map(|&x| floor_limit(x)).collect::<Result<Vec<_>>>()?;
    let upper = xs
        .iter()
        .map(|&x| floor_limit(power_bound(x, k)))
        .collect::<Result<Vec<_>>>()?;
    let mut limits = lower.clone();
    limits.extend_from_slice(&upper);
    let top = limits.iter().copied().max().unwrap_or(0);
    // [p^k, p^{k+1}, 1, p^{1/(k+1)}]
    let items = sieve::primes_up_to(top)?.map(|p| {
        let pf = p as f64;
        let pk = pf.powf(kk);
        (p, [pk, pk * pf, 1.0, pf.powf(inv)])
    });
    let snaps = prefix_sums(items, &limits);
    let n = xs.len();
    Ok(xs
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let lo = &snaps[i];
            let hi = &snaps[n + i];
            let weight = lo[0].sub(hi[2]).scale(x);
            let moments = lo[1].sub(hi[3]);
            weight.sub(moments)
        })
        .collect())
}

/// Round-off charged for an `x·value` product computed in floating point.
pub(crate) fn product_err(x: f64, s: CompensatedSum) -> f64 {
    x.abs() * s.err_bound + UNIT_ROUNDOFF * (x * s.value).abs()
}
