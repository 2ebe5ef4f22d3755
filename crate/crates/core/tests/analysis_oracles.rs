use pksums_core::analysis::{
    difference_integral, geometric_grid, pi_minus_li, sign_scan, weighted_integral,
};
use pksums_core::Exponent;

fn k(v: f64) -> Exponent {
    Exponent::new(v).unwrap()
}

/// Unsegmented byte sieve, independent of the library's sieve.
fn simple_primes(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Integrate `(π_k(t) − π(t^{k+1})) / t^{k+2}` over `[1, x]` piece by piece
/// between the jumps of both step functions.
fn weighted_integral_oracle(x: f64, kk: f64) -> f64 {
    let k1 = kk + 1.0;
    let mut jumps: Vec<(f64, f64)> = Vec::new();
    for p in simple_primes(x as u64) {
        jumps.push((p as f64, (p as f64).powf(kk)));
    }
    for q in simple_primes(x.powf(k1).floor() as u64) {
        jumps.push(((q as f64).powf(1.0 / k1), -1.0));
    }
    jumps.sort_by(|a, b| a.0.total_cmp(&b.0));
    let antiderivative = |t: f64| -t.powf(-k1) / k1;
    let mut level = 0.0;
    let mut at = 1.0;
    let mut total = 0.0;
    for (t, jump) in jumps {
        let t = t.min(x);
        total += level * (antiderivative(t) - antiderivative(at));
        level += jump;
        at = t;
    }
    total + level * (antiderivative(x) - antiderivative(at))
}

#[test]
fn weighted_integral_matches_piecewise_quadrature() {
    for kk in [0.5, 1.0, 2.0] {
        // the oracle's plain sieve is limited to x^{k+1} <= 1e8
        for x in [5.0f64, 37.5, 200.0, 1000.0].into_iter().filter(|x| x.powf(kk + 1.0) <= 1e8) {
            let closed = weighted_integral(x, k(kk)).unwrap().integral_value;
            let oracle = weighted_integral_oracle(x, kk);
            assert!(
                ((closed - oracle) / oracle.abs().max(1e-300)).abs() < 1e-8,
                "k={kk} x={x}: {closed} vs {oracle}"
            );
        }
    }
}

#[test]
fn weighted_gap_shrinks_for_k_one() {
    let near = weighted_integral(1e2, k(1.0)).unwrap().gap;
    let far = weighted_integral(1e4, k(1.0)).unwrap().gap;
    assert!(far < near, "{far} vs {near}");
}

#[test]
fn difference_integral_vanishes_at_k_zero() {
    for x in geometric_grid(1.0, 1e5, 9) {
        assert_eq!(difference_integral(x, k(0.0)).unwrap().value, 0.0);
    }
}

#[test]
fn sign_scan_k_one_small() {
    let s = sign_scan(k(1.0), 1e4, 25).unwrap();
    assert_eq!(s.values.len(), s.x_samples.len());
    let beyond = s.all_negative_beyond.expect("negative tail");
    assert!(beyond <= 100.0);
}

#[test]
fn pi_minus_li_desk_scale() {
    assert!((pi_minus_li(1e6).unwrap() + 129.55).abs() < 0.01);
    for x in geometric_grid(10.0, 1e7, 30) {
        let e = pi_minus_li(x).unwrap();
        assert!(e < 0.0, "x = {x}");
        assert!(e.abs() / (x.sqrt() * x.ln()) < 1.0);
    }
}
