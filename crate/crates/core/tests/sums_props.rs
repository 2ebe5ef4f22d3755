use pksums_core::prime_sums::{
    capital_pi_k, capital_pi_k_via_lambda, delta_k, integral_psi_k_exact, pi_k, psi_k,
};
use pksums_core::sieve::count_primes;
use pksums_core::Exponent;
use proptest::prelude::*;

fn k(v: f64) -> Exponent {
    Exponent::new(v).unwrap()
}

#[test]
fn step_integral_example_to_ten() {
    // brute force: Σ_{n≤10} Λ(n)(10 − n) over n ∈ {2,3,4,5,7,8,9}
    let terms = [(2, 2.0), (3, 3.0), (4, 2.0), (5, 5.0), (7, 7.0), (8, 2.0), (9, 3.0)];
    let expected: f64 = terms.iter().map(|&(n, p): &(i32, f64)| p.ln() * (10 - n) as f64).sum();
    let v = integral_psi_k_exact(2.0, 10.0, k(0.0)).unwrap();
    assert!((v.value - expected).abs() <= v.err_bound + 1e-14);
}

/// Midpoint sums of the step function ψ_k converge to the exact integral.
#[test]
fn midpoint_sums_converge_to_exact_integral() {
    let (a, b, kk) = (2.5, 60.0, 0.7);
    let exact = integral_psi_k_exact(a, b, k(kk)).unwrap().value;
    // ψ_k on a fine table
    let psi = |t: f64| psi_k(t, k(kk)).unwrap().value;
    let mut prev_err = f64::INFINITY;
    for steps in [100usize, 1000, 10_000] {
        let h = (b - a) / steps as f64;
        let sum: f64 = (0..steps).map(|i| psi(a + (i as f64 + 0.5) * h)).sum::<f64>() * h;
        let err = (sum - exact).abs();
        assert!(err < prev_err * 1.01 || err < 1e-9);
        prev_err = err;
    }
    assert!(prev_err / exact < 1e-3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn two_routes_to_capital_pi_agree(x in 2.0f64..200_000.0, kk in -0.9f64..3.0) {
        let a = capital_pi_k(x, k(kk)).unwrap().value;
        let b = capital_pi_k_via_lambda(x, k(kk)).unwrap().value;
        prop_assert!((a - b).abs() / a.abs().max(1.0) <= 1e-10, "{} vs {}", a, b);
    }

    #[test]
    fn capital_pi_dominates_pi_k(x in 2.0f64..100_000.0, kk in -0.99f64..3.0) {
        prop_assert!(capital_pi_k(x, k(kk)).unwrap().value >= pi_k(x, k(kk)).unwrap().value);
    }

    #[test]
    fn chebyshev_lower_bound(x in 2.0f64..100_000.0) {
        let psi = psi_k(x, k(0.0)).unwrap().value;
        prop_assert!(psi >= count_primes(x).unwrap() as f64 * 2f64.ln());
    }

    #[test]
    fn step_integral_is_additive(b in 2.0f64..20_000.0, extra in 0.0f64..20_000.0, kk in -0.5f64..2.0) {
        let c = b + extra;
        let left = integral_psi_k_exact(2.0, b, k(kk)).unwrap();
        let right = integral_psi_k_exact(b, c, k(kk)).unwrap();
        let whole = integral_psi_k_exact(2.0, c, k(kk)).unwrap();
        let gap = (left.value + right.value - whole.value).abs();
        let tol = left.err_bound + right.err_bound + whole.err_bound
            + f64::EPSILON * (left.value + right.value).abs();
        prop_assert!(gap <= tol, "gap {} tol {}", gap, tol);
    }

    #[test]
    fn delta_vanishes_at_k_zero(x in 2.0f64..1e6) {
        prop_assert_eq!(delta_k(x, k(0.0)).unwrap(), 0.0);
    }
}
