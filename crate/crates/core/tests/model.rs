use hyscat::model::{
    centrifugal_approx, potential_approx, potential_exact, transformed_params, Channel, PotentialParams,
};
use proptest::prelude::*;

#[test]
fn exact_potential_against_high_precision_substitution() {
    // −[1 + 5(1 − e^{−0.1})] / (e^{0.1} − 1), evaluated with 40 significant digits.
    let want = -14.032_519_034_954_847_489_867_322_607_48;
    let p = PotentialParams::new(1.0, 5.0, 0.1).unwrap();
    let got = potential_exact(&p, 1.0).unwrap();
    assert!(((got - want) / want).abs() < 2e-16, "{got}");
}

#[test]
fn sigma_is_l_plus_one() {
    let p = PotentialParams::new(1.0, 5.0, 0.1).unwrap();
    for l in 0..=20u32 {
        let t = transformed_params(&p, &Channel::new(l, 0.05).unwrap());
        assert_eq!(t.sigma, l as f64 + 1.0);
        assert_eq!(t.zeta3, (l * (l + 1)) as f64);
    }
}

#[test]
fn exact_potential_far_out() {
    // e^{-αr} is subnormal here and 1 − e^{-αr} rounds to 1.
    let p = PotentialParams::new(2.0, 3.0, 1.0).unwrap();
    let r = 720.0f64;
    let want = -(2.0 + 3.0 / r) * (-r).exp();
    let got = potential_exact(&p, r).unwrap();
    assert!(got < 0.0 && ((got - want) / want).abs() < 1e-9, "{got} vs {want}");
}

fn params() -> impl Strategy<Value = PotentialParams> {
    (0.0..5.0f64, 0.0..10.0f64, 0.01..1.0f64, 0.2..3.0f64, 0.5..2.0f64)
        .prop_map(|(v0, a, alpha, mu, hbar)| PotentialParams::with_units(v0, a, alpha, mu, hbar).unwrap())
}

proptest! {
    #[test]
    fn zeta_difference(p in params(), l in 0u32..20, k in 1e-3..2.0f64) {
        let t = transformed_params(&p, &Channel::new(l, k).unwrap());
        let want = -((l * (l + 1)) as f64) - (k / p.alpha).powi(2);
        let got = t.zeta1 - t.zeta2;
        prop_assert!((got - want).abs() <= 1e-12 * t.zeta2.abs().max(want.abs()));
    }

    #[test]
    fn principal_root_of_zeta1(p in params(), l in 0u32..20, k in 1e-3..2.0f64) {
        let t = transformed_params(&p, &Channel::new(l, k).unwrap());
        let sq = t.sqrt_zeta1 * t.sqrt_zeta1;
        prop_assert!((sq.re - t.zeta1).abs() <= 1e-12 * t.zeta1.abs().max(1e-300));
        prop_assert!(sq.im.abs() <= 1e-12 * t.zeta1.abs());
        if t.zeta1 < 0.0 {
            prop_assert!(t.sqrt_zeta1.re == 0.0 && t.sqrt_zeta1.im > 0.0);
        } else {
            prop_assert!(t.sqrt_zeta1.im == 0.0 && t.sqrt_zeta1.re >= 0.0);
        }
    }

    #[test]
    fn exact_potential_simplification(p in params(), log_r in -3.0..3.0f64) {
        let r = 10f64.powf(log_r);
        let x = p.alpha * r;
        // e^{αr} overflows beyond this.
        prop_assume!(x < 700.0);
        let simple = -p.v0 / x.exp_m1() - p.a * (-x).exp() / r;
        let got = potential_exact(&p, r).unwrap();
        prop_assert!((got - simple).abs() <= 1e-13 * simple.abs());
    }

    #[test]
    fn approximated_potential_is_a_shifted_hulthen(p in params(), log_r in -3.0..3.0f64) {
        let r = 10f64.powf(log_r);
        let shifted = PotentialParams::with_units(p.v0 + p.alpha * p.a, 0.0, p.alpha, p.mu, p.hbar).unwrap();
        prop_assert_eq!(potential_approx(&p, r).unwrap(), potential_exact(&shifted, r).unwrap());
    }

    #[test]
    fn centrifugal_first_order_bound(alpha in 1e-4..1.0f64, ar in 1e-9..0.1f64) {
        let r = ar / alpha;
        // Relative to the approximant: 1 − (1 − e^{−αr})²/(αr)² = αr − O((αr)²).
        let rel = (1.0 - 1.0 / (centrifugal_approx(alpha, r).unwrap() * r * r)).abs();
        prop_assert!(rel <= ar + 4.0 * f64::EPSILON, "αr = {}, rel = {}", ar, rel);
    }
}
