use proptest::prelude::*;
use soclab_core::metadist::{eta_beta_approx, eta_gil_pelaez, GilPelaez, GilPelaezConfig};
use soclab_core::netmodel::*;
use soclab_core::specfun::{hyp2f1_a_complex, lambert_w0, reg_inc_beta};
use soclab_core::ComplexValue;

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn binom_general(x: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (x - i as f64) / (i + 1) as f64)
}

#[test]
fn moment_identity_on_grid() {
    let mut count = 0;
    for nu in [0.01, 0.05, 0.2, 0.5, 1.0] {
        for p in [0.05, 0.2, 0.5, 0.8, 1.0] {
            for alpha in [2.5, 4.0, 8.0] {
                let prm = ModelParams::unit_fixed(nu / p, p, 0.7, alpha).unwrap();
                let d = prm.delta();
                let m1 = moment_real(&prm, 1.0).unwrap();
                let m2 = moment_real(&prm, 2.0).unwrap();
                let want = m1 * m1 * m1.powf(p * (d - 1.0));
                assert!((m2 - want).abs() <= 1e-10 * want.max(1e-300), "{nu} {p} {alpha}");
                count += 1;
            }
        }
    }
    assert_eq!(count, 75);
}

#[test]
fn finite_sum_matches_hypergeometric() {
    for b in 1..=6u32 {
        for p in [0.1f64, 0.5, 0.9, 1.0] {
            for delta in [0.25, 0.5, 0.75] {
                let sum: f64 = (1..=b)
                    .map(|k| binom_general(b as f64, k) * binom_general(delta - 1.0, k - 1) * p.powi(k as i32))
                    .sum();
                let h = b as f64 * p * hyp2f1_a_complex(c(1.0 - b as f64, 0.0), 1.0 - delta, 2.0, p).unwrap().re;
                assert!((sum - h).abs() < 1e-12 * sum.abs().max(1.0));
                assert!((diversity_finite_sum(b, p, delta) - sum).abs() < 1e-12 * sum.abs().max(1.0));
            }
        }
    }
}

#[test]
fn diversity_asymptote_improves_with_order() {
    for p in [0.2, 0.5, 1.0] {
        for delta in [0.25, 0.5, 0.75] {
            let err = |b: f64| {
                let d = diversity_poly(c(b, 0.0), p, delta).unwrap().re;
                (d / diversity_poly_asymptotic(b, p, delta) - 1.0).abs()
            };
            assert!(err(1e3) < err(1e2), "p={p} δ={delta}");
        }
    }
}

#[test]
fn scale_invariance_of_moments_and_meta() {
    let cfg = GilPelaezConfig::default();
    for r in [0.5, 2.0, 3.0] {
        let prm = ModelParams::new(0.2, 0.5, 0.3, 4.0, LinkDistanceModel::Fixed { r }).unwrap();
        let unit = normalize_scale(&prm);
        for b in [0.5, 1.0, 3.0] {
            let a = moment_real(&prm, b).unwrap();
            let u = moment_real(&unit, b).unwrap();
            assert!((a - u).abs() < 1e-10);
        }
        let a = moment(&prm, c(0.0, 4.0)).unwrap().value;
        let u = moment(&unit, c(0.0, 4.0)).unwrap().value;
        assert!((a - u).norm() < 1e-10);
        let ea = eta_gil_pelaez(&prm, 0.2, &cfg).unwrap().eta;
        let eu = eta_gil_pelaez(&unit, 0.2, &cfg).unwrap().eta;
        assert!((ea - eu).abs() < 1e-10);
    }
}

#[test]
fn meta_is_a_ccdf_in_eps() {
    let mut gp = GilPelaez::new(GilPelaezConfig::default()).unwrap();
    for link in [LinkDistanceModel::Fixed { r: 1.0 }, LinkDistanceModel::RayleighNearest { mu: 1.0 }] {
        let prm = ModelParams::new(0.5, 0.5, 0.5, 4.0, link).unwrap();
        let etas: Vec<f64> = (1..=50).map(|i| gp.eta(&prm, i as f64 / 51.0).unwrap().eta).collect();
        assert!(etas.windows(2).all(|w| w[1] >= w[0] - 2e-6), "{link:?}");
    }
}

#[test]
fn meta_decreases_with_density() {
    let mut gp = GilPelaez::new(GilPelaezConfig::default()).unwrap();
    let base = ModelParams::unit_fixed(0.1, 0.5, 0.5, 4.0).unwrap();
    let etas: Vec<f64> =
        (0..20).map(|i| gp.eta(&base.with_lambda(0.02 * 1.3f64.powi(i)).unwrap(), 0.2).unwrap().eta).collect();
    assert!(etas.windows(2).all(|w| w[1] <= w[0] + 2e-6), "{etas:?}");
}

#[test]
fn integral_of_meta_recovers_mean() {
    let mut gp = GilPelaez::new(GilPelaezConfig::default()).unwrap();
    for (lambda, p) in [(1.0 / 3.0, 1.0), (10.0 / 3.0, 0.1)] {
        let prm = ModelParams::unit_fixed(lambda, p, 0.1, 4.0).unwrap();
        let n = 200;
        let ys: Vec<f64> = (0..=n)
            .map(|i| {
                let x = i as f64 / n as f64;
                if i == 0 {
                    0.0
                } else if i == n {
                    1.0
                } else {
                    gp.eta(&prm, x).unwrap().eta
                }
            })
            .collect();
        let integral: f64 = ys.windows(2).map(|w| 0.5 * (w[0] + w[1]) / n as f64).sum();
        assert!((integral - mean_success(&prm)).abs() < 2e-3, "{integral}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inc_beta_monotone(y in 0.05f64..20.0, z in 0.05f64..20.0) {
        let mut prev = 0.0;
        for i in 0..=100 {
            let v = reg_inc_beta(i as f64 / 100.0, y, z).unwrap();
            prop_assert!((0.0..=1.0).contains(&v));
            prop_assert!(v >= prev - 1e-14);
            prev = v;
        }
    }

    #[test]
    fn hyp2f1_conjugate_symmetry(u in 0.01f64..300.0, b in 0.05f64..0.95, x in 0.0f64..1.0) {
        let a = hyp2f1_a_complex(c(1.0, u), b, 2.0, x).unwrap();
        let a_neg = hyp2f1_a_complex(c(1.0, -u), b, 2.0, x).unwrap();
        prop_assert!((a - a_neg.conj()).norm() <= 1e-12 * a.norm().max(1.0));
    }

    #[test]
    fn lambert_round_trip(lx in -6.0f64..3.0) {
        let x = 10f64.powf(lx);
        let w = lambert_w0(x).unwrap();
        prop_assert!((w * w.exp() - x).abs() <= 1e-12 * x.max(1.0));
    }

    #[test]
    fn moments_decrease_with_order(nu in 0.01f64..2.0, p in 0.05f64..1.0, alpha in 2.2f64..8.0,
                                   b1 in 0.1f64..5.0, gap in 0.05f64..5.0, ray in any::<bool>()) {
        let link = if ray { LinkDistanceModel::RayleighNearest { mu: 1.0 } } else { LinkDistanceModel::Fixed { r: 1.0 } };
        let prm = ModelParams::new(nu / p, p, 0.5, alpha, link).unwrap();
        let m1 = moment_real(&prm, b1).unwrap();
        let m2 = moment_real(&prm, b1 + gap).unwrap();
        prop_assert!(m2 < m1);
    }

    #[test]
    fn imaginary_moments_are_conjugate(u in 0.01f64..200.0, p in 0.05f64..1.0, alpha in 2.2f64..8.0, ray in any::<bool>()) {
        let link = if ray { LinkDistanceModel::RayleighNearest { mu: 2.0 } } else { LinkDistanceModel::Fixed { r: 1.5 } };
        let prm = ModelParams::new(0.3, p, 0.5, alpha, link).unwrap();
        let a = moment(&prm, c(0.0, u)).unwrap().value;
        let b = moment(&prm, c(0.0, -u)).unwrap().value;
        prop_assert!((a - b.conj()).norm() <= 1e-12);
    }

    #[test]
    fn jensen_and_variance_forms(nu in 0.01f64..2.0, p in 0.05f64..1.0, alpha in 2.2f64..8.0) {
        let prm = ModelParams::unit_fixed(nu / p, p, 0.5, alpha).unwrap();
        let m1 = moment_real(&prm, 1.0).unwrap();
        let m2 = moment_real(&prm, 2.0).unwrap();
        prop_assert!(m2 >= m1 * m1);
        let v = variance_ps(&prm).unwrap();
        prop_assert!((v - variance_ps_identity(&prm)).abs() <= 1e-12);
    }

    #[test]
    fn beta_meta_is_monotone_in_eps(nu in 0.01f64..1.0, p in 0.05f64..1.0, e1 in 0.01f64..0.98, de in 0.0f64..0.5) {
        let prm = ModelParams::unit_fixed(nu / p, p, 0.5, 4.0).unwrap();
        let e2 = (e1 + de).min(0.99);
        let a = eta_beta_approx(&prm, e1).unwrap().eta;
        let b = eta_beta_approx(&prm, e2).unwrap().eta;
        prop_assert!(b >= a - 1e-12);
    }

    #[test]
    fn gil_pelaez_stays_in_unit_interval(nu in 0.01f64..1.0, p in 0.05f64..1.0, eps in 0.02f64..0.9) {
        let prm = ModelParams::unit_fixed(nu / p, p, 0.3, 4.0).unwrap();
        let r = eta_gil_pelaez(&prm, eps, &GilPelaezConfig::default()).unwrap();
        prop_assert!((0.0..=1.0).contains(&r.eta));
        prop_assert!(r.eta <= mean_success(&prm) / (1.0 - eps) + 1e-6);
    }
}
