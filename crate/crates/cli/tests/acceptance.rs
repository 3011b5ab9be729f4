//! Numbered acceptance criteria. Prints one PASS/FAIL line each. Failures make
//! the process exit non-zero only when SOCLAB_ACCEPTANCE_STRICT is set.

use soclab_core::metadist::{eta_beta_approx, eta_gil_pelaez, lambda_eps, GilPelaezConfig, Method};
use soclab_core::netmodel::{mean_success, moment_real, LinkDistanceModel, ModelParams};
use soclab_core::simcore::*;
use soclab_core::socopt::*;
use std::process::Command;
use std::time::Instant;

const FIXED: LinkDistanceModel = LinkDistanceModel::Fixed { r: 1.0 };
const RAY: LinkDistanceModel = LinkDistanceModel::RayleighNearest { mu: 1.0 };

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn near(x: f64, want: f64, tol: f64) -> bool {
    (x - want).abs() <= tol
}

fn c1() -> Outcome {
    let ps = mean_success(&ModelParams::unit_fixed(1.0 / 3.0, 1.0, 0.1, 4.0).unwrap());
    (near(ps, 0.5944, 5e-4), format!("p_s = {ps:.6}"))
}

fn c2() -> Outcome {
    let (tc, nu) = transmission_capacity(0.1, 0.1, 4.0).unwrap();
    (near(tc, 0.0608, 5e-4) && near(nu, 0.0675, 5e-4), format!("c = {tc:.6} at λp = {nu:.6}"))
}

fn c3() -> Outcome {
    let s = soc_optimize(0.1, 0.1, 4.0, FIXED, SocMethod::Exact).unwrap();
    let ok = near(s.soc, 0.09227, 1e-3)
        && near(s.lambda_star, 0.23, 0.01)
        && s.p_star == 1.0
        && near(s.ps_star, 0.6984, 1e-3);
    (ok, format!("S = {:.6}, λ* = {:.4}, p* = {}, p_s* = {:.4}", s.soc, s.lambda_star, s.p_star, s.ps_star))
}

fn c4() -> Outcome {
    let prm = ModelParams::unit_fixed(0.0675, 1.0, 0.1, 4.0).unwrap();
    let r = eta_gil_pelaez(&prm, 0.1, &GilPelaezConfig::default()).unwrap();
    (near(r.eta, 0.82, 0.01) && near(r.lambda_eps, 0.055, 1e-3), format!("η = {:.5}, λ_ε = {:.5}", r.eta, r.lambda_eps))
}

fn c5() -> Outcome {
    let mut worst = 0f64;
    for nu in [0.01, 0.1, 0.5, 1.0, 3.0] {
        for p in [0.05, 0.2, 0.5, 0.8, 1.0] {
            for alpha in [2.5, 4.0, 6.0] {
                let prm = ModelParams::unit_fixed(nu / p, p, 1.0, alpha).unwrap();
                let m1 = moment_real(&prm, 1.0).unwrap();
                let m2 = moment_real(&prm, 2.0).unwrap();
                let want = m1 * m1 * m1.powf(p * (prm.delta() - 1.0));
                worst = worst.max((m2 - want).abs());
            }
        }
    }
    (worst <= 1e-10, format!("max |M2 − identity| = {worst:.2e} over 75 points"))
}

fn c6() -> Outcome {
    let prm = ModelParams::unit_fixed(0.5, 1.0 / 3.0, 1.0, 4.0).unwrap();
    let cfg = GilPelaezConfig::default();
    let (mut worst, mut at) = (0f64, 0.0);
    for i in 0..50 {
        let eps = 0.01 + 0.49 * i as f64 / 49.0;
        let d = (eta_beta_approx(&prm, eps).unwrap().eta - eta_gil_pelaez(&prm, eps, &cfg).unwrap().eta).abs();
        if d > worst {
            (worst, at) = (d, eps);
        }
    }
    (worst <= 0.01, format!("max |η_beta − η| = {worst:.5} at ε = {at:.3}"))
}

fn c7() -> Outcome {
    let points = [
        (10.0 / 3.0, 0.1, 0.1, 0.5, FIXED),
        (1.0 / 3.0, 1.0, 0.1, 0.1, FIXED),
        (0.5, 1.0 / 3.0, 1.0, 0.3, FIXED),
        (1.0, 1.0, 1.0, 0.3, RAY),
        (0.5, 0.5, 0.1, 0.2, RAY),
    ];
    let mut ok = true;
    let mut worst_z = 0f64;
    let mut min_links = usize::MAX;
    for (i, (lambda, p, theta, eps, link)) in points.into_iter().enumerate() {
        let prm = ModelParams::new(lambda, p, theta, 4.0, link).unwrap();
        let side = (2500.0 / lambda).sqrt().max(12.0);
        let reps = (24_000.0 / (lambda * side * side)).ceil().max(8.0) as usize;
        let d = simulate(&SimConfig::new(prm, side, 100 + i as u64, reps, Boundary::Torus).unwrap()).unwrap();
        min_links = min_links.min(d.num_links);
        let mut check = |est: Estimate, want: f64| {
            let z = (est.value - want).abs() / est.std_err;
            worst_z = worst_z.max(z);
            ok &= z <= 3.0;
        };
        check(
            empirical_meta_batched(&d, eps).unwrap(),
            eta_gil_pelaez(&prm, eps, &GilPelaezConfig::default()).unwrap().eta,
        );
        for b in [1.0, 2.0] {
            check(empirical_moment_batched(&d, b).unwrap(), moment_real(&prm, b).unwrap());
        }
    }
    ok &= min_links >= 10_000;
    (ok, format!("worst |z| = {worst_z:.2}, fewest links = {min_links}"))
}

fn c8() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for link in [FIXED, RAY] {
        for eps in [0.02, 0.05, 0.08, 0.1, 0.15, 0.2, 0.3, 0.4, 0.5, 0.6] {
            let lo = reverse_markov_lower(1, 0.1, eps, 4.0, link).unwrap().value;
            let s = soc_optimize(0.1, eps, 4.0, link, SocMethod::Exact).unwrap().soc;
            let up = tightest_markov_upper(0.1, eps, 4.0, link, BoundMode::Numeric).unwrap();
            let fixed_b = [1.0, 2.0, 4.0].map(|b| markov_upper(b, 0.1, eps, 4.0, link).unwrap());
            let row_ok =
                lo <= s * (1.0 + 1e-4) && s <= up * (1.0 + 1e-4) && fixed_b.iter().all(|&m| up <= m * (1.0 + 1e-10));
            if !row_ok {
                notes.push(format!("{link:?} ε={eps}: {lo:.5} ≤ {s:.5} ≤ {up:.5}"));
            }
            ok &= row_ok;
        }
    }
    let detail = if ok { "20 points ordered".to_string() } else { notes.join("; ") };
    (ok, detail)
}

fn c9() -> Outcome {
    let a = soc_asymptotic(0.1, 1e-3, 4.0, FIXED).unwrap();
    let coef = a.soc / (1e-3f64 / 0.1).sqrt();
    let eta = a.eta_opt.unwrap();
    let s = soc_optimize(0.1, 0.007, 4.0, FIXED, SocMethod::Exact).unwrap();
    let parts =
        [near(coef, 0.15405, 1e-4), near(eta, (-0.5f64).exp(), 1e-4), s.p_star == 1.0 && near(s.ps_star, 0.8964, 5e-3)];
    let tag = |b: bool| if b { "ok" } else { "off" };
    (
        parts.iter().all(|&b| b),
        format!(
            "coefficient {coef:.5} ({}), η {eta:.5} ({}), ε=0.007: p* = {}, p_s* = {:.4} ({})",
            tag(parts[0]),
            tag(parts[1]),
            s.p_star,
            s.ps_star,
            tag(parts[2])
        ),
    )
}

fn c10() -> Outcome {
    let prm = ModelParams::unit_fixed(0.5, 1.0 / 3.0, 1.0, 4.0).unwrap();
    let ratio = |eps: f64| -> Option<f64> {
        let exact = lambda_eps(&prm, eps, Method::GilPelaez).ok()?.lambda_eps;
        let asym = lambda_eps_asymptotic(&prm, eps).ok()?;
        let r = exact / asym;
        (r.is_finite() && r > 0.0).then_some(r)
    };
    let (r2, r3) = (ratio(1e-2), ratio(1e-3));
    let a = matches!((r2, r3), (Some(r2), Some(r3)) if (r3 - 1.0).abs() < (r2 - 1.0).abs());

    let ray = |lambda: f64| {
        let prm = ModelParams::new(lambda, 1.0 / 3.0, 1.0, 4.0, RAY).unwrap();
        lambda_eps(&prm, 1e-3, Method::GilPelaez).unwrap().lambda_eps
    };
    let (l1, l2) = (ray(0.5), ray(1.0));
    let change = (l2 - l1).abs() / l1;
    let b = change < 0.02;
    let show = |r: Option<f64>| r.map_or("not resolvable".to_string(), |r| format!("{r:.4}"));
    (
        a && b,
        format!(
            "(a) ratio at 1e-2 {}, at 1e-3 {} ({}); (b) Rayleigh change {:.2}% ({})",
            show(r2),
            show(r3),
            if a { "ok" } else { "off" },
            100.0 * change,
            if b { "ok" } else { "off" }
        ),
    )
}

fn c11() -> Outcome {
    let prm = ModelParams::unit_fixed(0.0675 / 1e-3, 1e-3, 0.1, 4.0).unwrap();
    let cfg = GilPelaezConfig::default();
    let hi = eta_gil_pelaez(&prm, 0.15, &cfg).unwrap().eta;
    let lo = eta_gil_pelaez(&prm, 0.05, &cfg).unwrap().eta;
    (hi > 0.9 && lo < 0.1, format!("η(ε=0.15) = {hi:.5}, η(ε=0.05) = {lo:.5}"))
}

fn c12() -> Outcome {
    let runs: [&[&str]; 4] = [
        &["soc", "--theta-db", "-10", "--eps", "0.1", "--alpha", "4", "--link", "fixed", "--method", "beta"],
        &["meta", "--preset", "fig8", "--method", "all", "--realizations", "4", "--window", "20", "--seed", "5"],
        &["simulate", "--preset", "fig1", "--window", "15", "--realizations", "4", "--seed", "3", "--json"],
        &["bounds", "--preset", "fig7", "--eps-grid", "0.05,0.2,0.5"],
    ];
    let bin = env!("CARGO_BIN_EXE_soc-lab");
    let mut ok = true;
    for args in runs {
        let once = || Command::new(bin).args(args).output().expect("run soc-lab");
        let (a, b) = (once(), once());
        ok &= a.status.code() == Some(0) && a.stdout == b.stdout && !a.stdout.is_empty();
    }
    (ok, format!("{} commands compared byte for byte", runs.len()))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("mean success probability", c1),
        ("transmission capacity", c2),
        ("SOC optimum, exact method", c3),
        ("meta distribution at the TC point", c4),
        ("second-moment identity", c5),
        ("beta approximation accuracy", c6),
        ("Monte Carlo agreement", c7),
        ("bound ordering", c8),
        ("high-reliability closed forms", c9),
        ("asymptotic convergence", c10),
        ("vanishing-p step behaviour", c11),
        ("CLI reproducibility", c12),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = f();
        if !ok {
            failed.push((i + 1).to_string());
        }
        println!(
            "criterion {:>2} {}: {name}: {detail} [{:.1}s]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64()
        );
    }
    println!("{} of {} criteria pass", criteria.len() - failed.len(), criteria.len());
    if !failed.is_empty() {
        println!("failing: {}", failed.join(", "));
        // a plain workspace test run should still reach the remaining suites
        if std::env::var_os("SOCLAB_ACCEPTANCE_STRICT").is_some() {
            std::process::exit(1);
        }
    }
}
