use criterion::{criterion_group, criterion_main, Criterion};
use soclab_core::metadist::{eta_beta_approx, eta_gil_pelaez, GilPelaez, GilPelaezConfig};
use soclab_core::netmodel::{diversity_poly, LinkDistanceModel, ModelParams};
use soclab_core::simcore::{simulate, Boundary, SimConfig};
use soclab_core::socopt::{soc_optimize, SocMethod};
use soclab_core::ComplexValue;
use std::hint::black_box;

fn diversity(c: &mut Criterion) {
    c.bench_function("D_ju complex order", |b| {
        b.iter(|| diversity_poly(black_box(ComplexValue::new(0.0, 7.3)), black_box(0.4), black_box(0.5)).unwrap())
    });
}

fn meta(c: &mut Criterion) {
    let prm = ModelParams::unit_fixed(1.0 / 3.0, 1.0, 0.1, 4.0).unwrap();
    let cfg = GilPelaezConfig::default();
    c.bench_function("eta gil-pelaez, fresh cache", |b| b.iter(|| eta_gil_pelaez(black_box(&prm), 0.1, &cfg).unwrap()));
    let mut gp = GilPelaez::new(cfg).unwrap();
    c.bench_function("eta gil-pelaez, warm cache", |b| b.iter(|| gp.eta(black_box(&prm), 0.1).unwrap()));
    c.bench_function("eta beta", |b| b.iter(|| eta_beta_approx(black_box(&prm), 0.1).unwrap()));
}

fn optimize(c: &mut Criterion) {
    let fixed = LinkDistanceModel::Fixed { r: 1.0 };
    let mut g = c.benchmark_group("soc_optimize");
    g.sample_size(10);
    g.bench_function("beta", |b| {
        b.iter(|| soc_optimize(0.1, black_box(0.1), 4.0, fixed, SocMethod::BetaApprox).unwrap())
    });
    g.bench_function("exact", |b| b.iter(|| soc_optimize(0.1, black_box(0.1), 4.0, fixed, SocMethod::Exact).unwrap()));
    g.finish();
}

fn monte_carlo(c: &mut Criterion) {
    let prm = ModelParams::unit_fixed(1.0 / 3.0, 1.0, 0.1, 4.0).unwrap();
    let cfg = SimConfig::new(prm, 40.0, 1, 4, Boundary::Torus).unwrap();
    let mut g = c.benchmark_group("simulate");
    g.sample_size(10);
    g.bench_function("4 realizations, ~530 links each", |b| b.iter(|| simulate(black_box(&cfg)).unwrap()));
    g.finish();
}

criterion_group!(benches, diversity, meta, optimize, monte_carlo);
criterion_main!(benches);
